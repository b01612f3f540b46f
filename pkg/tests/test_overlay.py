"""Overlay geometry: builtin fidelity, hit-testing, bands, labels."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conftest import brute_force_cell_at, brute_force_marker_at, random_point
from tapnav.errors import DomainError
from tapnav.geometry import Point
from tapnav.overlay import (
    SHAPE_CYCLE,
    Axis,
    GridCell,
    MarkerShape,
    MarkerStyle,
    Orientation,
    RowNumbering,
    band_extent,
    builtin_overlay,
    cell_at,
    label_for,
    marker_at,
    markers,
    quadrant_line_positions,
    shape_for,
)


def test_builtin_cutout_matches_published_dimensions(cutout):
    assert cutout.orientation is Orientation.LANDSCAPE
    assert (cutout.screen_width_mm, cutout.screen_height_mm) == (267.0, 167.0)
    assert (cutout.rows, cutout.cols) == (14, 25)
    assert cutout.pitch_mm == 10.0
    assert cutout.marker_size_mm == 7.5
    assert cutout.marker_style is MarkerStyle.CUTOUT_SHAPES
    assert cutout.quadrant_interval == 5
    assert cutout.row_numbering is RowNumbering.BOTTOM_UP


def test_builtin_braille_matches_published_dimensions(braille):
    assert braille.orientation is Orientation.PORTRAIT
    assert (braille.screen_width_mm, braille.screen_height_mm) == (167.0, 267.0)
    assert (braille.rows, braille.cols) == (21, 14)
    assert braille.marker_style is MarkerStyle.BRAILLE_LETTERS
    assert braille.quadrant_interval is None
    assert braille.row_numbering is RowNumbering.TOP_DOWN


def test_builtin_overlays_fit_their_screens(cutout, braille):
    for o in (cutout, braille):
        assert o.cols * o.pitch_mm + 2 * o.margin_mm <= o.screen_width_mm + 1e-9
        assert o.rows * o.pitch_mm + 2 * o.margin_mm <= o.screen_height_mm + 1e-9
        assert o.marker_size_mm < o.pitch_mm


def test_quadrant_lines_after_every_fifth_column(cutout):
    # Dividers sit on the band boundaries after markers 5, 10, 15, 20.
    expected = [cutout.margin_mm + k * 5 * cutout.pitch_mm for k in (1, 2, 3, 4)]
    assert quadrant_line_positions(cutout) == expected
    lines = [m for m in markers(cutout) if m.is_quadrant_line]
    assert len(lines) == 4
    assert all(m.index == 0 for m in lines)


def test_braille_overlay_has_no_quadrant_lines(braille):
    assert quadrant_line_positions(braille) == []
    assert len(markers(braille)) == 21 + 14


def test_labels_tenth_letter_is_j(braille):
    assert label_for(Axis.COLUMN, 10, braille) == "j"
    assert label_for(Axis.COLUMN, 11, braille) == "k"
    assert label_for(Axis.ROW, 1, braille) == "a"


def test_labels_cutout_and_shape_cycle(cutout):
    assert label_for(Axis.COLUMN, 1, cutout) == "marker 1"
    first = next(m for m in markers(cutout) if m.axis is Axis.COLUMN and m.index == 1)
    assert first.shape is MarkerShape.CIRCLE


def test_label_out_of_range_is_domain_error(cutout):
    with pytest.raises(DomainError):
        label_for(Axis.COLUMN, 26, cutout)
    with pytest.raises(DomainError):
        label_for(Axis.ROW, 0, cutout)


def test_shape_cycle_period_and_order():
    expected = [
        MarkerShape.CIRCLE,
        MarkerShape.DOUBLE_DIAMOND,
        MarkerShape.TRIANGLE,
        MarkerShape.SQUARE,
        MarkerShape.PENTAGON,
    ]
    assert list(SHAPE_CYCLE) == expected
    for i in range(1, 26):
        assert shape_for(i) == expected[(i - 1) % 5]
        assert shape_for(i + 5) == shape_for(i)


@pytest.mark.parametrize("kind", ["DataVizCutout", "InterfaceBraille"])
def test_marker_at_center_round_trip(kind):
    overlay = builtin_overlay(kind)
    for m in markers(overlay):
        assert marker_at(m.center_mm, overlay) == m


def test_marker_at_screen_center_is_empty(cutout):
    center = Point(cutout.screen_width_mm / 2, cutout.screen_height_mm / 2)
    assert marker_at(center, cutout) is None


def test_marker_at_exact_column_center(cutout):
    m = next(x for x in markers(cutout) if x.axis is Axis.COLUMN and x.index == 7)
    got = marker_at(m.center_mm, cutout)
    assert got is not None and got.axis is Axis.COLUMN and got.index == 7


def test_marker_at_out_of_bounds_is_domain_error(cutout):
    with pytest.raises(DomainError):
        marker_at(Point(-1.0, 50.0), cutout)
    with pytest.raises(DomainError):
        marker_at(Point(10.0, 999.0), cutout)


@pytest.mark.parametrize("kind", ["DataVizCutout", "InterfaceBraille"])
def test_marker_at_matches_brute_force_on_random_points(kind):
    overlay = builtin_overlay(kind)
    rng = random.Random(20260810)
    for _ in range(500):
        p = random_point(rng, overlay.screen_rect)
        assert marker_at(p, overlay) == brute_force_marker_at(p, overlay)


@pytest.mark.parametrize("kind", ["DataVizCutout", "InterfaceBraille"])
def test_cell_at_matches_brute_force_on_random_points(kind):
    overlay = builtin_overlay(kind)
    rng = random.Random(77)
    for _ in range(500):
        p = random_point(rng, overlay.screen_rect)
        assert cell_at(p, overlay) == brute_force_cell_at(p, overlay)


def test_cell_at_band_intersection(cutout):
    # Intersection of the row-3 and column-5 band centers is forced.
    col_x = cutout.margin_mm + 4.5 * cutout.pitch_mm
    row_y_topdown = cutout.rows + 1 - 3  # bottom-up row 3
    row_y = cutout.margin_mm + (row_y_topdown - 0.5) * cutout.pitch_mm
    assert cell_at(Point(col_x, row_y), cutout) == GridCell(row=3, col=5)


def test_cell_at_band_boundary_tie_goes_to_lower_band(cutout):
    # A point exactly between two band centers belongs to the lower band
    # (pre-flip for rows), deterministically.
    boundary_x = cutout.margin_mm + cutout.pitch_mm  # between columns 1 and 2
    boundary_y = cutout.margin_mm + cutout.pitch_mm  # between top-down rows 1 and 2
    cell = cell_at(Point(boundary_x, boundary_y), cutout)
    assert cell.col == 1
    assert cell.row == cutout.rows  # bottom-up numbering flips row 1 to 14


def test_cell_at_total_over_screen(cutout):
    for x in (0.0, cutout.screen_width_mm, 0.01, 266.0):
        for y in (0.0, cutout.screen_height_mm, 100.0):
            cell = cell_at(Point(x, y), cutout)
            assert 1 <= cell.row <= cutout.rows
            assert 1 <= cell.col <= cutout.cols


@given(
    x=st.floats(min_value=0, max_value=267, allow_nan=False),
    y=st.floats(min_value=0, max_value=167, allow_nan=False),
)
def test_row_numbering_flip_is_an_involution(x, y):
    import dataclasses

    overlay = builtin_overlay("DataVizCutout")
    flipped = dataclasses.replace(overlay, row_numbering=RowNumbering.TOP_DOWN)
    p = Point(x, y)
    a = cell_at(p, overlay)
    b = cell_at(p, flipped)
    assert a.col == b.col
    assert a.row + b.row == overlay.rows + 1


def test_band_extent_column_definition(cutout):
    m = next(x for x in markers(cutout) if x.axis is Axis.COLUMN and x.index == 1)
    band = band_extent(m, cutout)
    assert band.x == pytest.approx(m.center_mm.x - 5.0)
    assert band.right == pytest.approx(m.center_mm.x + 5.0)
    assert band.y == 0.0
    assert band.bottom == cutout.screen_height_mm


def test_band_extent_row_definition(braille):
    m = next(x for x in markers(braille) if x.axis is Axis.ROW and x.index == 2)
    band = band_extent(m, braille)
    assert band.y == pytest.approx(m.center_mm.y - 5.0)
    assert band.bottom == pytest.approx(m.center_mm.y + 5.0)
    assert band.x == 0.0
    assert band.right == braille.screen_width_mm


def test_adjacent_bands_abut_without_overlap(cutout):
    cols = sorted(
        (m for m in markers(cutout) if m.axis is Axis.COLUMN and not m.is_quadrant_line),
        key=lambda m: m.index,
    )
    for a, b in zip(cols, cols[1:]):
        band_a = band_extent(a, cutout)
        band_b = band_extent(b, cutout)
        assert band_a.right == pytest.approx(band_b.x)
        assert not band_a.intersects_area(band_b)


def test_band_extent_rejects_quadrant_lines(cutout):
    line = next(m for m in markers(cutout) if m.is_quadrant_line)
    with pytest.raises(DomainError):
        band_extent(line, cutout)


def test_column_band_union_covers_every_projected_point(cutout):
    # Any point placed within the marker span falls in at least one band.
    from tapnav.geometry import Rect
    from tapnav.scenario import AxisSpec, DataPoint, ScatterPlot, project_point

    rng = random.Random(2468)
    plot = ScatterPlot(
        title="coverage",
        x_axis=AxisSpec("x", 0.0, 10.0, 1.0),
        y_axis=AxisSpec("y", 0.0, 10.0, 1.0),
        points=tuple(
            DataPoint(f"p{i}", f"p{i}", rng.uniform(0, 10), rng.uniform(0, 10))
            for i in range(300)
        ),
        plot_area_mm=Rect(13.5, 13.5, 240.0, 130.0),
    )
    bands = [
        band_extent(m, cutout)
        for m in markers(cutout)
        if m.axis is Axis.COLUMN and not m.is_quadrant_line
    ]
    for p in plot.points:
        pos = project_point(p, plot, cutout.row_numbering)
        assert any(b.contains(pos) for b in bands), (p, pos)
