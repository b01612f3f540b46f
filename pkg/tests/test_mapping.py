"""Spatial mapping: line of sight, summaries, hit-testing, scale info."""

from __future__ import annotations

import random

import pytest

from conftest import random_point
from tapnav.errors import DomainError
from tapnav.geometry import Point, Rect
from tapnav.mapping import (
    PlotAxis,
    hit_target,
    line_of_sight,
    scale_info,
    summarize_marker,
    visualization_overview,
)
from tapnav.overlay import Axis, band_extent, builtin_overlay, markers
from tapnav.scenario import (
    AxisSpec,
    BuiltinOverlay,
    DataPoint,
    InterfaceScreen,
    Role,
    ScatterPlot,
    Scenario,
    UIElement,
    elements_in,
    load_fixture,
    points_in,
    project_point,
)


def random_scatter(rng: random.Random, n: int) -> Scenario:
    points = tuple(
        DataPoint(f"p{i:03d}", f"point {i}", rng.uniform(0, 10), rng.uniform(0, 10))
        for i in range(n)
    )
    plot = ScatterPlot(
        title="random plot",
        x_axis=AxisSpec("x value", 0.0, 10.0, 1.0),
        y_axis=AxisSpec("y value", 0.0, 10.0, 1.0),
        points=points,
        plot_area_mm=Rect(13.5, 13.5, 240.0, 130.0),
    )
    return Scenario(content=plot, overlay_kind=BuiltinOverlay.DATA_VIZ_CUTOUT)


def random_interface(rng: random.Random, n: int) -> Scenario:
    elements = tuple(
        UIElement(
            id=f"e{i:03d}",
            role=Role.LABEL,
            label=f"element {i}",
            bounds_mm=Rect(rng.uniform(0, 140), rng.uniform(0, 240),
                           rng.uniform(2, 26), rng.uniform(2, 24)),
            reading_index=i,
        )
        for i in range(n)
    )
    return Scenario(
        content=InterfaceScreen(title="random screen", elements=elements),
        overlay_kind=BuiltinOverlay.INTERFACE_BRAILLE,
    )


def grid_markers(overlay):
    return [m for m in markers(overlay) if not m.is_quadrant_line]


def test_line_of_sight_empty_plot():
    scenario = random_scatter(random.Random(0), 0)
    overlay = builtin_overlay(scenario.overlay_kind)
    for m in grid_markers(overlay):
        assert line_of_sight(m, scenario, overlay).targets == ()


def test_line_of_sight_column_24_includes_avengers():
    scenario = load_fixture("MoviesScatter")
    overlay = builtin_overlay(scenario.overlay_kind)
    col24 = next(m for m in grid_markers(overlay) if m.axis is Axis.COLUMN and m.index == 24)
    los = line_of_sight(col24, scenario, overlay)
    assert any(t.label == "Avengers" for t in los.targets)


def test_line_of_sight_matches_brute_force_band_scan():
    rng = random.Random(101)
    for _ in range(20):
        scenario = random_scatter(rng, rng.randint(0, 80))
        overlay = builtin_overlay(scenario.overlay_kind)
        for m in grid_markers(overlay):
            los = line_of_sight(m, scenario, overlay)
            band = band_extent(m, overlay)
            expected = points_in(band, scenario.content, overlay.row_numbering)
            assert list(los.targets) == expected
    for _ in range(20):
        scenario = random_interface(rng, rng.randint(1, 60))
        overlay = builtin_overlay(scenario.overlay_kind)
        for m in grid_markers(overlay):
            los = line_of_sight(m, scenario, overlay)
            expected = elements_in(band_extent(m, overlay), scenario.content)
            assert list(los.targets) == expected


def test_line_of_sight_overlay_mismatch_is_domain_error():
    scenario = random_scatter(random.Random(1), 3)
    wrong = builtin_overlay("InterfaceBraille")
    with pytest.raises(DomainError):
        line_of_sight(grid_markers(wrong)[0], scenario, wrong)


def test_summarize_column_with_four_movies_at_8_5():
    scenario = load_fixture("MoviesScatter")
    overlay = builtin_overlay(scenario.overlay_kind)
    col17 = next(m for m in grid_markers(overlay) if m.axis is Axis.COLUMN and m.index == 17)
    summary = summarize_marker(col17, scenario, overlay)
    assert summary.count == 4
    assert summary.min_value == 8.5
    assert summary.max_value == 8.5
    assert summary.quadrant_counts is not None


def test_summarize_bank_row_10_has_five_elements():
    scenario = load_fixture("BankTransactions")
    overlay = builtin_overlay(scenario.overlay_kind)
    row10 = next(m for m in grid_markers(overlay) if m.axis is Axis.ROW and m.index == 10)
    summary = summarize_marker(row10, scenario, overlay)
    assert summary.count == 5
    assert summary.first_target_label == "Jun 12"
    assert summary.quadrant_counts is None  # braille overlay has no dividers


def test_summarize_empty_band_has_no_min_max():
    scenario = random_scatter(random.Random(2), 0)
    overlay = builtin_overlay(scenario.overlay_kind)
    summary = summarize_marker(grid_markers(overlay)[0], scenario, overlay)
    assert summary.count == 0
    assert summary.min_value is None and summary.max_value is None


def test_summary_count_and_extremes_match_fold_over_targets():
    rng = random.Random(7)
    for _ in range(10):
        scenario = random_scatter(rng, rng.randint(1, 60))
        overlay = builtin_overlay(scenario.overlay_kind)
        for m in grid_markers(overlay):
            summary = summarize_marker(m, scenario, overlay)
            los = line_of_sight(m, scenario, overlay)
            assert summary.count == len(los.targets)
            values = [p.y if m.axis is Axis.COLUMN else p.x for p in los.targets]
            if values:
                assert summary.min_value == min(values)
                assert summary.max_value == max(values)
            assert sum(n for _, n in summary.quadrant_counts) == summary.count


def test_hit_target_exactly_on_a_projected_point():
    scenario = load_fixture("MoviesScatter")
    overlay = builtin_overlay(scenario.overlay_kind)
    plot = scenario.content
    avengers = plot.point_by_id("avengers")
    pos = project_point(avengers, plot, overlay.row_numbering)
    assert hit_target(pos, scenario, overlay) == avengers


def test_hit_target_whitespace_is_empty():
    scenario = random_scatter(random.Random(3), 0)
    overlay = builtin_overlay(scenario.overlay_kind)
    assert hit_target(Point(120.0, 80.0), scenario, overlay) is None


def test_hit_target_matches_brute_force_probes():
    rng = random.Random(55)
    scenario = random_scatter(rng, 60)
    overlay = builtin_overlay(scenario.overlay_kind)
    plot = scenario.content
    for _ in range(500):
        p = random_point(rng, overlay.screen_rect)
        got = hit_target(p, scenario, overlay)
        best = None
        for dp in plot.points:
            pos = project_point(dp, plot, overlay.row_numbering)
            d = ((p.x - pos.x) ** 2 + (p.y - pos.y) ** 2) ** 0.5
            if d <= 3.5 and (best is None or (d, dp.id) < best[:2]):
                best = (d, dp.id, dp)
        assert got == (best[2] if best else None)

    iface = random_interface(rng, 50)
    ioverlay = builtin_overlay(iface.overlay_kind)
    screen = iface.content
    for _ in range(500):
        p = random_point(rng, ioverlay.screen_rect)
        got = hit_target(p, iface, ioverlay)
        containing = [e for e in screen.elements if e.bounds_mm.contains(p)]
        containing.sort(key=lambda e: (e.bounds_mm.area, -e.reading_index, e.id))
        assert got == (containing[0] if containing else None)


def test_hit_target_is_stable_under_point_permutation():
    import dataclasses

    rng = random.Random(88)
    scenario = random_scatter(rng, 40)
    overlay = builtin_overlay(scenario.overlay_kind)
    plot = scenario.content
    shuffled_points = list(plot.points)
    rng.shuffle(shuffled_points)
    shuffled = Scenario(
        content=dataclasses.replace(plot, points=tuple(shuffled_points)),
        overlay_kind=scenario.overlay_kind,
    )
    for _ in range(300):
        p = random_point(rng, overlay.screen_rect)
        assert hit_target(p, scenario, overlay) == hit_target(p, shuffled, overlay)


def test_hit_target_overlapping_elements_prefers_smallest_area():
    outer = UIElement("outer", Role.LABEL, "outer", bounds_mm=Rect(10, 10, 100, 100),
                      reading_index=0)
    inner = UIElement("inner", Role.BUTTON, "inner", bounds_mm=Rect(40, 40, 20, 20),
                      reading_index=1)
    scenario = Scenario(
        content=InterfaceScreen(title="overlap", elements=(outer, inner)),
        overlay_kind=BuiltinOverlay.INTERFACE_BRAILLE,
    )
    overlay = builtin_overlay(scenario.overlay_kind)
    assert hit_target(Point(50, 50), scenario, overlay).id == "inner"
    assert hit_target(Point(15, 15), scenario, overlay).id == "outer"


def test_scale_info_returns_literal_fields():
    plot = ScatterPlot(
        title="t",
        x_axis=AxisSpec("critic rating", 0.0, 10.0, 1.0),
        y_axis=AxisSpec("audience", 0.0, 5.0, 0.5, unit="stars"),
        points=(),
        plot_area_mm=Rect(13.5, 13.5, 240.0, 130.0),
    )
    info = scale_info(PlotAxis.X, plot)
    assert (info.label, info.min_value, info.max_value, info.step) == ("critic rating", 0.0, 10.0, 1.0)
    assert scale_info(PlotAxis.Y, plot).unit == "stars"


def test_scale_info_matches_fixture_axis():
    scenario = load_fixture("MoviesScatter")
    plot = scenario.content
    info = scale_info(PlotAxis.Y, scenario)
    assert info.label == plot.y_axis.label
    assert info.min_value == plot.y_axis.min_value
    assert info.max_value == plot.y_axis.max_value
    assert info.step == plot.y_axis.step


def test_scale_info_on_interface_is_domain_error():
    scenario = load_fixture("BankTransactions")
    with pytest.raises(DomainError):
        scale_info(PlotAxis.X, scenario)


def test_overview_totals():
    movies = load_fixture("MoviesScatter")
    assert visualization_overview(movies).total == 36
    empty = random_scatter(random.Random(4), 0)
    assert visualization_overview(empty).total == 0
    rng = random.Random(12)
    for _ in range(10):
        scenario = random_scatter(rng, rng.randint(0, 40))
        assert visualization_overview(scenario).total == len(scenario.content.points)
