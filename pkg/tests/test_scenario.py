"""Scenario model: projection, region queries, bundled fixtures."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from tapnav.errors import DomainError
from tapnav.geometry import Rect
from tapnav.overlay import Axis, RowNumbering, band_extent, builtin_overlay, cell_at, markers
from tapnav.scenario import (
    AxisSpec,
    DataPoint,
    InterfaceScreen,
    Role,
    ScatterPlot,
    UIElement,
    elements_in,
    load_fixture,
    points_in,
    project_point,
)


def simple_plot(points=()):
    return ScatterPlot(
        title="test",
        x_axis=AxisSpec("x", 0.0, 10.0, 1.0),
        y_axis=AxisSpec("y", 0.0, 10.0, 1.0),
        points=tuple(points),
        plot_area_mm=Rect(20.0, 20.0, 200.0, 100.0),
    )


def random_screen(rng: random.Random, n: int) -> InterfaceScreen:
    elements = []
    for i in range(n):
        x = rng.uniform(0, 140)
        y = rng.uniform(0, 240)
        elements.append(
            UIElement(
                id=f"e{i}",
                role=Role.LABEL,
                label=f"element {i}",
                bounds_mm=Rect(x, y, rng.uniform(2, 25), rng.uniform(2, 20)),
                reading_index=i,
            )
        )
    return InterfaceScreen(title="random", elements=tuple(elements))


def test_project_point_axis_extremes_bottom_up():
    plot = simple_plot()
    low = project_point(DataPoint("a", "a", 0.0, 0.0), plot)
    high = project_point(DataPoint("b", "b", 10.0, 10.0), plot)
    assert (low.x, low.y) == (20.0, 120.0)  # bottom-left corner
    assert (high.x, high.y) == (220.0, 20.0)  # top-right corner


def test_project_point_midpoint_is_plot_center():
    plot = simple_plot()
    mid = project_point(DataPoint("m", "m", 5.0, 5.0), plot)
    assert (mid.x, mid.y) == (120.0, 70.0)


def test_project_point_out_of_range_is_domain_error():
    plot = simple_plot()
    with pytest.raises(DomainError):
        project_point(DataPoint("a", "a", -0.1, 5.0), plot)
    with pytest.raises(DomainError):
        project_point(DataPoint("a", "a", 5.0, 10.1), plot)


@given(
    y1=st.floats(min_value=0, max_value=10, allow_nan=False),
    y2=st.floats(min_value=0, max_value=10, allow_nan=False),
)
def test_project_point_monotone(y1, y2):
    plot = simple_plot()
    p1 = project_point(DataPoint("a", "a", 0.0, y1), plot)
    p2 = project_point(DataPoint("b", "b", 0.0, y2), plot)
    if y1 < y2:  # larger value is nearer the top edge, never lower
        assert p1.y >= p2.y
    top_down1 = project_point(DataPoint("a", "a", 0.0, y1), plot, RowNumbering.TOP_DOWN)
    top_down2 = project_point(DataPoint("b", "b", 0.0, y2), plot, RowNumbering.TOP_DOWN)
    if y1 < y2:
        assert top_down1.y <= top_down2.y


def test_elements_in_whole_screen_is_reading_order():
    rng = random.Random(5)
    screen = random_screen(rng, 20)
    got = elements_in(Rect(0, 0, 167, 267), screen)
    assert [e.reading_index for e in got] == list(range(20))


def test_elements_in_empty_region():
    rng = random.Random(6)
    screen = random_screen(rng, 10)
    assert elements_in(Rect(160.0, 260.0, 1.0, 1.0), screen) == []


def test_elements_in_matches_brute_force_on_random_regions():
    rng = random.Random(42)
    screen = random_screen(rng, 40)
    for _ in range(1000):
        x, y = rng.uniform(0, 150), rng.uniform(0, 250)
        region = Rect(x, y, rng.uniform(1, 80), rng.uniform(1, 80))
        got = elements_in(region, screen)
        expected = sorted(
            (e for e in screen.elements if e.bounds_mm.overlap_area(region) > 0),
            key=lambda e: e.reading_index,
        )
        assert got == expected


def test_points_in_plot_area_returns_all_points():
    rng = random.Random(9)
    points = [
        DataPoint(f"p{i}", f"p{i}", rng.uniform(0, 10), rng.uniform(0, 10))
        for i in range(50)
    ]
    plot = simple_plot(points)
    assert len(points_in(plot.plot_area_mm, plot)) == 50


def test_points_in_empty_plot():
    assert points_in(Rect(0, 0, 267, 167), simple_plot()) == []


def test_points_in_matches_brute_force_on_random_bands():
    rng = random.Random(11)
    points = [
        DataPoint(f"p{i}", f"p{i}", rng.uniform(0, 10), rng.uniform(0, 10))
        for i in range(60)
    ]
    plot = simple_plot(points)
    for _ in range(500):
        region = Rect(rng.uniform(0, 240), rng.uniform(0, 140),
                      rng.uniform(2, 60), rng.uniform(2, 60))
        got = points_in(region, plot)
        expected = []
        for p in plot.points:
            pos = project_point(p, plot)
            if region.x <= pos.x <= region.right and region.y <= pos.y <= region.bottom:
                expected.append((pos.x, pos.y, p.id, p))
        expected.sort(key=lambda e: e[:3])
        assert got == [e[3] for e in expected]


# -- bundled fixtures


def test_movies_fixture_has_36_points_and_avengers_cell():
    scenario = load_fixture("MoviesScatter")
    overlay = builtin_overlay(scenario.overlay_kind)
    plot = scenario.content
    assert len(plot.points) == 36
    avengers = plot.point_by_id("avengers")
    cell = cell_at(project_point(avengers, plot, overlay.row_numbering), overlay)
    assert (cell.row, cell.col) == (13, 24)


def test_movies_fixture_points_project_inside_plot_area():
    scenario = load_fixture("MoviesScatter")
    plot = scenario.content
    for p in plot.points:
        pos = project_point(p, plot)
        assert plot.plot_area_mm.contains(pos)


def test_movies_fixture_has_four_movies_at_8_5_in_column_17():
    scenario = load_fixture("MoviesScatter")
    overlay = builtin_overlay(scenario.overlay_kind)
    plot = scenario.content
    col17 = next(m for m in markers(overlay) if m.axis is Axis.COLUMN and m.index == 17)
    inside = points_in(band_extent(col17, overlay), plot, overlay.row_numbering)
    assert len(inside) == 4
    assert {p.y for p in inside} == {8.5}


def test_bank_fixture_has_a_transaction_over_50_dollars():
    scenario = load_fixture("BankTransactions")
    screen = scenario.content
    amounts = [
        float(e.label.replace("$", ""))
        for e in screen.elements
        if e.role is Role.TABLE_CELL and e.label.startswith("$")
    ]
    assert any(a > 50.0 for a in amounts)


def test_bank_fixture_reading_order_contiguous():
    scenario = load_fixture("BankTransactions")
    screen = scenario.content
    indices = sorted(e.reading_index for e in screen.elements)
    assert indices == list(range(len(screen.elements)))


def test_tutorial_fixture_has_paragraph_table_and_list_roles():
    scenario = load_fixture("TutorialPdf")
    screen = scenario.content
    roles = {e.role for e in screen.elements}
    assert Role.HEADING in roles
    assert Role.TABLE_CELL in roles
    labels = [e.label for e in screen.elements if e.role is Role.LABEL]
    assert sum(1 for text in labels if text.startswith("•")) >= 3  # the list
    assert sum(1 for text in labels if not text.startswith("•")) >= 2  # paragraphs


def test_unknown_fixture_is_domain_error():
    with pytest.raises(DomainError):
        load_fixture("NoSuchFixture")
