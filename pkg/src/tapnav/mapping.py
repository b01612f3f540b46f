"""Binds overlay markers to on-screen content.

Line-of-sight queries resolve a marker's band to the data points or UI
elements inside it; marker summaries condense a band to the payload the
speech templates render; hit-testing resolves a touch position to the
single target under the finger.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .geometry import Point, Rect, distance
from .overlay import (
    Axis,
    Marker,
    OverlayConfig,
    band_extent,
    builtin_overlay,
    cell_at,
    quadrant_count,
)
from .scenario import (
    DataPoint,
    InterfaceScreen,
    ScatterPlot,
    Scenario,
    UIElement,
    elements_in,
    points_in,
    project_point,
)

# Data points are grabbed within this radius; below a half pitch so adjacent
# grid cells cannot both claim a point.
POINT_HIT_RADIUS_MM = 3.5


class PlotAxis(str, Enum):
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class LineOfSight:
    marker: Marker
    targets: tuple[DataPoint | UIElement, ...]
    band: Rect


@dataclass(frozen=True)
class MarkerSummary:
    marker_label: str
    count: int
    min_value: float | None = None
    max_value: float | None = None
    quadrant_counts: tuple[tuple[int, int], ...] | None = None
    first_target_label: str | None = None


@dataclass(frozen=True)
class ScaleInfo:
    axis: PlotAxis
    label: str
    min_value: float
    max_value: float
    step: float
    unit: str | None


@dataclass(frozen=True)
class Overview:
    title: str
    total: int
    item_noun: str
    x_info: ScaleInfo
    y_info: ScaleInfo


def check_match(scenario: Scenario, overlay: OverlayConfig) -> None:
    """Raise unless the overlay has the grid shape the scenario expects."""
    expected = builtin_overlay(scenario.overlay_kind)
    if (expected.orientation, expected.rows, expected.cols) != (
        overlay.orientation,
        overlay.rows,
        overlay.cols,
    ):
        raise DomainError(
            f"scenario expects a {scenario.overlay_kind.value}-shaped overlay, "
            f"got {overlay.name!r}"
        )


def line_of_sight(m: Marker, scenario: Scenario, overlay: OverlayConfig) -> LineOfSight:
    """All content inside the marker's band, in the scenario's canonical order."""
    check_match(scenario, overlay)
    band = band_extent(m, overlay)
    if scenario.is_scatter:
        targets = points_in(band, scenario.content, overlay.row_numbering)
    else:
        targets = elements_in(band, scenario.content)
    return LineOfSight(marker=m, targets=tuple(targets), band=band)


def summarize_marker(m: Marker, scenario: Scenario, overlay: OverlayConfig) -> MarkerSummary:
    los = line_of_sight(m, scenario, overlay)
    if scenario.is_scatter:
        plot = scenario.content
        assert isinstance(plot, ScatterPlot)
        # The informative values run along the band: y values for a column
        # marker, x values for a row marker.
        values = [
            (p.y if m.axis is Axis.COLUMN else p.x) for p in los.targets
        ]
        quadrants = None
        if overlay.quadrant_interval is not None:
            counts = [0] * quadrant_count(overlay)
            for p in los.targets:
                pos = project_point(p, plot, overlay.row_numbering)
                col = cell_at(pos, overlay).col
                counts[(col - 1) // overlay.quadrant_interval] += 1
            quadrants = tuple((i + 1, n) for i, n in enumerate(counts))
        return MarkerSummary(
            marker_label=m.label,
            count=len(los.targets),
            min_value=min(values) if values else None,
            max_value=max(values) if values else None,
            quadrant_counts=quadrants,
        )
    quadrants = None
    if overlay.quadrant_interval is not None:
        counts = [0] * quadrant_count(overlay)
        for e in los.targets:
            b = e.bounds_mm
            center = Point(b.x + b.width / 2, b.y + b.height / 2)
            col = cell_at(center, overlay).col
            counts[(col - 1) // overlay.quadrant_interval] += 1
        quadrants = tuple((i + 1, n) for i, n in enumerate(counts))
    first = los.targets[0].label if los.targets else None
    return MarkerSummary(
        marker_label=m.label,
        count=len(los.targets),
        quadrant_counts=quadrants,
        first_target_label=first,
    )


def hit_target(
    p: Point, scenario: Scenario, overlay: OverlayConfig
) -> DataPoint | UIElement | None:
    """Content directly under a touch position, if any.

    Scatterplots: nearest projected point within the hit radius, ties by id.
    Screens: the most specific containing element (smallest area, then
    highest reading index).
    """
    check_match(scenario, overlay)
    if not overlay.screen_rect.contains(p):
        raise DomainError(f"point ({p.x}, {p.y}) outside the screen")
    if scenario.is_scatter:
        plot = scenario.content
        assert isinstance(plot, ScatterPlot)
        best: tuple[float, str] | None = None
        best_point: DataPoint | None = None
        for dp in plot.points:
            d = distance(p, project_point(dp, plot, overlay.row_numbering))
            if d > POINT_HIT_RADIUS_MM:
                continue
            key = (d, dp.id)
            if best is None or key < best:
                best = key
                best_point = dp
        return best_point
    screen = scenario.content
    assert isinstance(screen, InterfaceScreen)
    containing = [e for e in screen.elements if e.bounds_mm.contains(p)]
    if not containing:
        return None
    containing.sort(key=lambda e: (e.bounds_mm.area, -e.reading_index, e.id))
    return containing[0]


def scale_info(axis: PlotAxis, plot: ScatterPlot | Scenario) -> ScaleInfo:
    if isinstance(plot, Scenario):
        if not plot.is_scatter:
            raise DomainError("scale information exists only for scatterplots")
        plot = plot.content
    if not isinstance(plot, ScatterPlot):
        raise DomainError("scale information exists only for scatterplots")
    spec = plot.x_axis if axis is PlotAxis.X else plot.y_axis
    return ScaleInfo(
        axis=axis,
        label=spec.label,
        min_value=spec.min_value,
        max_value=spec.max_value,
        step=spec.step,
        unit=spec.unit,
    )


def visualization_overview(plot: ScatterPlot | Scenario) -> Overview:
    if isinstance(plot, Scenario):
        if not plot.is_scatter:
            raise DomainError("overview exists only for scatterplots")
        plot = plot.content
    if not isinstance(plot, ScatterPlot):
        raise DomainError("overview exists only for scatterplots")
    return Overview(
        title=plot.title,
        total=len(plot.points),
        item_noun=plot.item_noun,
        x_info=scale_info(PlotAxis.X, plot),
        y_info=scale_info(PlotAxis.Y, plot),
    )
