"""On-screen content the engine narrates: scatterplots and GUI screens.

All geometry lives in the same millimeter space as the overlay. Scatterplot
data points are projected into the plot area with an affine map per axis;
UI elements carry explicit bounds and a 0-based reading order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .geometry import Point, Rect
from .overlay import BuiltinOverlay, RowNumbering


class Role(str, Enum):
    BUTTON = "button"
    LINK = "link"
    LABEL = "label"
    TABLE_CELL = "table_cell"
    HEADING = "heading"
    TEXT_FIELD = "text_field"
    NAV_BAR_ITEM = "nav_bar_item"


class FixtureName(str, Enum):
    MOVIES_SCATTER = "MoviesScatter"
    BANK_TRANSACTIONS = "BankTransactions"
    TUTORIAL_PDF = "TutorialPdf"


@dataclass(frozen=True)
class AxisSpec:
    label: str
    min_value: float
    max_value: float
    step: float
    unit: str | None = None

    @property
    def span(self) -> float:
        return self.max_value - self.min_value


@dataclass(frozen=True)
class DataPoint:
    id: str
    label: str
    x: float
    y: float
    attrs: tuple[tuple[str, str], ...] = ()

    def attr(self, key: str) -> str | None:
        for k, v in self.attrs:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class ScatterPlot:
    title: str
    x_axis: AxisSpec
    y_axis: AxisSpec
    points: tuple[DataPoint, ...]
    plot_area_mm: Rect
    # Spoken noun for the points ("movies", "transactions"); generic default.
    item_noun: str = "data points"

    def point_by_id(self, point_id: str) -> DataPoint:
        for p in self.points:
            if p.id == point_id:
                return p
        raise DomainError(f"no data point with id {point_id!r}")


@dataclass(frozen=True)
class UIElement:
    id: str
    role: Role
    label: str
    bounds_mm: Rect
    reading_index: int
    value: str | None = None


@dataclass(frozen=True)
class InterfaceScreen:
    title: str
    elements: tuple[UIElement, ...]

    def in_reading_order(self) -> list[UIElement]:
        return sorted(self.elements, key=lambda e: e.reading_index)

    def element_by_id(self, element_id: str) -> UIElement:
        for e in self.elements:
            if e.id == element_id:
                return e
        raise DomainError(f"no element with id {element_id!r}")


@dataclass(frozen=True)
class Scenario:
    content: ScatterPlot | InterfaceScreen
    overlay_kind: BuiltinOverlay
    description: str | None = None

    @property
    def title(self) -> str:
        return self.content.title

    @property
    def is_scatter(self) -> bool:
        return isinstance(self.content, ScatterPlot)

    @property
    def is_interface(self) -> bool:
        return isinstance(self.content, InterfaceScreen)


def project_point(
    dp: DataPoint, plot: ScatterPlot, numbering: RowNumbering = RowNumbering.BOTTOM_UP
) -> Point:
    """Affine map from axis values onto the plot area.

    Bottom-up numbering puts larger y values nearer the top edge (screen y
    grows downward); top-down keeps y growing downward.
    """
    ax, ay = plot.x_axis, plot.y_axis
    if not ax.min_value <= dp.x <= ax.max_value:
        raise DomainError(f"point {dp.id!r} x={dp.x} outside axis [{ax.min_value}, {ax.max_value}]")
    if not ay.min_value <= dp.y <= ay.max_value:
        raise DomainError(f"point {dp.id!r} y={dp.y} outside axis [{ay.min_value}, {ay.max_value}]")
    area = plot.plot_area_mm
    fx = (dp.x - ax.min_value) / ax.span
    fy = (dp.y - ay.min_value) / ay.span
    x = area.x + fx * area.width
    if numbering is RowNumbering.BOTTOM_UP:
        y = area.bottom - fy * area.height
    else:
        y = area.y + fy * area.height
    return Point(x, y)


def elements_in(region: Rect, screen: InterfaceScreen) -> list[UIElement]:
    """Elements overlapping the region with positive area, in reading order."""
    return [e for e in screen.in_reading_order() if e.bounds_mm.intersects_area(region)]


def points_in(
    region: Rect, plot: ScatterPlot, numbering: RowNumbering = RowNumbering.BOTTOM_UP
) -> list[DataPoint]:
    """Points whose projection falls in the region (closed), ordered by
    projected x, then projected y, then id."""
    hits: list[tuple[float, float, str, DataPoint]] = []
    for p in plot.points:
        pos = project_point(p, plot, numbering)
        if region.contains(pos):
            hits.append((pos.x, pos.y, p.id, p))
    hits.sort(key=lambda h: (h[0], h[1], h[2]))
    return [h[3] for h in hits]


def load_fixture(name: FixtureName | str) -> Scenario:
    """Load one of the bundled scenarios."""
    try:
        name = FixtureName(name)
    except ValueError:
        raise DomainError(f"unknown fixture {name!r}") from None
    from . import formats  # deferred: formats imports this module's types

    filename = {
        FixtureName.MOVIES_SCATTER: "movies_scatter.scenario.json",
        FixtureName.BANK_TRANSACTIONS: "bank_transactions.scenario.json",
        FixtureName.TUTORIAL_PDF: "tutorial_pdf.scenario.json",
    }[name]
    return formats.load_bundled_scenario(filename)
