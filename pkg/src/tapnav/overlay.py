"""Parametric model of a physical tactile overlay.

An overlay divides the screen into a grid of rows and columns. Tactile
markers sit in two edge strips (one per axis); each marker owns a
full-screen band -- its "line of sight" -- one grid pitch wide. Columns are
numbered 1..cols left to right; rows are numbered 1..rows either top-down
(spreadsheet style) or bottom-up (to match an upward y axis).

margin_mm is the gap between the screen edge and the edge of the first grid
band along each axis, so marker centers sit at margin + (i - 0.5) * pitch.
With that reading the fit invariant (cols * pitch + 2 * margin <= width) is
exact rather than conservative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .geometry import Point, Rect, distance

# Extra touch slop added to the marker radius for hit-testing. One
# millimeter absorbs fingertip jitter without bridging markers at 10 mm
# pitch.
MARKER_HIT_SLOP_MM = 1.0


class Orientation(str, Enum):
    LANDSCAPE = "landscape"
    PORTRAIT = "portrait"


class MarkerStyle(str, Enum):
    CUTOUT_SHAPES = "cutout_shapes"
    BRAILLE_LETTERS = "braille_letters"
    PLAIN_BUMPS = "plain_bumps"


class Axis(str, Enum):
    ROW = "row"
    COLUMN = "column"


class HorizontalEdge(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class VerticalEdge(str, Enum):
    TOP = "top"
    BOTTOM = "bottom"


class RowNumbering(str, Enum):
    TOP_DOWN = "top_down"
    BOTTOM_UP = "bottom_up"


class MarkerShape(str, Enum):
    CIRCLE = "circle"
    DOUBLE_DIAMOND = "double_diamond"
    TRIANGLE = "triangle"
    SQUARE = "square"
    PENTAGON = "pentagon"
    QUADRANT_LINE = "quadrant_line"


# Fixed repeating pattern of the cutout markers.
SHAPE_CYCLE: tuple[MarkerShape, ...] = (
    MarkerShape.CIRCLE,
    MarkerShape.DOUBLE_DIAMOND,
    MarkerShape.TRIANGLE,
    MarkerShape.SQUARE,
    MarkerShape.PENTAGON,
)


class BuiltinOverlay(str, Enum):
    DATA_VIZ_CUTOUT = "DataVizCutout"
    INTERFACE_BRAILLE = "InterfaceBraille"


@dataclass(frozen=True)
class OverlayConfig:
    name: str
    orientation: Orientation
    screen_width_mm: float
    screen_height_mm: float
    rows: int
    cols: int
    pitch_mm: float
    marker_size_mm: float
    marker_style: MarkerStyle
    quadrant_interval: int | None
    row_axis_edge: HorizontalEdge
    col_axis_edge: VerticalEdge
    row_numbering: RowNumbering
    margin_mm: float

    @property
    def screen_rect(self) -> Rect:
        return Rect(0.0, 0.0, self.screen_width_mm, self.screen_height_mm)

    @property
    def hit_radius_mm(self) -> float:
        return self.marker_size_mm / 2 + MARKER_HIT_SLOP_MM


@dataclass(frozen=True)
class Marker:
    axis: Axis
    index: int
    label: str
    center_mm: Point
    shape: MarkerShape | None = None

    @property
    def is_quadrant_line(self) -> bool:
        return self.shape is MarkerShape.QUADRANT_LINE


@dataclass(frozen=True)
class GridCell:
    row: int
    col: int


def default_margin_mm(
    screen_width_mm: float, screen_height_mm: float, rows: int, cols: int, pitch_mm: float
) -> float:
    """Largest margin that centers the tighter axis' band block symmetrically."""
    return min(
        (screen_width_mm - cols * pitch_mm) / 2,
        (screen_height_mm - rows * pitch_mm) / 2,
    )


def builtin_overlay(kind: BuiltinOverlay | str) -> OverlayConfig:
    """Return one of the two shipped overlay configurations."""
    kind = BuiltinOverlay(kind)
    if kind is BuiltinOverlay.DATA_VIZ_CUTOUT:
        return OverlayConfig(
            name="DataVizCutout",
            orientation=Orientation.LANDSCAPE,
            screen_width_mm=267.0,
            screen_height_mm=167.0,
            rows=14,
            cols=25,
            pitch_mm=10.0,
            marker_size_mm=7.5,
            marker_style=MarkerStyle.CUTOUT_SHAPES,
            quadrant_interval=5,
            row_axis_edge=HorizontalEdge.LEFT,
            col_axis_edge=VerticalEdge.BOTTOM,
            row_numbering=RowNumbering.BOTTOM_UP,
            margin_mm=default_margin_mm(267.0, 167.0, 14, 25, 10.0),
        )
    return OverlayConfig(
        name="InterfaceBraille",
        orientation=Orientation.PORTRAIT,
        screen_width_mm=167.0,
        screen_height_mm=267.0,
        rows=21,
        cols=14,
        pitch_mm=10.0,
        marker_size_mm=6.12,
        marker_style=MarkerStyle.BRAILLE_LETTERS,
        quadrant_interval=None,
        row_axis_edge=HorizontalEdge.LEFT,
        col_axis_edge=VerticalEdge.TOP,
        row_numbering=RowNumbering.TOP_DOWN,
        margin_mm=default_margin_mm(167.0, 267.0, 21, 14, 10.0),
    )


def label_for(axis: Axis, index: int, overlay: OverlayConfig) -> str:
    """Tactile label of a marker: braille letter, 'marker N', or numeral."""
    limit = overlay.rows if axis is Axis.ROW else overlay.cols
    if not 1 <= index <= limit:
        raise DomainError(f"{axis.value} index {index} outside 1..{limit}")
    if overlay.marker_style is MarkerStyle.BRAILLE_LETTERS:
        return chr(ord("a") + index - 1)
    if overlay.marker_style is MarkerStyle.CUTOUT_SHAPES:
        return f"marker {index}"
    return str(index)


def shape_for(index: int) -> MarkerShape:
    """Cutout shape of the index-th marker on an axis (fixed 5-cycle)."""
    return SHAPE_CYCLE[(index - 1) % len(SHAPE_CYCLE)]


def _row_topdown_position(overlay: OverlayConfig, row: int) -> int:
    """Map a row index to its position counted from the top edge."""
    if overlay.row_numbering is RowNumbering.TOP_DOWN:
        return row
    return overlay.rows + 1 - row


def marker_center(overlay: OverlayConfig, axis: Axis, index: int) -> Point:
    if axis is Axis.COLUMN:
        x = overlay.margin_mm + (index - 0.5) * overlay.pitch_mm
        if overlay.col_axis_edge is VerticalEdge.TOP:
            y = overlay.pitch_mm / 2
        else:
            y = overlay.screen_height_mm - overlay.pitch_mm / 2
        return Point(x, y)
    k = _row_topdown_position(overlay, index)
    y = overlay.margin_mm + (k - 0.5) * overlay.pitch_mm
    if overlay.row_axis_edge is HorizontalEdge.LEFT:
        x = overlay.pitch_mm / 2
    else:
        x = overlay.screen_width_mm - overlay.pitch_mm / 2
    return Point(x, y)


def quadrant_line_positions(overlay: OverlayConfig) -> list[float]:
    """x coordinates of the divider lines on the column axis."""
    if overlay.quadrant_interval is None:
        return []
    n = overlay.quadrant_interval
    return [
        overlay.margin_mm + k * n * overlay.pitch_mm
        for k in range(1, (overlay.cols - 1) // n + 1)
    ]


def quadrant_count(overlay: OverlayConfig) -> int:
    if overlay.quadrant_interval is None:
        return 0
    return math.ceil(overlay.cols / overlay.quadrant_interval)


def quadrant_of_column(overlay: OverlayConfig, col: int) -> int:
    """Quadrant ordinal of a column, counted from the axis origin (left)."""
    if overlay.quadrant_interval is None:
        raise DomainError("overlay has no quadrant lines")
    return (col - 1) // overlay.quadrant_interval + 1


def markers(overlay: OverlayConfig) -> list[Marker]:
    """All markers: rows, then columns, then quadrant-line pseudo markers.

    Quadrant dividers are modeled as index-0 pseudo markers on the column
    axis so hit-testing can announce them; they own no band.
    """
    out: list[Marker] = []
    cutout = overlay.marker_style is MarkerStyle.CUTOUT_SHAPES
    for i in range(1, overlay.rows + 1):
        out.append(
            Marker(
                axis=Axis.ROW,
                index=i,
                label=label_for(Axis.ROW, i, overlay),
                center_mm=marker_center(overlay, Axis.ROW, i),
                shape=shape_for(i) if cutout else None,
            )
        )
    for j in range(1, overlay.cols + 1):
        out.append(
            Marker(
                axis=Axis.COLUMN,
                index=j,
                label=label_for(Axis.COLUMN, j, overlay),
                center_mm=marker_center(overlay, Axis.COLUMN, j),
                shape=shape_for(j) if cutout else None,
            )
        )
    if overlay.col_axis_edge is VerticalEdge.TOP:
        strip_y = overlay.pitch_mm / 2
    else:
        strip_y = overlay.screen_height_mm - overlay.pitch_mm / 2
    for k, x in enumerate(quadrant_line_positions(overlay), start=1):
        out.append(
            Marker(
                axis=Axis.COLUMN,
                index=0,
                label=f"quadrant line {k}",
                center_mm=Point(x, strip_y),
                shape=MarkerShape.QUADRANT_LINE,
            )
        )
    return out


def _check_in_bounds(p: Point, overlay: OverlayConfig) -> None:
    if not overlay.screen_rect.contains(p):
        raise DomainError(
            f"point ({p.x}, {p.y}) outside screen "
            f"{overlay.screen_width_mm}x{overlay.screen_height_mm} mm"
        )


def marker_at(p: Point, overlay: OverlayConfig) -> Marker | None:
    """Marker whose center lies within the hit radius of p, if any.

    Ties break toward the lower index, then rows before columns.
    """
    _check_in_bounds(p, overlay)
    radius = overlay.hit_radius_mm
    best: tuple[float, int, int] | None = None
    best_marker: Marker | None = None
    for m in markers(overlay):
        d = distance(p, m.center_mm)
        if d > radius:
            continue
        key = (d, m.index, 0 if m.axis is Axis.ROW else 1)
        if best is None or key < best:
            best = key
            best_marker = m
    return best_marker


def _nearest_band(coord: float, margin: float, pitch: float, count: int) -> int:
    """1-based band whose center is nearest to coord; ties go to the lower band."""
    real = (coord - margin) / pitch + 0.5
    idx = math.ceil(real - 0.5)
    return min(max(idx, 1), count)


def cell_at(p: Point, overlay: OverlayConfig) -> GridCell:
    """Grid cell containing p; bands are clamped at the grid edges."""
    _check_in_bounds(p, overlay)
    col = _nearest_band(p.x, overlay.margin_mm, overlay.pitch_mm, overlay.cols)
    k = _nearest_band(p.y, overlay.margin_mm, overlay.pitch_mm, overlay.rows)
    if overlay.row_numbering is RowNumbering.BOTTOM_UP:
        row = overlay.rows + 1 - k
    else:
        row = k
    return GridCell(row=row, col=col)


def band_extent(m: Marker, overlay: OverlayConfig) -> Rect:
    """Full-screen strip owned by a marker, one pitch wide."""
    if m.is_quadrant_line:
        raise DomainError("quadrant lines have no band")
    half = overlay.pitch_mm / 2
    c = m.center_mm
    if m.axis is Axis.COLUMN:
        return Rect(c.x - half, 0.0, overlay.pitch_mm, overlay.screen_height_mm)
    return Rect(0.0, c.y - half, overlay.screen_width_mm, overlay.pitch_mm)


def axis_strip(overlay: OverlayConfig, axis: Axis) -> Rect:
    """Edge strip where an axis' markers physically sit (one pitch deep)."""
    p = overlay.pitch_mm
    if axis is Axis.COLUMN:
        if overlay.col_axis_edge is VerticalEdge.TOP:
            return Rect(0.0, 0.0, overlay.screen_width_mm, p)
        return Rect(0.0, overlay.screen_height_mm - p, overlay.screen_width_mm, p)
    if overlay.row_axis_edge is HorizontalEdge.LEFT:
        return Rect(0.0, 0.0, p, overlay.screen_height_mm)
    return Rect(overlay.screen_width_mm - p, 0.0, p, overlay.screen_height_mm)
