"""Fabrication export: overlays as physical-unit SVG.

Cutout overlays produce closed cut paths (one per marker, plus the quadrant
divider lines) on a "cut" layer. Braille overlays produce raised dots on an
"emboss" layer. Both carry a non-cut "guide" layer with one rectangle per
marker cell for alignment and for geometric verification: every shape is
drawn so its bounding box is exactly the marker cell centered on the marker
center, which lets a re-parser recover centers without knowing the shapes.

Output is deterministic: fixed attribute order, fixed 0.01 mm number
formatting, newline separated.
"""

from __future__ import annotations

import math

from .braille import DOT_DIAMETER_MM, dot_centers, glyph_for
from .geometry import Point
from .overlay import (
    Marker,
    MarkerShape,
    MarkerStyle,
    OverlayConfig,
    VerticalEdge,
    markers,
    quadrant_line_positions,
)

CUT_STROKE_MM = 0.2
GUIDE_STROKE_MM = 0.1


def _n(value: float) -> str:
    return f"{value:.2f}"


def _polygon_path(points: list[tuple[float, float]]) -> str:
    head = f"M {_n(points[0][0])} {_n(points[0][1])}"
    rest = " ".join(f"L {_n(x)} {_n(y)}" for x, y in points[1:])
    return f"{head} {rest} Z"


def _shape_element(shape: MarkerShape, c: Point, size: float) -> str:
    h = size / 2
    if shape is MarkerShape.CIRCLE:
        return f'<circle cx="{_n(c.x)}" cy="{_n(c.y)}" r="{_n(h)}"/>'
    if shape is MarkerShape.SQUARE:
        pts = [(c.x - h, c.y - h), (c.x + h, c.y - h), (c.x + h, c.y + h), (c.x - h, c.y + h)]
        return f'<path d="{_polygon_path(pts)}"/>'
    if shape is MarkerShape.TRIANGLE:
        pts = [(c.x, c.y - h), (c.x + h, c.y + h), (c.x - h, c.y + h)]
        return f'<path d="{_polygon_path(pts)}"/>'
    if shape is MarkerShape.PENTAGON:
        # Regular point-up pentagon stretched to fill the square cell so the
        # bounding box stays centered on the marker.
        raw = [
            (math.cos(math.radians(90 + 72 * k)), math.sin(math.radians(90 + 72 * k)))
            for k in range(5)
        ]
        xs = [p[0] for p in raw]
        ys = [p[1] for p in raw]
        sx = size / (max(xs) - min(xs))
        sy = size / (max(ys) - min(ys))
        cx_raw = (max(xs) + min(xs)) / 2
        cy_raw = (max(ys) + min(ys)) / 2
        pts = [((x - cx_raw) * sx + c.x, -(y - cy_raw) * sy + c.y) for x, y in raw]
        return f'<path d="{_polygon_path(pts)}"/>'
    if shape is MarkerShape.DOUBLE_DIAMOND:
        q = size / 4
        left = [(c.x - 2 * q, c.y), (c.x - q, c.y - h), (c.x, c.y), (c.x - q, c.y + h)]
        right = [(c.x, c.y), (c.x + q, c.y - h), (c.x + 2 * q, c.y), (c.x + q, c.y + h)]
        return f'<path d="{_polygon_path(left)} {_polygon_path(right)}"/>'
    raise ValueError(f"no cut geometry for {shape}")


def _guide_rect(c: Point, width: float, height: float) -> str:
    return (
        f'<rect x="{_n(c.x - width / 2)}" y="{_n(c.y - height / 2)}" '
        f'width="{_n(width)}" height="{_n(height)}"/>'
    )


def export_overlay_svg(overlay: OverlayConfig) -> str:
    """Render the overlay to an SVG document sized in millimeters."""
    w, h = overlay.screen_width_mm, overlay.screen_height_mm
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(w)}mm" height="{_n(h)}mm" '
        f'viewBox="0 0 {_n(w)} {_n(h)}">',
        f"  <title>{overlay.name}</title>",
    ]
    all_markers = [m for m in markers(overlay) if not m.is_quadrant_line]

    if overlay.col_axis_edge is VerticalEdge.TOP:
        strip_y0, strip_y1 = 0.0, overlay.pitch_mm
    else:
        strip_y0 = overlay.screen_height_mm - overlay.pitch_mm
        strip_y1 = overlay.screen_height_mm
    divider_lines = [
        f'<line x1="{_n(x)}" y1="{_n(strip_y0)}" x2="{_n(x)}" y2="{_n(strip_y1)}"/>'
        for x in quadrant_line_positions(overlay)
    ]

    if overlay.marker_style is MarkerStyle.CUTOUT_SHAPES:
        lines.append(
            f'  <g id="cut" fill="none" stroke="#000000" stroke-width="{_n(CUT_STROKE_MM)}">'
        )
        for m in all_markers:
            assert m.shape is not None
            lines.append("    " + _shape_element(m.shape, m.center_mm, overlay.marker_size_mm))
        lines.extend(_indent(line) for line in divider_lines)
        lines.append("  </g>")
    else:
        lines.append('  <g id="emboss" fill="#000000" stroke="none">')
        if overlay.marker_style is MarkerStyle.BRAILLE_LETTERS:
            for m in all_markers:
                glyph = glyph_for(m.label)
                for _, center in dot_centers(glyph, m.center_mm):
                    lines.append(
                        f'    <circle cx="{_n(center.x)}" cy="{_n(center.y)}" '
                        f'r="{_n(DOT_DIAMETER_MM / 2)}"/>'
                    )
        else:  # plain bumps: one raised dome per marker
            for m in all_markers:
                lines.append(
                    f'    <circle cx="{_n(m.center_mm.x)}" cy="{_n(m.center_mm.y)}" '
                    f'r="{_n(overlay.marker_size_mm / 2)}"/>'
                )
        lines.append("  </g>")
        if divider_lines:
            # Raised divider lines for non-cut overlays.
            lines.append(
                f'  <g id="dividers" fill="none" stroke="#000000" '
                f'stroke-width="{_n(CUT_STROKE_MM)}">'
            )
            lines.extend(_indent(line) for line in divider_lines)
            lines.append("  </g>")

    lines.append(
        f'  <g id="guide" fill="none" stroke="#999999" stroke-width="{_n(GUIDE_STROKE_MM)}">'
    )
    for m in all_markers:
        if overlay.marker_style is MarkerStyle.BRAILLE_LETTERS:
            glyph = glyph_for(m.label)
            lines.append(_indent(_guide_rect(m.center_mm, glyph.cell_width_mm, glyph.cell_height_mm)))
        else:
            lines.append(
                _indent(_guide_rect(m.center_mm, overlay.marker_size_mm, overlay.marker_size_mm))
            )
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _indent(s: str) -> str:
    return "    " + s


def marker_cells(overlay: OverlayConfig) -> list[Marker]:
    """The markers the exporter draws (quadrant lines excluded)."""
    return [m for m in markers(overlay) if not m.is_quadrant_line]
