"""Shared fixtures and brute-force oracles.

The oracles deliberately re-derive results by exhaustive scanning so the
fast implementations are checked against an independent path.
"""

from __future__ import annotations

import random

import pytest

from tapnav.geometry import Point, Rect
from tapnav.overlay import (
    Axis,
    GridCell,
    Marker,
    OverlayConfig,
    RowNumbering,
    builtin_overlay,
    markers,
)


@pytest.fixture
def cutout() -> OverlayConfig:
    return builtin_overlay("DataVizCutout")


@pytest.fixture
def braille() -> OverlayConfig:
    return builtin_overlay("InterfaceBraille")


def brute_force_marker_at(p: Point, overlay: OverlayConfig) -> Marker | None:
    """Scan every marker; nearest within radius wins, ties to lower index
    then rows before columns."""
    radius = overlay.marker_size_mm / 2 + 1.0
    candidates = []
    for m in markers(overlay):
        d = ((p.x - m.center_mm.x) ** 2 + (p.y - m.center_mm.y) ** 2) ** 0.5
        if d <= radius:
            candidates.append((d, m.index, 0 if m.axis is Axis.ROW else 1, m))
    if not candidates:
        return None
    candidates.sort(key=lambda c: c[:3])
    return candidates[0][3]


def brute_force_cell_at(p: Point, overlay: OverlayConfig) -> GridCell:
    """Scan every cell; the one whose center is nearest wins (ties toward
    the lower top-down position / lower column)."""
    best_col, best_dx = 1, float("inf")
    for j in range(1, overlay.cols + 1):
        center = overlay.margin_mm + (j - 0.5) * overlay.pitch_mm
        dx = abs(p.x - center)
        if dx < best_dx - 1e-12:
            best_col, best_dx = j, dx
    best_k, best_dy = 1, float("inf")
    for k in range(1, overlay.rows + 1):
        center = overlay.margin_mm + (k - 0.5) * overlay.pitch_mm
        dy = abs(p.y - center)
        if dy < best_dy - 1e-12:
            best_k, best_dy = k, dy
    row = best_k
    if overlay.row_numbering is RowNumbering.BOTTOM_UP:
        row = overlay.rows + 1 - best_k
    return GridCell(row=row, col=best_col)


def random_point(rng: random.Random, rect: Rect) -> Point:
    return Point(
        rng.uniform(rect.x, rect.right),
        rng.uniform(rect.y, rect.bottom),
    )
