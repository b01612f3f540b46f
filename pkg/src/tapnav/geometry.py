"""Planar primitives in physical millimeters.

The engine works in one coordinate space: millimeters over the active screen
area, origin at the top-left corner, x growing rightward, y growing downward
(the usual touch-event convention). Overlays, scenarios and touch traces all
share this space.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle, (x, y) is the top-left corner."""

    x: float
    y: float
    width: float
    height: float

    @property
    def right(self) -> float:
        return self.x + self.width

    @property
    def bottom(self) -> float:
        return self.y + self.height

    def contains(self, p: Point) -> bool:
        """Closed containment: boundary points are inside."""
        return self.x <= p.x <= self.right and self.y <= p.y <= self.bottom

    def contains_rect(self, other: Rect) -> bool:
        return (
            self.x <= other.x
            and self.y <= other.y
            and other.right <= self.right
            and other.bottom <= self.bottom
        )

    def overlap_area(self, other: Rect) -> float:
        w = min(self.right, other.right) - max(self.x, other.x)
        h = min(self.bottom, other.bottom) - max(self.y, other.y)
        if w <= 0 or h <= 0:
            return 0.0
        return w * h

    def intersects_area(self, other: Rect) -> bool:
        """True when the shared region has strictly positive area."""
        return self.overlap_area(other) > 0

    @property
    def area(self) -> float:
        return self.width * self.height


def distance(a: Point, b: Point) -> float:
    return ((a.x - b.x) ** 2 + (a.y - b.y) ** 2) ** 0.5
