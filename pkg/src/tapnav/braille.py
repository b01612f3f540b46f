"""Six-dot braille cells for overlay labels.

Dot numbering is the standard one: 1-2-3 down the left column, 4-5-6 down
the right. Cell dimensions default to the labeling-tape cell used for the
overlays (3.78 mm wide, 6.12 mm tall, 1.5 mm dot base); dot centers are
placed so the rendered ink extent equals the declared cell size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .geometry import Point

DEFAULT_CELL_WIDTH_MM = 3.78
DEFAULT_CELL_HEIGHT_MM = 6.12
DOT_DIAMETER_MM = 1.5

# Letters a-j use the upper four dots; k-t add dot 3; u-z add dots 3 and 6
# (w is the historical exception).
LETTER_DOTS: dict[str, frozenset[int]] = {
    "a": frozenset({1}),
    "b": frozenset({1, 2}),
    "c": frozenset({1, 4}),
    "d": frozenset({1, 4, 5}),
    "e": frozenset({1, 5}),
    "f": frozenset({1, 2, 4}),
    "g": frozenset({1, 2, 4, 5}),
    "h": frozenset({1, 2, 5}),
    "i": frozenset({2, 4}),
    "j": frozenset({2, 4, 5}),
    "k": frozenset({1, 3}),
    "l": frozenset({1, 2, 3}),
    "m": frozenset({1, 3, 4}),
    "n": frozenset({1, 3, 4, 5}),
    "o": frozenset({1, 3, 5}),
    "p": frozenset({1, 2, 3, 4}),
    "q": frozenset({1, 2, 3, 4, 5}),
    "r": frozenset({1, 2, 3, 5}),
    "s": frozenset({2, 3, 4}),
    "t": frozenset({2, 3, 4, 5}),
    "u": frozenset({1, 3, 6}),
    "v": frozenset({1, 2, 3, 6}),
    "w": frozenset({2, 4, 5, 6}),
    "x": frozenset({1, 3, 4, 6}),
    "y": frozenset({1, 3, 4, 5, 6}),
    "z": frozenset({1, 3, 5, 6}),
}


@dataclass(frozen=True)
class BrailleGlyph:
    letter: str
    dots: frozenset[int]
    cell_width_mm: float = DEFAULT_CELL_WIDTH_MM
    cell_height_mm: float = DEFAULT_CELL_HEIGHT_MM


def glyph_for(letter: str) -> BrailleGlyph:
    try:
        dots = LETTER_DOTS[letter.lower()]
    except KeyError:
        raise DomainError(f"no six-dot encoding for {letter!r}") from None
    return BrailleGlyph(letter=letter.lower(), dots=dots)


def dot_centers(
    glyph: BrailleGlyph, cell_center: Point, dot_diameter_mm: float = DOT_DIAMETER_MM
) -> list[tuple[int, Point]]:
    """Centers of the raised dots of a glyph, ordered by dot number."""
    dx = (glyph.cell_width_mm - dot_diameter_mm) / 2
    dy = (glyph.cell_height_mm - dot_diameter_mm) / 2
    # dot -> (column offset, row offset); rows top / middle / bottom
    layout = {
        1: (-dx, -dy),
        2: (-dx, 0.0),
        3: (-dx, dy),
        4: (dx, -dy),
        5: (dx, 0.0),
        6: (dx, dy),
    }
    out = []
    for dot in sorted(glyph.dots):
        ox, oy = layout[dot]
        out.append((dot, Point(cell_center.x + ox, cell_center.y + oy)))
    return out


def unicode_char(glyph: BrailleGlyph) -> str:
    """Unicode braille pattern for the glyph (U+2800 block)."""
    code = 0x2800
    for dot in glyph.dots:
        code |= 1 << (dot - 1)
    return chr(code)
