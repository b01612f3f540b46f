"""One-off generator for the bundled scenario fixtures.

Values other than the anchored facts (Avengers at grid row 13 / column 24;
a transaction over $50; the four movies sharing an 8.5 critic rating; the
five-element row 10) are synthetic. Run from the repo root:

    python scripts/gen_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tapnav import formats
from tapnav.geometry import Rect
from tapnav.overlay import BuiltinOverlay, builtin_overlay, cell_at, band_extent, markers, Axis
from tapnav.scenario import (
    AxisSpec,
    DataPoint,
    InterfaceScreen,
    Role,
    ScatterPlot,
    Scenario,
    UIElement,
    project_point,
    points_in,
    elements_in,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "tapnav" / "fixtures"

SYNTH_NOTE = (
    "Synthetic dataset. Anchored facts: 36 movies total; Avengers projects into "
    "grid cell row 13, column 24; four movies share an 8.5 critic rating inside "
    "column 17's band. All other titles, ratings, and years are invented."
)

MOVIES = [
    # (label, audience, critic, year)
    ("Avengers", 9.6, 9.5, "2012"),
    ("Interstellar", 6.5, 8.5, "2014"),
    ("Whiplash", 6.6, 8.5, "2014"),
    ("Coco", 6.7, 8.5, "2017"),
    ("Parasite", 6.8, 8.5, "2019"),
    ("The Shawshank Redemption", 9.2, 9.8, "1994"),
    ("The Circus", 7.0, 8.1, "1928"),
    ("The Godfather", 9.0, 9.7, "1972"),
    ("Pulp Fiction", 8.8, 9.2, "1994"),
    ("Spirited Away", 8.4, 9.4, "2001"),
    ("The Dark Knight", 9.3, 9.4, "2008"),
    ("Forrest Gump", 9.1, 8.2, "1994"),
    ("Inception", 9.0, 8.7, "2010"),
    ("The Matrix", 8.9, 8.6, "1999"),
    ("Goodfellas", 8.2, 9.3, "1990"),
    ("Se7en", 8.5, 8.4, "1995"),
    ("City Lights", 6.9, 9.0, "1931"),
    ("Modern Times", 6.4, 8.9, "1936"),
    ("Casablanca", 7.9, 9.1, "1942"),
    ("Rear Window", 7.6, 8.8, "1954"),
    ("Psycho", 7.8, 8.6, "1960"),
    ("Alien", 7.7, 8.3, "1979"),
    ("Blade Runner", 6.1, 8.0, "1982"),
    ("Jaws", 7.2, 7.9, "1975"),
    ("E.T.", 7.1, 7.4, "1982"),
    ("Jurassic Park", 8.6, 7.6, "1993"),
    ("Titanic", 8.3, 7.2, "1997"),
    ("Avatar", 8.0, 6.9, "2009"),
    ("Frozen", 7.4, 6.5, "2013"),
    ("Shrek", 7.5, 7.0, "2001"),
    ("Toy Story", 8.7, 8.9, "1995"),
    ("Finding Nemo", 8.1, 7.8, "2003"),
    ("The Lion King", 8.4, 7.5, "1994"),
    ("Up", 7.3, 7.7, "2009"),
    ("Wall-E", 6.3, 8.8, "2008"),
    ("Ratatouille", 6.2, 8.2, "2007"),
]


def slug(label: str) -> str:
    out = []
    for ch in label.lower():
        if ch.isalnum():
            out.append(ch)
        elif out and out[-1] != "-":
            out.append("-")
    return "".join(out).strip("-")


def movies_scatter() -> Scenario:
    points = tuple(
        DataPoint(
            id=slug(label), label=label, x=aud, y=crit, attrs=(("year", year),)
        )
        for label, aud, crit, year in MOVIES
    )
    plot = ScatterPlot(
        title="Movie Ratings",
        x_axis=AxisSpec(label="audience rating", min_value=0.0, max_value=10.0, step=1.0),
        y_axis=AxisSpec(label="critic rating", min_value=0.0, max_value=10.0, step=1.0),
        points=points,
        plot_area_mm=Rect(13.5, 13.5, 240.0, 130.0),
        item_noun="movies",
    )
    return Scenario(
        content=plot,
        overlay_kind=BuiltinOverlay.DATA_VIZ_CUTOUT,
        description=SYNTH_NOTE,
    )


def _row(elements, y, items, start_index, height=7.0):
    idx = start_index
    for x, width, role, label, eid in items:
        elements.append(
            UIElement(
                id=eid,
                role=role,
                label=label,
                bounds_mm=Rect(x, y, width, height),
                reading_index=idx,
            )
        )
        idx += 1
    return idx


TRANSACTIONS = [
    # (date, merchant, category, amount)
    ("Jun 2", "Coffee Shop", "Dining", "$4.75"),
    ("Jun 3", "Gas Station", "Auto", "$38.20"),
    ("Jun 5", "Book Store", "Shopping", "$21.99"),
    ("Jun 7", "Grocery Outlet", "Groceries", "$47.10"),
    ("Jun 9", "Pharmacy", "Health", "$12.60"),
    ("Jun 10", "Moto Parts & Repair", "Auto", "$36.40"),
    ("Jun 12", "Whole Foods Market", "Groceries", "$62.50"),
    ("Jun 14", "Movie Theater", "Entertainment", "$15.00"),
    ("Jun 15", "Electric Company", "Utilities", "$89.75"),
    ("Jun 16", "Car Wash", "Auto", "$18.00"),
]

COLS = {"date": (15.0, 22.0), "merchant": (39.0, 46.0), "category": (87.0, 26.0),
        "amount": (115.0, 22.0), "details": (139.0, 12.0)}


def bank_transactions() -> Scenario:
    elements: list[UIElement] = []
    idx = 0
    idx = _row(elements, 15.0, [
        (15.0, 40.0, Role.NAV_BAR_ITEM, "Accounts", "nav-accounts"),
        (60.0, 48.0, Role.NAV_BAR_ITEM, "Transactions", "nav-transactions"),
        (112.0, 36.0, Role.NAV_BAR_ITEM, "Support", "nav-support"),
    ], idx)
    idx = _row(elements, 25.0, [
        (15.0, 100.0, Role.HEADING, "Recent transactions", "heading"),
    ], idx)
    idx = _row(elements, 35.0, [
        (*COLS["date"], Role.TABLE_CELL, "Date", "hdr-date"),
        (*COLS["merchant"], Role.TABLE_CELL, "Merchant", "hdr-merchant"),
        (*COLS["category"], Role.TABLE_CELL, "Category", "hdr-category"),
        (*COLS["amount"], Role.TABLE_CELL, "Amount", "hdr-amount"),
    ], idx)
    for i, (date, merchant, category, amount) in enumerate(TRANSACTIONS):
        row_number = 4 + i  # grid rows 4..13, top-down
        y = 13.5 + 10.0 * (row_number - 1) + 1.0
        key = slug(merchant)
        items = [
            (*COLS["date"], Role.TABLE_CELL, date, f"tx{i}-date"),
            (*COLS["merchant"], Role.TABLE_CELL, merchant, f"tx{i}-{key}"),
            (*COLS["category"], Role.TABLE_CELL, category, f"tx{i}-category"),
            (*COLS["amount"], Role.TABLE_CELL, amount, f"tx{i}-amount"),
        ]
        if merchant == "Whole Foods Market":
            items.append((*COLS["details"], Role.LINK, "Details", f"tx{i}-details"))
        idx = _row(elements, y, items, idx)
    idx = _row(elements, 155.0, [
        (15.0, 40.0, Role.BUTTON, "Load more", "btn-load-more"),
        (60.0, 50.0, Role.LINK, "Export statement", "link-export"),
        (115.0, 38.0, Role.BUTTON, "New transfer", "btn-transfer"),
    ], idx)
    screen = InterfaceScreen(title="Bank Transactions", elements=tuple(elements))
    return Scenario(
        content=screen,
        overlay_kind=BuiltinOverlay.INTERFACE_BRAILLE,
        description=(
            "Synthetic mock banking screen. Anchored facts: the grid row 10 band "
            "holds exactly five elements (the Whole Foods Market transaction) and "
            "at least one amount exceeds $50. Everything else is invented."
        ),
    )


def tutorial_pdf() -> Scenario:
    elements: list[UIElement] = []
    idx = 0
    spec = [
        (15.0, 15.0, 120.0, 8.0, Role.HEADING, "Getting started guide", "title"),
        (15.0, 28.0, 133.0, 14.0, Role.LABEL,
         "This guide explains how to review your account activity.", "para-1"),
        (15.0, 46.0, 133.0, 12.0, Role.LABEL,
         "Use the table below to compare plan options.", "para-2"),
        (15.0, 64.0, 40.0, 8.0, Role.TABLE_CELL, "Plan", "cell-plan"),
        (60.0, 64.0, 40.0, 8.0, Role.TABLE_CELL, "Price", "cell-price"),
        (105.0, 64.0, 40.0, 8.0, Role.TABLE_CELL, "Limit", "cell-limit"),
        (15.0, 74.0, 40.0, 8.0, Role.TABLE_CELL, "Basic", "cell-basic"),
        (60.0, 74.0, 40.0, 8.0, Role.TABLE_CELL, "$0", "cell-0"),
        (105.0, 74.0, 40.0, 8.0, Role.TABLE_CELL, "$500", "cell-500"),
        (15.0, 92.0, 130.0, 8.0, Role.LABEL, "• Check your balance daily", "item-1"),
        (15.0, 104.0, 130.0, 8.0, Role.LABEL, "• Report lost cards immediately", "item-2"),
        (15.0, 116.0, 130.0, 8.0, Role.LABEL, "• Set up alerts", "item-3"),
        (15.0, 134.0, 60.0, 8.0, Role.LINK, "Contact support", "link-support"),
    ]
    for x, y, w, h, role, label, eid in spec:
        elements.append(UIElement(id=eid, role=role, label=label,
                                  bounds_mm=Rect(x, y, w, h), reading_index=idx))
        idx += 1
    screen = InterfaceScreen(title="Tutorial Document", elements=tuple(elements))
    return Scenario(
        content=screen,
        overlay_kind=BuiltinOverlay.INTERFACE_BRAILLE,
        description="Synthetic tutorial document with paragraphs, a table, and a list.",
    )


def check(scenarios: dict[str, Scenario]) -> None:
    movies = scenarios["movies_scatter"]
    overlay = builtin_overlay(movies.overlay_kind)
    plot = movies.content
    assert len(plot.points) == 36
    avengers = plot.point_by_id("avengers")
    cell = cell_at(project_point(avengers, plot, overlay.row_numbering), overlay)
    assert (cell.row, cell.col) == (13, 24), cell
    col17 = next(m for m in markers(overlay) if m.axis is Axis.COLUMN and m.index == 17)
    in17 = points_in(band_extent(col17, overlay), plot, overlay.row_numbering)
    assert len(in17) == 4 and all(p.y == 8.5 for p in in17), [(p.id, p.y) for p in in17]
    col24 = next(m for m in markers(overlay) if m.axis is Axis.COLUMN and m.index == 24)
    in24 = points_in(band_extent(col24, overlay), plot, overlay.row_numbering)
    assert [p.id for p in in24] == ["avengers"], in24
    highest = max(plot.points, key=lambda p: p.y)
    assert highest.id == "the-shawshank-redemption"

    bank = scenarios["bank_transactions"]
    boverlay = builtin_overlay(bank.overlay_kind)
    screen = bank.content
    row10 = next(m for m in markers(boverlay) if m.axis is Axis.ROW and m.index == 10)
    in_row10 = elements_in(band_extent(row10, boverlay), screen)
    assert len(in_row10) == 5, [(e.id, e.bounds_mm) for e in in_row10]
    assert any(e.label == "$62.50" for e in in_row10)
    coffee = next(e for e in screen.elements if e.label == "Coffee Shop")
    row4 = next(m for m in markers(boverlay) if m.axis is Axis.ROW and m.index == 4)
    col6 = next(m for m in markers(boverlay) if m.axis is Axis.COLUMN and m.index == 6)
    col11 = next(m for m in markers(boverlay) if m.axis is Axis.COLUMN and m.index == 11)
    assert coffee in elements_in(band_extent(row4, boverlay), screen)
    assert coffee in elements_in(band_extent(col6, boverlay), screen)
    assert coffee not in elements_in(band_extent(col11, boverlay), screen)
    amounts_in_11 = [e.label for e in elements_in(band_extent(col11, boverlay), screen)]
    print("column 11 line of sight:", amounts_in_11)

    print("all fixture anchor checks passed")


def main() -> None:
    scenarios = {
        "movies_scatter": movies_scatter(),
        "bank_transactions": bank_transactions(),
        "tutorial_pdf": tutorial_pdf(),
    }
    check(scenarios)
    OUT.mkdir(parents=True, exist_ok=True)
    for name, scenario in scenarios.items():
        data = formats.dump_scenario(scenario)
        formats.parse_scenario(data)  # round-trip sanity
        (OUT / f"{name}.scenario.json").write_bytes(data)
        print("wrote", name, len(data), "bytes")


if __name__ == "__main__":
    main()
