"""One-off generator for the scripted task traces and golden transcripts.

Two study tasks are scripted against the bundled fixtures: looking up the
Avengers data point via column 24 on the scatterplot, and browsing to the
over-$50 transaction on row 10 of the banking screen through spatial
navigation. Run from the repo root; prints the resulting transcripts for
manual review before freezing.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tapnav import formats
from tapnav.engine import run_session
from tapnav.geometry import Point
from tapnav.gestures import Phase, TouchEvent
from tapnav.overlay import builtin_overlay
from tapnav.scenario import load_fixture

ROOT = Path(__file__).resolve().parents[1]
TRACES = ROOT / "src" / "tapnav" / "fixtures" / "traces"
GOLDEN = ROOT / "tests" / "golden"


def ev(pid: int, phase: str, x: float, y: float, t: int) -> TouchEvent:
    return TouchEvent(pointer_id=pid, phase=Phase(phase), pos=Point(x, y), t=t)


def avengers_lookup() -> list[TouchEvent]:
    events = []
    # four-finger tap: visualization overview
    for i, (x, y) in enumerate([(120, 80), (130, 80), (125, 90), (135, 90)]):
        events.append(ev(i, "down", x, y, i * 20))
    for i, (x, y) in enumerate([(120, 80), (130, 80), (125, 90), (135, 90)]):
        events.append(ev(i, "up", x, y, 150 + i * 10))
    # single tap on the x axis strip: scale information
    events.append(ev(0, "down", 130.0, 162.0, 600))
    events.append(ev(0, "up", 130.0, 162.0, 680))
    # long press on column marker 24, then drag up its band to the movie
    events.append(ev(0, "down", 243.5, 162.0, 1200))
    path = [(243.5, 150.0, 1900), (243.5, 120.0, 2000), (243.5, 90.0, 2100),
            (243.6, 60.0, 2200), (243.8, 30.0, 2300), (243.9, 20.0, 2400)]
    for x, y, t in path:
        events.append(ev(0, "move", x, y, t))
    events.append(ev(0, "up", 243.9, 20.0, 2600))
    # three-finger tap: replay the data point details
    for i, (x, y) in enumerate([(100, 80), (110, 80), (105, 88)]):
        events.append(ev(i, "down", x, y, 3400 + i * 20))
    for i, (x, y) in enumerate([(100, 80), (110, 80), (105, 88)]):
        events.append(ev(i, "up", x, y, 3520 + i * 10))
    # two-finger tap: cancel audio
    events.append(ev(0, "down", 100.0, 80.0, 4400))
    events.append(ev(1, "down", 110.0, 82.0, 4420))
    events.append(ev(0, "up", 100.0, 80.0, 4500))
    events.append(ev(1, "up", 110.0, 82.0, 4510))
    return events


def over_50_browse() -> list[TouchEvent]:
    events = []
    # survey row 10 in default mode
    events.append(ev(0, "down", 5.0, 108.5, 0))
    events.append(ev(0, "move", 5.0, 108.5, 700))
    events.append(ev(0, "up", 5.0, 108.5, 900))

    def tap3(t0: int) -> None:
        for i, (x, y) in enumerate([(70, 200), (80, 200), (75, 208)]):
            events.append(ev(i, "down", x, y, t0 + i * 20))
        for i, (x, y) in enumerate([(70, 200), (80, 200), (75, 208)]):
            events.append(ev(i, "up", x, y, t0 + 120 + i * 10))

    # three-finger double tap: spatial navigation on
    tap3(1500)
    tap3(1800)
    # select row 10
    events.append(ev(0, "down", 5.0, 108.5, 2500))
    events.append(ev(0, "move", 5.0, 108.5, 3100))
    events.append(ev(0, "up", 5.0, 108.5, 3300))
    # swipe through the row: merchant, category, amount, details, boundary
    for k in range(5):
        t0 = 4000 + 600 * k
        events.append(ev(0, "down", 60.0, 150.0, t0))
        events.append(ev(0, "move", 75.0, 150.0, t0 + 100))
        events.append(ev(0, "up", 75.0, 150.0, t0 + 150))
    # two-finger swipe down: disabled in spatial navigation
    events.append(ev(0, "down", 60.0, 120.0, 7000))
    events.append(ev(1, "down", 70.0, 120.0, 7010))
    events.append(ev(0, "move", 60.0, 135.0, 7100))
    events.append(ev(1, "move", 70.0, 135.0, 7110))
    events.append(ev(0, "up", 60.0, 135.0, 7160))
    events.append(ev(1, "up", 70.0, 135.0, 7165))
    # three-finger tap: replay the last item announcement
    tap3(7800)
    # three-finger double tap: spatial navigation off
    tap3(8400)
    tap3(8700)
    return events


def main() -> None:
    TRACES.mkdir(parents=True, exist_ok=True)
    GOLDEN.mkdir(parents=True, exist_ok=True)
    jobs = [
        ("avengers_lookup", avengers_lookup(), "MoviesScatter"),
        ("over_50_browse", over_50_browse(), "BankTransactions"),
    ]
    for name, events, fixture in jobs:
        trace_bytes = formats.dump_trace(events)
        formats.parse_trace(trace_bytes)
        (TRACES / f"{name}.trace.json").write_bytes(trace_bytes)
        scenario = load_fixture(fixture)
        overlay = builtin_overlay(scenario.overlay_kind)
        transcript = run_session(events, scenario, overlay)
        data = formats.write_transcript(transcript)
        (GOLDEN / f"{name}.transcript.jsonl").write_bytes(data)
        print(f"=== {name} ===")
        sys.stdout.write(data.decode())
        print()


if __name__ == "__main__":
    main()
