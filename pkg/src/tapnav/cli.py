"""Operator command line.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.
Human summaries go to stdout; machine-parsable diagnostics go to stderr,
one per line as "error: <location>: <message>".

Builtin overlay and fixture scenario names resolve before file paths; an
explicit "file:" prefix forces path resolution.
"""

from __future__ import annotations

import logging
import os
import sys
from pathlib import Path

import click

from . import formats, svg
from .engine import run_session
from .errors import DomainError, StreamError
from .gestures import RecognizerConfig
from .overlay import BuiltinOverlay, OverlayConfig, builtin_overlay
from .scenario import FixtureName, Scenario, load_fixture

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _fail_io(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_IO)


def _fail_validation(exc: formats.FormatError) -> None:
    if isinstance(exc, formats.SchemaViolationError):
        for v in exc.violations:
            click.echo(f"error: {v.path}: {v.message}", err=True)
    else:
        click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_VALIDATION)


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        _fail_io(f"cannot read {path}: {exc.strerror or exc}")
        raise AssertionError  # unreachable


def _write_bytes(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        _fail_io(f"cannot write {path}: {exc.strerror or exc}")


def _resolve_overlay(ref: str) -> OverlayConfig:
    if ref.startswith("file:"):
        ref = ref[len("file:"):]
    elif ref in [b.value for b in BuiltinOverlay]:
        return builtin_overlay(ref)
    try:
        return formats.parse_overlay(_read_bytes(ref))
    except formats.FormatError as exc:
        _fail_validation(exc)
        raise AssertionError


def _resolve_scenario(ref: str) -> Scenario:
    if ref.startswith("file:"):
        ref = ref[len("file:"):]
    elif ref in [f.value for f in FixtureName]:
        return load_fixture(ref)
    try:
        return formats.parse_scenario(_read_bytes(ref))
    except formats.FormatError as exc:
        _fail_validation(exc)
        raise AssertionError


def _load_recognizer_config(path: str | None) -> RecognizerConfig:
    if path is None:
        return RecognizerConfig()
    import json

    try:
        payload = json.loads(_read_bytes(path))
    except ValueError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    try:
        return formats.recognizer_config_from_payload(payload)
    except formats.FormatError as exc:
        _fail_validation(exc)
        raise AssertionError


@click.group()
def main() -> None:
    """Adaptive spatiotactile screen reader engine."""
    level = os.environ.get("TAPNAV_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))


@main.command("replay")
@click.option("--scenario", required=True, help="Fixture name or scenario file.")
@click.option("--overlay", required=True, help="Builtin overlay name or overlay file.")
@click.option("--trace", "trace_path", required=True, help="Touch trace file.")
@click.option("--out", "out_path", required=True, help="Transcript output path.")
@click.option("--recognizer-config", "recognizer_path", default=None,
              help="JSON file with recognizer threshold overrides.")
def cmd_replay(scenario: str, overlay: str, trace_path: str, out_path: str,
               recognizer_path: str | None) -> None:
    """Replay a touch trace into a deterministic transcript."""
    scn = _resolve_scenario(scenario)
    ovl = _resolve_overlay(overlay)
    cfg = _load_recognizer_config(recognizer_path)
    try:
        events = formats.parse_trace(_read_bytes(trace_path))
    except formats.FormatError as exc:
        _fail_validation(exc)
        raise AssertionError
    try:
        transcript = run_session(events, scn, ovl, cfg)
    except (StreamError, DomainError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    _write_bytes(out_path, formats.write_transcript(transcript))
    speeches = sum(1 for e in transcript.events if type(e).__name__ == "Speech")
    click.echo(
        f"wrote {len(transcript.events)} feedback events "
        f"({speeches} speech) to {out_path}"
    )


@main.command("validate")
@click.option("--scenario", "scenario_path", default=None, help="Scenario file to check.")
@click.option("--overlay", "overlay_path", default=None, help="Overlay file to check.")
@click.option("--trace", "trace_path", default=None, help="Trace file to check.")
def cmd_validate(scenario_path: str | None, overlay_path: str | None,
                 trace_path: str | None) -> None:
    """Validate a document against its schema and invariants."""
    chosen = [
        (fmt, p)
        for fmt, p in (
            ("scenario", scenario_path),
            ("overlay", overlay_path),
            ("trace", trace_path),
        )
        if p is not None
    ]
    if len(chosen) != 1:
        raise click.UsageError("pass exactly one of --scenario, --overlay, --trace")
    fmt, path = chosen[0]
    try:
        formats.parse_and_validate(_read_bytes(path), fmt)
    except formats.FormatError as exc:
        _fail_validation(exc)
    click.echo("OK")


@main.command("overlay-svg")
@click.option("--overlay", required=True, help="Builtin overlay name or overlay file.")
@click.option("--out", "out_path", required=True, help="SVG output path.")
def cmd_overlay_svg(overlay: str, out_path: str) -> None:
    """Export an overlay as a fabrication-ready SVG."""
    ovl = _resolve_overlay(overlay)
    document = svg.export_overlay_svg(ovl)
    _write_bytes(out_path, document.encode("utf-8"))
    cells = len(svg.marker_cells(ovl))
    from .overlay import quadrant_line_positions

    lines = len(quadrant_line_positions(ovl))
    click.echo(f"wrote {cells} markers and {lines} quadrant lines to {out_path}")


@main.command("serve")
@click.option("--port", required=True, type=click.IntRange(1, 65535))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--scenario", default=None, help="Default scenario (fixture name or file).")
@click.option("--overlay", default=None, help="Default overlay (builtin name or file).")
@click.option("--record", "record_dir", default=None,
              help="Directory for per-session trace/transcript recordings.")
def cmd_serve(port: int, host: str, scenario: str | None, overlay: str | None,
              record_dir: str | None) -> None:
    """Serve the WebSocket session protocol (and the simulator UI if bundled)."""
    import uvicorn

    from .service import ServiceConfig, create_app, default_static_dir

    config = ServiceConfig(
        default_scenario=_resolve_scenario(scenario) if scenario else None,
        default_overlay=_resolve_overlay(overlay) if overlay else None,
        record_dir=Path(record_dir) if record_dir else None,
    )
    app = create_app(config, static_dir=default_static_dir())
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except (OSError, SystemExit) as exc:
        if isinstance(exc, SystemExit) and not exc.code:
            return
        _fail_io(f"cannot serve on {host}:{port}: {exc}")


if __name__ == "__main__":
    main()
