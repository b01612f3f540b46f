"""WebSocket session protocol.

Clients stream touch events as JSON text frames and receive the engine's
feedback in order. One logical lane per session: each connection owns its
recognizer and engine state, events are handled strictly in arrival order,
and nothing is shared between sessions. Timestamps are client-supplied so a
recorded trace replays identically regardless of network jitter.

Handshake: hello{protocol_version} -> ready{session_id}; then
load{scenario, overlay, recognizer_config?} -> state; then any number of
touch{...}; end_session{} -> session_closed{transcript_ref?}.
"""

from __future__ import annotations

import json
import logging
import os
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from . import formats
from .engine import SessionState, dispatch, initial_state
from .errors import DomainError, StreamError
from .feedback import CancelAll, Earcon, FeedbackEvent, Speech, Transcript
from .gestures import IncrementalRecognizer, Phase, RecognizerConfig, TouchEvent
from .geometry import Point
from .overlay import BuiltinOverlay, OverlayConfig, builtin_overlay
from .scenario import Scenario, load_fixture

logger = logging.getLogger(__name__)

PROTOCOL_VERSION = "1.0.0"


@dataclass
class ServiceConfig:
    default_scenario: Scenario | None = None
    default_overlay: OverlayConfig | None = None
    recognizer_config: RecognizerConfig = field(default_factory=RecognizerConfig)
    record_dir: Path | None = None


@dataclass
class _Session:
    id: str
    recognizer: IncrementalRecognizer
    cfg: RecognizerConfig
    state: SessionState | None = None
    trace: list[TouchEvent] = field(default_factory=list)
    feedback: list[FeedbackEvent] = field(default_factory=list)
    event_count: int = 0


def _resolve_scenario(value: Any, defaults: ServiceConfig) -> Scenario:
    if value is None:
        if defaults.default_scenario is None:
            raise DomainError("no scenario given and the server has no default")
        return defaults.default_scenario
    if isinstance(value, str):
        return load_fixture(value)
    return formats._validate_scenario(value.get("payload", value))


def _resolve_overlay(value: Any, defaults: ServiceConfig) -> OverlayConfig:
    if value is None:
        if defaults.default_overlay is None:
            raise DomainError("no overlay given and the server has no default")
        return defaults.default_overlay
    if isinstance(value, str):
        try:
            return builtin_overlay(BuiltinOverlay(value))
        except ValueError:
            raise DomainError(f"unknown builtin overlay {value!r}") from None
    return formats._validate_overlay(value.get("payload", value))


def _state_message(s: SessionState) -> dict[str, Any]:
    selection = None
    if s.selection is not None:
        selection = {"axis": s.selection.axis.value, "index": s.selection.index}
    return {
        "type": "state",
        "mode": s.mode.value,
        "cursor_index": s.cursor,
        "selection": selection,
    }


def _feedback_message(e: FeedbackEvent) -> dict[str, Any]:
    if isinstance(e, Speech):
        return {"type": "speak", "text": e.text, "interrupts": e.interrupts}
    if isinstance(e, Earcon):
        return {"type": "earcon", "kind": e.kind.value}
    assert isinstance(e, CancelAll)
    return {"type": "cancel_all"}


class _ProtocolError(Exception):
    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


def create_app(config: ServiceConfig | None = None, static_dir: Path | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="tapnav session service")

    @app.websocket("/session")
    async def session_endpoint(ws: WebSocket) -> None:
        await ws.accept()
        session: _Session | None = None
        try:
            session = await _handshake(ws, config)
            await _session_loop(ws, session, config)
        except _ProtocolError as exc:
            await ws.send_json({"type": "error", "code": exc.code, "message": str(exc)})
            await ws.close()
            if session is not None:
                _record(session, config)
        except WebSocketDisconnect:
            if session is not None:
                _record(session, config)

    if static_dir is not None and static_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app


async def _receive(ws: WebSocket) -> dict[str, Any]:
    raw = await ws.receive_text()
    try:
        msg = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _ProtocolError("bad_message", f"frame is not valid JSON: {exc.msg}") from None
    if not isinstance(msg, dict) or not isinstance(msg.get("type"), str):
        raise _ProtocolError("bad_message", "frame must be an object with a string 'type'")
    return msg


async def _handshake(ws: WebSocket, config: ServiceConfig) -> _Session:
    msg = await _receive(ws)
    if msg["type"] != "hello":
        raise _ProtocolError("protocol", "first message must be hello")
    version = msg.get("protocol_version")
    if not isinstance(version, str) or version.split(".")[0] != PROTOCOL_VERSION.split(".")[0]:
        raise _ProtocolError(
            "version", f"protocol {version!r} unsupported (major {PROTOCOL_VERSION.split('.')[0]})"
        )
    session_id = uuid.uuid4().hex
    await ws.send_json({"type": "ready", "session_id": session_id})
    return _Session(
        id=session_id,
        recognizer=IncrementalRecognizer(config.recognizer_config),
        cfg=config.recognizer_config,
    )


async def _session_loop(ws: WebSocket, session: _Session, config: ServiceConfig) -> None:
    loaded = False
    while True:
        msg = await _receive(ws)
        kind = msg["type"]
        if kind == "hello":
            raise _ProtocolError("protocol", "hello already sent")
        if kind == "load":
            if loaded:
                raise _ProtocolError("protocol", "session already loaded")
            try:
                scenario = _resolve_scenario(msg.get("scenario"), config)
                overlay = _resolve_overlay(msg.get("overlay"), config)
                cfg = config.recognizer_config
                if msg.get("recognizer_config") is not None:
                    cfg = formats.recognizer_config_from_payload(msg["recognizer_config"])
                state = initial_state(scenario, overlay)
            except (DomainError, formats.FormatError) as exc:
                raise _ProtocolError("bad_load", str(exc)) from None
            session.state = state
            session.cfg = cfg
            session.recognizer = IncrementalRecognizer(cfg)
            loaded = True
            await ws.send_json(_state_message(session.state))
            continue
        if kind == "touch":
            if not loaded:
                raise _ProtocolError("not_loaded", "load a scenario before sending touch events")
            await _handle_touch(ws, session, msg)
            continue
        if kind == "end_session":
            ref = None
            if loaded:
                for gesture in session.recognizer.finish(strict=False):
                    await _dispatch_and_send(ws, session, gesture)
                ref = _record(session, config)
            await ws.send_json({"type": "session_closed", "transcript_ref": ref})
            await ws.close()
            return
        raise _ProtocolError("protocol", f"unknown message type {kind!r}")


async def _handle_touch(ws: WebSocket, session: _Session, msg: dict[str, Any]) -> None:
    try:
        pid = msg["pointer_id"]
        phase = Phase(msg["phase"])
        x = float(msg["x_mm"])
        y = float(msg["y_mm"])
        t = int(msg["t_ms"])
        if not isinstance(pid, int) or isinstance(pid, bool) or pid < 0:
            raise ValueError("pointer_id must be a non-negative integer")
    except (KeyError, TypeError, ValueError) as exc:
        raise _ProtocolError("bad_message", f"malformed touch message: {exc}") from None
    event = TouchEvent(pointer_id=pid, phase=phase, pos=Point(x, y), t=t)
    index = session.event_count
    session.event_count += 1
    session.trace.append(event)
    try:
        gestures = session.recognizer.feed(event, index)
    except StreamError as exc:
        raise _ProtocolError("stream", str(exc)) from None
    for gesture in gestures:
        await _dispatch_and_send(ws, session, gesture)


async def _dispatch_and_send(ws: WebSocket, session: _Session, gesture) -> None:
    before = session.state
    state, events = dispatch(gesture, before)
    session.state = state
    session.feedback.extend(events)
    for e in events:
        await ws.send_json(_feedback_message(e))
    if (before.mode, before.cursor, before.selection) != (
        state.mode,
        state.cursor,
        state.selection,
    ):
        await ws.send_json(_state_message(state))


def _record(session: _Session, config: ServiceConfig) -> str | None:
    if config.record_dir is None or session.state is None:
        return None
    config.record_dir.mkdir(parents=True, exist_ok=True)
    trace_path = config.record_dir / f"{session.id}.trace.json"
    transcript_path = config.record_dir / f"{session.id}.transcript.jsonl"
    trace_path.write_bytes(formats.dump_trace(session.trace))
    transcript = Transcript(
        events=tuple(session.feedback),
        scenario_name=session.state.scenario.title,
        overlay_name=session.state.overlay.name,
        config_hash=formats.session_config_hash(
            session.state.scenario, session.state.overlay, session.cfg
        ),
    )
    transcript_path.write_bytes(formats.write_transcript(transcript))
    return transcript_path.name


def default_static_dir() -> Path | None:
    """Simulator bundle location: $TAPNAV_UI_DIR, else ./frontend/dist."""
    env = os.environ.get("TAPNAV_UI_DIR")
    if env:
        return Path(env)
    local = Path("frontend") / "dist"
    if local.is_dir():
        return local
    return None
