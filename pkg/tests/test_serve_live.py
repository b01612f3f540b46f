"""End-to-end check of `tapnav serve` over a real socket."""

from __future__ import annotations

import asyncio
import json
import socket
import subprocess
import sys
import time

import pytest

from tapnav import formats
from tapnav.engine import run_session
from tapnav.overlay import builtin_overlay
from tapnav.scenario import load_fixture


def free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture
def server(tmp_path):
    port = free_port()
    record = tmp_path / "rec"
    proc = subprocess.Popen(
        [sys.executable, "-m", "tapnav.cli", "serve", "--port", str(port),
         "--record", str(record)],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE,
    )
    deadline = time.time() + 15
    while time.time() < deadline:
        try:
            with socket.create_connection(("127.0.0.1", port), timeout=0.2):
                break
        except OSError:
            if proc.poll() is not None:
                raise RuntimeError(proc.stderr.read().decode())
            time.sleep(0.05)
    else:
        proc.kill()
        raise RuntimeError("server did not come up")
    yield port, record
    proc.terminate()
    proc.wait(timeout=10)


def test_served_session_matches_offline_replay(server):
    import websockets

    port, record = server
    trace = formats.load_bundled_trace("over_50_browse.trace.json")
    offline = run_session(trace, load_fixture("BankTransactions"),
                          builtin_overlay("InterfaceBraille"))

    async def drive():
        speaks = []
        async with websockets.connect(f"ws://127.0.0.1:{port}/session") as ws:
            await ws.send(json.dumps({"type": "hello", "protocol_version": "1.0.0"}))
            assert json.loads(await ws.recv())["type"] == "ready"
            await ws.send(json.dumps({
                "type": "load", "scenario": "BankTransactions",
                "overlay": "InterfaceBraille",
            }))
            for e in trace:
                await ws.send(json.dumps({
                    "type": "touch", "pointer_id": e.pointer_id,
                    "phase": e.phase.value, "x_mm": e.pos.x, "y_mm": e.pos.y,
                    "t_ms": e.t,
                }))
            await ws.send(json.dumps({"type": "end_session"}))
            while True:
                msg = json.loads(await ws.recv())
                if msg["type"] == "speak":
                    speaks.append(msg["text"])
                if msg["type"] == "session_closed":
                    return speaks, msg["transcript_ref"]

    speaks, ref = asyncio.run(drive())
    expected = [e.text for e in offline.events if type(e).__name__ == "Speech"]
    assert speaks == expected
    recorded = (record / ref).read_bytes()
    assert recorded == formats.write_transcript(offline)
