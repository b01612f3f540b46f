// Session controller against a fake transport.

import { describe, expect, it } from "vitest";

import { SessionController, type Transport } from "../src/session.js";

function fake(): { transport: Transport; sent: string[] } {
  const sent: string[] = [];
  return { transport: { send: (d) => sent.push(d), close: () => {} }, sent };
}

describe("session controller", () => {
  it("sends hello on attach and load afterwards", () => {
    const { transport, sent } = fake();
    const c = new SessionController();
    c.attach(transport);
    c.load("MoviesScatter", "DataVizCutout");
    expect(JSON.parse(sent[0])).toEqual({ type: "hello", protocol_version: "1.0.0" });
    expect(JSON.parse(sent[1])).toMatchObject({ type: "load", scenario: "MoviesScatter" });
  });

  it("mirrors speak messages into the pane model in order", () => {
    const { transport } = fake();
    const spoken: string[] = [];
    const c = new SessionController({ onSpeak: (t) => spoken.push(t) });
    c.attach(transport);
    c.handleMessage(JSON.stringify({ type: "speak", text: "first", interrupts: true }));
    c.handleMessage(JSON.stringify({ type: "earcon", kind: "tick" }));
    c.handleMessage(JSON.stringify({ type: "speak", text: "second", interrupts: false }));
    expect(c.speechTexts).toEqual(["first", "second"]);
    expect(spoken).toEqual(["first", "second"]);
    expect(c.transcript.map((e) => e.kind)).toEqual(["speak", "earcon", "speak"]);
  });

  it("tracks server state as the source of truth", () => {
    const { transport } = fake();
    const c = new SessionController();
    c.attach(transport);
    c.handleMessage(JSON.stringify({
      type: "state", mode: "spatial_nav", cursor_index: 7,
      selection: { axis: "row", index: 10 },
    }));
    expect(c.state.mode).toBe("spatial_nav");
    expect(c.state.cursorIndex).toBe(7);
    expect(c.state.selection).toEqual({ axis: "row", index: 10 });
  });

  it("exports sent touches as a valid trace document", () => {
    const { transport } = fake();
    const c = new SessionController();
    c.attach(transport);
    c.sendTouches([
      { type: "touch", pointer_id: 0, phase: "down", x_mm: 5, y_mm: 108.5, t_ms: 0 },
      { type: "touch", pointer_id: 0, phase: "up", x_mm: 5, y_mm: 108.5, t_ms: 80 },
    ]);
    const doc = c.exportTrace();
    expect(doc.format).toBe("trace");
    expect(doc.version).toBe("1.0.0");
    expect(doc.payload.events).toHaveLength(2);
    expect(doc.payload.events[0]).toEqual({
      pointer_id: 0, phase: "down", x_mm: 5, y_mm: 108.5, t_ms: 0,
    });
  });
});
