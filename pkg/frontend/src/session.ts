// Session controller: protocol driving, transcript pane model, trace export.
//
// Transport-agnostic so the same controller runs in the browser (native
// WebSocket) and in node tests (the `ws` package). The server is the source
// of truth: mode, cursor, and selection come exclusively from its state
// messages.

import type {
  ClientMessage,
  EarconKind,
  OverlayDocument,
  ScenarioDocument,
  SelectionState,
  ServerMessage,
  TouchMsg,
  TraceDocument,
} from "./protocol.js";
import { PROTOCOL_VERSION } from "./protocol.js";

export interface Transport {
  send(data: string): void;
  close(): void;
}

export interface TranscriptEntry {
  at: number; // wall-clock ms when the message arrived
  kind: "speak" | "earcon" | "cancel_all" | "info";
  text: string;
}

export interface SessionHooks {
  onSpeak?(text: string, interrupts: boolean): void;
  onEarcon?(kind: EarconKind): void;
  onCancelAll?(): void;
  onStateChange?(state: SessionUiState): void;
  onTranscript?(entry: TranscriptEntry): void;
  onClosed?(transcriptRef: string | null): void;
  onError?(code: string, message: string): void;
}

export interface SessionUiState {
  mode: "idle" | "exploring" | "spatial_nav";
  cursorIndex: number | null;
  selection: SelectionState | null;
  ready: boolean;
}

export class SessionController {
  readonly transcript: TranscriptEntry[] = [];
  readonly speechTexts: string[] = [];
  state: SessionUiState = { mode: "idle", cursorIndex: null, selection: null, ready: false };

  private transport: Transport | null = null;
  private sentTouches: TouchMsg[] = [];
  private hooks: SessionHooks;
  private now: () => number;

  constructor(hooks: SessionHooks = {}, now: () => number = () => Date.now()) {
    this.hooks = hooks;
    this.now = now;
  }

  attach(transport: Transport): void {
    this.transport = transport;
    this.send({ type: "hello", protocol_version: PROTOCOL_VERSION });
  }

  load(
    scenario: string | ScenarioDocument | undefined,
    overlay: string | OverlayDocument | undefined,
  ): void {
    this.send({ type: "load", scenario, overlay });
  }

  sendTouches(messages: TouchMsg[]): void {
    for (const msg of messages) {
      this.sentTouches.push(msg);
      this.send(msg);
    }
  }

  endSession(): void {
    this.send({ type: "end_session" });
  }

  private send(msg: ClientMessage): void {
    if (!this.transport) throw new Error("no transport attached");
    this.transport.send(JSON.stringify(msg));
  }

  private addEntry(kind: TranscriptEntry["kind"], text: string): void {
    const entry = { at: this.now(), kind, text };
    this.transcript.push(entry);
    this.hooks.onTranscript?.(entry);
  }

  handleMessage(raw: string): void {
    let msg: ServerMessage;
    try {
      msg = JSON.parse(raw) as ServerMessage;
    } catch {
      this.addEntry("info", `unparseable server frame: ${raw.slice(0, 80)}`);
      return;
    }
    switch (msg.type) {
      case "ready":
        this.state = { ...this.state, ready: true };
        this.addEntry("info", `session ${msg.session_id}`);
        this.hooks.onStateChange?.(this.state);
        break;
      case "speak":
        this.speechTexts.push(msg.text);
        this.addEntry("speak", msg.text);
        this.hooks.onSpeak?.(msg.text, msg.interrupts);
        break;
      case "earcon":
        this.addEntry("earcon", msg.kind);
        this.hooks.onEarcon?.(msg.kind);
        break;
      case "cancel_all":
        this.addEntry("cancel_all", "cancel");
        this.hooks.onCancelAll?.();
        break;
      case "state":
        this.state = {
          mode: msg.mode,
          cursorIndex: msg.cursor_index,
          selection: msg.selection,
          ready: true,
        };
        this.hooks.onStateChange?.(this.state);
        break;
      case "error":
        this.addEntry("info", `error ${msg.code}: ${msg.message}`);
        this.hooks.onError?.(msg.code, msg.message);
        break;
      case "session_closed":
        this.addEntry("info", "session closed");
        this.hooks.onClosed?.(msg.transcript_ref);
        break;
    }
  }

  /** Everything sent so far as a replayable trace document. */
  exportTrace(): TraceDocument {
    return {
      format: "trace",
      version: "1.0.0",
      payload: {
        events: this.sentTouches.map((e) => ({
          pointer_id: e.pointer_id,
          phase: e.phase,
          x_mm: e.x_mm,
          y_mm: e.y_mm,
          t_ms: e.t_ms,
        })),
      },
    };
  }
}
