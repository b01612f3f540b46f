// Simulator app wiring: fixture selection, WebSocket session, pointer
// capture with keyboard chords, canvas rendering, transcript pane, and
// trace download.

import { FeedbackAudio } from "./audio.js";
import type {
  OverlayDocument,
  ScenarioDocument,
  TouchMsg,
} from "./protocol.js";
import { drawScene, type RenderState } from "./render.js";
import { buildScene, type SceneModel } from "./scene.js";
import { SessionController, type Transport } from "./session.js";
import { GestureSynth, chordFingers } from "./synth.js";
import { clampMm, fitViewport, pxToMm, type ViewportMapping } from "./viewport.js";

const FIXTURES: Record<string, { scenario: string; overlay: string }> = {
  MoviesScatter: { scenario: "movies_scatter", overlay: "DataVizCutout" },
  BankTransactions: { scenario: "bank_transactions", overlay: "InterfaceBraille" },
  TutorialPdf: { scenario: "tutorial_pdf", overlay: "InterfaceBraille" },
};

const canvas = document.getElementById("screen") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const fixtureSelect = document.getElementById("fixture") as HTMLSelectElement;
const connectBtn = document.getElementById("connect") as HTMLButtonElement;
const endBtn = document.getElementById("end") as HTMLButtonElement;
const downloadBtn = document.getElementById("download") as HTMLButtonElement;
const muteInput = document.getElementById("mute") as HTMLInputElement;
const pane = document.getElementById("transcript") as HTMLElement;
const modeBadge = document.getElementById("mode") as HTMLElement;
const banner = document.getElementById("banner") as HTMLElement;

const audio = new FeedbackAudio();
if (!audio.speechAvailable) {
  banner.textContent = "Speech synthesis is unavailable in this browser: running in visual-only mode.";
  banner.hidden = false;
}

let scene: SceneModel | null = null;
let view: ViewportMapping | null = null;
let controller: SessionController | null = null;
let socket: WebSocket | null = null;
const synth = new GestureSynth();
const renderState: RenderState = { selection: null, cursorIndex: null, hoverMm: null };
let heldDigit: number | null = null;
let sessionT0 = 0;

function redraw(): void {
  if (!scene) return;
  const rect = canvas.getBoundingClientRect();
  canvas.width = rect.width * devicePixelRatio;
  canvas.height = rect.height * devicePixelRatio;
  ctx.setTransform(devicePixelRatio, 0, 0, devicePixelRatio, 0, 0);
  view = fitViewport(rect.width, rect.height, scene.widthMm, scene.heightMm);
  drawScene(ctx, scene, view, renderState);
}

async function fetchDoc<T>(path: string): Promise<T> {
  const res = await fetch(path);
  if (!res.ok) throw new Error(`cannot load ${path}: ${res.status}`);
  return (await res.json()) as T;
}

function appendPane(kind: string, text: string): void {
  const div = document.createElement("div");
  div.className = `entry ${kind}`;
  div.textContent = kind === "speak" ? text : `[${text}]`;
  pane.appendChild(div);
  pane.scrollTop = pane.scrollHeight;
}

async function connect(): Promise<void> {
  const name = fixtureSelect.value;
  const files = FIXTURES[name];
  const scenarioDoc = await fetchDoc<ScenarioDocument>(`fixtures/${files.scenario}.scenario.json`);
  const overlayDoc = await fetchDoc<OverlayDocument>(`fixtures/${files.overlay}.overlay.json`);
  scene = buildScene(overlayDoc.payload, scenarioDoc.payload);
  renderState.selection = null;
  renderState.cursorIndex = null;
  pane.textContent = "";
  redraw();

  controller = new SessionController({
    onSpeak: (text, interrupts) => audio.speak(text, interrupts),
    onEarcon: (kind) => audio.earcon(kind),
    onCancelAll: () => audio.cancelSpeech(),
    onTranscript: (entry) => appendPane(entry.kind, entry.text),
    onStateChange: (state) => {
      renderState.selection = state.selection;
      renderState.cursorIndex = state.cursorIndex;
      modeBadge.textContent = state.mode.replace("_", " ");
      modeBadge.dataset.mode = state.mode;
      redraw();
    },
    onError: (code, message) => appendPane("info", `${code}: ${message}`),
    onClosed: () => {
      appendPane("info", "session closed");
      socket?.close();
    },
  });

  const url = `${location.protocol === "https:" ? "wss" : "ws"}://${location.host}/session`;
  socket = new WebSocket(url);
  const transport: Transport = {
    send: (data) => socket!.send(data),
    close: () => socket!.close(),
  };
  socket.addEventListener("open", () => {
    controller!.attach(transport);
    controller!.load(scenarioDoc, overlayDoc);
    sessionT0 = performance.now();
    appendPane("info", `connected: ${name}`);
  });
  socket.addEventListener("message", (ev) => controller!.handleMessage(String(ev.data)));
  socket.addEventListener("close", () => appendPane("info", "disconnected"));
  socket.addEventListener("error", () => appendPane("info", "connection error"));
}

function now(): number {
  return performance.now() - sessionT0;
}

function pointerMm(ev: PointerEvent): { x: number; y: number } | null {
  if (!view) return null;
  const rect = canvas.getBoundingClientRect();
  const mm = pxToMm(view, ev.clientX - rect.left, ev.clientY - rect.top);
  return clampMm(view, mm.x, mm.y);
}

function sendAll(messages: TouchMsg[]): void {
  if (controller && messages.length) controller.sendTouches(messages);
}

canvas.addEventListener("pointerdown", (ev) => {
  const mm = pointerMm(ev);
  if (!mm || !controller) return;
  canvas.setPointerCapture(ev.pointerId);
  renderState.hoverMm = mm;
  sendAll(synth.begin(mm.x, mm.y, now(), chordFingers(heldDigit)));
  redraw();
});

canvas.addEventListener("pointermove", (ev) => {
  const mm = pointerMm(ev);
  if (!mm || !controller || !synth.isDown) return;
  renderState.hoverMm = mm;
  sendAll(synth.move(mm.x, mm.y, now()));
  redraw();
});

function liftPointer(ev: PointerEvent): void {
  const mm = pointerMm(ev);
  if (!mm || !controller) return;
  renderState.hoverMm = null;
  sendAll(synth.end(mm.x, mm.y, now()));
  redraw();
}

canvas.addEventListener("pointerup", liftPointer);
canvas.addEventListener("pointercancel", liftPointer);

window.addEventListener("keydown", (ev) => {
  if (ev.key >= "2" && ev.key <= "4") heldDigit = Number(ev.key);
});
window.addEventListener("keyup", (ev) => {
  if (Number(ev.key) === heldDigit) heldDigit = null;
});

connectBtn.addEventListener("click", () => {
  connect().catch((err) => appendPane("info", String(err)));
});
endBtn.addEventListener("click", () => controller?.endSession());
muteInput.addEventListener("change", () => audio.setMuted(muteInput.checked));

downloadBtn.addEventListener("click", () => {
  if (!controller) return;
  const doc = controller.exportTrace();
  const blob = new Blob([JSON.stringify(doc, null, 2) + "\n"], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = `${fixtureSelect.value}.trace.json`;
  a.click();
  URL.revokeObjectURL(a.href);
});

window.addEventListener("resize", redraw);
