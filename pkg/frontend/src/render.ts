// Canvas rendering of the scene: scenario content underneath, the tactile
// overlay drawn as a visible high-contrast layer on top, plus the active
// spatial selection band and cursor focus.

import type { SceneModel } from "./scene.js";
import { bandRect } from "./scene.js";
import type { SelectionState } from "./protocol.js";
import type { ViewportMapping } from "./viewport.js";
import { mmToPx } from "./viewport.js";

export interface RenderState {
  selection: SelectionState | null;
  cursorIndex: number | null;
  hoverMm: { x: number; y: number } | null;
}

const COLORS = {
  screen: "#ffffff",
  frame: "#222222",
  marker: "#0b7a3e",
  markerFill: "rgba(11, 122, 62, 0.18)",
  quadrant: "#0b7a3e",
  element: "#3a6ea5",
  elementFill: "rgba(58, 110, 165, 0.12)",
  point: "#b33939",
  selection: "rgba(250, 202, 21, 0.30)",
  cursor: "#e67e22",
  plotArea: "#f7f7f2",
};

export function drawScene(
  ctx: CanvasRenderingContext2D,
  scene: SceneModel,
  view: ViewportMapping,
  state: RenderState,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  const o = mmToPx(view, 0, 0);
  const s = view.pxPerMm;

  ctx.fillStyle = COLORS.screen;
  ctx.fillRect(o.x, o.y, scene.widthMm * s, scene.heightMm * s);
  ctx.strokeStyle = COLORS.frame;
  ctx.lineWidth = 2;
  ctx.strokeRect(o.x, o.y, scene.widthMm * s, scene.heightMm * s);

  if (scene.plotArea) {
    ctx.fillStyle = COLORS.plotArea;
    ctx.fillRect(
      o.x + scene.plotArea.x * s,
      o.y + scene.plotArea.y * s,
      scene.plotArea.width * s,
      scene.plotArea.height * s,
    );
  }

  // active spatial selection band
  if (state.selection) {
    const band = bandRect(scene.overlay, state.selection.axis, state.selection.index);
    ctx.fillStyle = COLORS.selection;
    ctx.fillRect(o.x + band.x * s, o.y + band.y * s, band.width * s, band.height * s);
  }

  // interface elements
  ctx.font = `${Math.max(3 * s, 9)}px system-ui, sans-serif`;
  ctx.textBaseline = "middle";
  for (const e of scene.elements) {
    const b = e.bounds_mm;
    ctx.fillStyle = COLORS.elementFill;
    ctx.fillRect(o.x + b.x * s, o.y + b.y * s, b.width * s, b.height * s);
    ctx.strokeStyle = e.reading_index === state.cursorIndex ? COLORS.cursor : COLORS.element;
    ctx.lineWidth = e.reading_index === state.cursorIndex ? 3 : 1;
    ctx.strokeRect(o.x + b.x * s, o.y + b.y * s, b.width * s, b.height * s);
    ctx.fillStyle = COLORS.frame;
    ctx.fillText(
      e.label,
      o.x + (b.x + 1) * s,
      o.y + (b.y + b.height / 2) * s,
      (b.width - 2) * s,
    );
  }

  // scatter points
  for (const p of scene.points) {
    const c = mmToPx(view, p.xMm, p.yMm);
    ctx.fillStyle = COLORS.point;
    ctx.beginPath();
    ctx.arc(c.x, c.y, Math.max(1.6 * s, 3), 0, Math.PI * 2);
    ctx.fill();
  }

  // overlay markers
  for (const m of scene.markers) {
    drawMarker(ctx, view, m.xMm, m.yMm, scene.overlay.marker_size_mm, m.shape, m.label);
  }
  ctx.strokeStyle = COLORS.quadrant;
  ctx.lineWidth = 3;
  for (const q of scene.quadrantLines) {
    const a = mmToPx(view, q.xMm, q.y0Mm);
    const b = mmToPx(view, q.xMm, q.y1Mm);
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }

  // finger position while exploring
  if (state.hoverMm) {
    const c = mmToPx(view, state.hoverMm.x, state.hoverMm.y);
    ctx.strokeStyle = COLORS.cursor;
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.arc(c.x, c.y, 9, 0, Math.PI * 2);
    ctx.stroke();
  }
}

function drawMarker(
  ctx: CanvasRenderingContext2D,
  view: ViewportMapping,
  xMm: number,
  yMm: number,
  sizeMm: number,
  shape: string | null,
  label: string,
): void {
  const c = mmToPx(view, xMm, yMm);
  const h = (sizeMm / 2) * view.pxPerMm;
  ctx.strokeStyle = COLORS.marker;
  ctx.fillStyle = COLORS.markerFill;
  ctx.lineWidth = 2;
  ctx.beginPath();
  switch (shape) {
    case "circle":
      ctx.arc(c.x, c.y, h, 0, Math.PI * 2);
      break;
    case "square":
      ctx.rect(c.x - h, c.y - h, 2 * h, 2 * h);
      break;
    case "triangle":
      ctx.moveTo(c.x, c.y - h);
      ctx.lineTo(c.x + h, c.y + h);
      ctx.lineTo(c.x - h, c.y + h);
      ctx.closePath();
      break;
    case "pentagon":
      for (let k = 0; k < 5; k++) {
        const angle = -Math.PI / 2 + (k * 2 * Math.PI) / 5;
        const px = c.x + h * Math.cos(angle);
        const py = c.y + h * Math.sin(angle);
        if (k === 0) ctx.moveTo(px, py);
        else ctx.lineTo(px, py);
      }
      ctx.closePath();
      break;
    case "double_diamond":
      ctx.moveTo(c.x - h, c.y);
      ctx.lineTo(c.x - h / 2, c.y - h);
      ctx.lineTo(c.x, c.y);
      ctx.lineTo(c.x - h / 2, c.y + h);
      ctx.closePath();
      ctx.moveTo(c.x, c.y);
      ctx.lineTo(c.x + h / 2, c.y - h);
      ctx.lineTo(c.x + h, c.y);
      ctx.lineTo(c.x + h / 2, c.y + h);
      ctx.closePath();
      break;
    default: {
      // lettered or plain marker: a rounded bump with its label
      ctx.arc(c.x, c.y, h, 0, Math.PI * 2);
      ctx.fill();
      ctx.stroke();
      ctx.fillStyle = COLORS.marker;
      ctx.font = `bold ${Math.max(h * 1.2, 10)}px system-ui, sans-serif`;
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(label, c.x, c.y);
      ctx.textAlign = "start";
      return;
    }
  }
  ctx.fill();
  ctx.stroke();
}
