// Drawable scene model derived from overlay + scenario documents.
//
// Marker placement mirrors the engine's grid math: bands start margin_mm
// from the screen edge and marker centers sit at margin + (i - 1/2) * pitch;
// the axis strips are one pitch deep at their edges. The live wire tests
// depend on this agreement: hovers aimed with these coordinates must hit
// the engine's markers.

import type {
  ElementPayload,
  OverlayPayload,
  PointPayload,
  RectMm,
  ScenarioPayload,
} from "./protocol.js";

export type Shape = "circle" | "double_diamond" | "triangle" | "square" | "pentagon";

const SHAPE_CYCLE: Shape[] = ["circle", "double_diamond", "triangle", "square", "pentagon"];

export interface MarkerItem {
  axis: "row" | "column";
  index: number;
  label: string;
  shape: Shape | null;
  xMm: number;
  yMm: number;
}

export interface QuadrantLineItem {
  xMm: number;
  y0Mm: number;
  y1Mm: number;
}

export interface PointItem {
  id: string;
  label: string;
  xMm: number;
  yMm: number;
}

export interface SceneModel {
  widthMm: number;
  heightMm: number;
  overlay: OverlayPayload;
  markers: MarkerItem[];
  quadrantLines: QuadrantLineItem[];
  points: PointItem[];
  elements: ElementPayload[];
  plotArea: RectMm | null;
}

function markerLabel(overlay: OverlayPayload, index: number): string {
  if (overlay.marker_style === "braille_letters") {
    return String.fromCharCode("a".charCodeAt(0) + index - 1);
  }
  if (overlay.marker_style === "cutout_shapes") {
    return `marker ${index}`;
  }
  return String(index);
}

function markerShape(overlay: OverlayPayload, index: number): Shape | null {
  if (overlay.marker_style !== "cutout_shapes") return null;
  return SHAPE_CYCLE[(index - 1) % SHAPE_CYCLE.length];
}

export function markerCenter(
  overlay: OverlayPayload,
  axis: "row" | "column",
  index: number,
): { x: number; y: number } {
  if (axis === "column") {
    const x = overlay.margin_mm + (index - 0.5) * overlay.pitch_mm;
    const y =
      overlay.col_axis_edge === "top"
        ? overlay.pitch_mm / 2
        : overlay.screen_height_mm - overlay.pitch_mm / 2;
    return { x, y };
  }
  const fromTop =
    overlay.row_numbering === "top_down" ? index : overlay.rows + 1 - index;
  const y = overlay.margin_mm + (fromTop - 0.5) * overlay.pitch_mm;
  const x =
    overlay.row_axis_edge === "left"
      ? overlay.pitch_mm / 2
      : overlay.screen_width_mm - overlay.pitch_mm / 2;
  return { x, y };
}

/** Full-screen band owned by a marker (for the selection highlight). */
export function bandRect(
  overlay: OverlayPayload,
  axis: "row" | "column",
  index: number,
): RectMm {
  const c = markerCenter(overlay, axis, index);
  const half = overlay.pitch_mm / 2;
  if (axis === "column") {
    return { x: c.x - half, y: 0, width: overlay.pitch_mm, height: overlay.screen_height_mm };
  }
  return { x: 0, y: c.y - half, width: overlay.screen_width_mm, height: overlay.pitch_mm };
}

export function projectPoint(
  scenario: ScenarioPayload,
  overlay: OverlayPayload,
  point: PointPayload,
): { x: number; y: number } {
  if (scenario.kind !== "scatterplot") throw new Error("not a scatterplot");
  const area = scenario.plot_area_mm;
  const fx = (point.x - scenario.x_axis.min) / (scenario.x_axis.max - scenario.x_axis.min);
  const fy = (point.y - scenario.y_axis.min) / (scenario.y_axis.max - scenario.y_axis.min);
  const x = area.x + fx * area.width;
  const y =
    overlay.row_numbering === "bottom_up"
      ? area.y + area.height - fy * area.height
      : area.y + fy * area.height;
  return { x, y };
}

export function buildScene(overlay: OverlayPayload, scenario: ScenarioPayload): SceneModel {
  const markers: MarkerItem[] = [];
  for (let i = 1; i <= overlay.rows; i++) {
    const c = markerCenter(overlay, "row", i);
    markers.push({
      axis: "row",
      index: i,
      label: markerLabel(overlay, i),
      shape: markerShape(overlay, i),
      xMm: c.x,
      yMm: c.y,
    });
  }
  for (let j = 1; j <= overlay.cols; j++) {
    const c = markerCenter(overlay, "column", j);
    markers.push({
      axis: "column",
      index: j,
      label: markerLabel(overlay, j),
      shape: markerShape(overlay, j),
      xMm: c.x,
      yMm: c.y,
    });
  }

  const quadrantLines: QuadrantLineItem[] = [];
  if (overlay.quadrant_interval) {
    const stripTop = overlay.col_axis_edge === "top";
    const y0 = stripTop ? 0 : overlay.screen_height_mm - overlay.pitch_mm;
    const y1 = stripTop ? overlay.pitch_mm : overlay.screen_height_mm;
    const n = overlay.quadrant_interval;
    for (let k = 1; k * n < overlay.cols; k++) {
      quadrantLines.push({ xMm: overlay.margin_mm + k * n * overlay.pitch_mm, y0Mm: y0, y1Mm: y1 });
    }
  }

  const points: PointItem[] = [];
  let elements: ElementPayload[] = [];
  let plotArea: RectMm | null = null;
  if (scenario.kind === "scatterplot") {
    plotArea = scenario.plot_area_mm;
    for (const p of scenario.points) {
      const pos = projectPoint(scenario, overlay, p);
      points.push({ id: p.id, label: p.label, xMm: pos.x, yMm: pos.y });
    }
  } else {
    elements = [...scenario.elements].sort((a, b) => a.reading_index - b.reading_index);
  }

  return {
    widthMm: overlay.screen_width_mm,
    heightMm: overlay.screen_height_mm,
    overlay,
    markers,
    quadrantLines,
    points,
    elements,
    plotArea,
  };
}
