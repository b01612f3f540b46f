// Wire types for the /session WebSocket protocol (one JSON object per text
// frame) and the on-disk document formats the simulator consumes.

export const PROTOCOL_VERSION = "1.0.0";

export type Phase = "down" | "move" | "up";

export interface TouchMsg {
  type: "touch";
  pointer_id: number;
  phase: Phase;
  x_mm: number;
  y_mm: number;
  t_ms: number;
}

export type ClientMessage =
  | { type: "hello"; protocol_version: string }
  | {
      type: "load";
      scenario?: string | ScenarioDocument;
      overlay?: string | OverlayDocument;
      recognizer_config?: Record<string, number>;
    }
  | TouchMsg
  | { type: "end_session" };

export type EarconKind = "tick" | "thonk" | "data_point_cue";

export interface SelectionState {
  axis: "row" | "column";
  index: number;
}

export type ServerMessage =
  | { type: "ready"; session_id: string }
  | { type: "speak"; text: string; interrupts: boolean }
  | { type: "earcon"; kind: EarconKind }
  | { type: "cancel_all" }
  | {
      type: "state";
      mode: "idle" | "exploring" | "spatial_nav";
      cursor_index: number | null;
      selection: SelectionState | null;
    }
  | { type: "error"; code: string; message: string }
  | { type: "session_closed"; transcript_ref: string | null };

// -- document payloads (mirrors the engine's JSON schemas)

export interface RectMm {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface OverlayPayload {
  name: string;
  orientation: "landscape" | "portrait";
  screen_width_mm: number;
  screen_height_mm: number;
  rows: number;
  cols: number;
  pitch_mm: number;
  marker_size_mm: number;
  marker_style: "cutout_shapes" | "braille_letters" | "plain_bumps";
  quadrant_interval: number | null;
  row_axis_edge: "left" | "right";
  col_axis_edge: "top" | "bottom";
  row_numbering: "top_down" | "bottom_up";
  margin_mm: number;
}

export interface AxisPayload {
  label: string;
  min: number;
  max: number;
  step: number;
  unit?: string;
}

export interface PointPayload {
  id: string;
  label: string;
  x: number;
  y: number;
  attrs?: Record<string, string>;
}

export interface ElementPayload {
  id: string;
  role: string;
  label: string;
  value?: string;
  bounds_mm: RectMm;
  reading_index: number;
}

export interface ScatterPayload {
  kind: "scatterplot";
  overlay_kind: string;
  title: string;
  description?: string;
  x_axis: AxisPayload;
  y_axis: AxisPayload;
  plot_area_mm: RectMm;
  item_noun?: string;
  points: PointPayload[];
}

export interface InterfacePayload {
  kind: "interface";
  overlay_kind: string;
  title: string;
  description?: string;
  elements: ElementPayload[];
}

export type ScenarioPayload = ScatterPayload | InterfacePayload;

export interface ScenarioDocument {
  format: "scenario";
  version: string;
  payload: ScenarioPayload;
}

export interface OverlayDocument {
  format: "overlay";
  version: string;
  payload: OverlayPayload;
}

export interface TraceDocument {
  format: "trace";
  version: string;
  payload: {
    events: Array<{
      pointer_id: number;
      phase: Phase;
      x_mm: number;
      y_mm: number;
      t_ms: number;
    }>;
  };
}
