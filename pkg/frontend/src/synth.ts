// Multi-finger gesture synthesis from a single pointer.
//
// Desktop pointers are one-point, so chords stand in for extra fingers:
// holding digit key N while clicking produces an N-finger tap, holding it
// through a drag produces an N-finger swipe, and a double click while
// holding "3" produces the spatial-navigation toggle. Synthesized fingers
// land in a small horizontal fan around the pointer so they stay within the
// recognizer's multi-finger window and move rigidly with the pointer.

import type { TouchMsg, Phase } from "./protocol.js";

export const FINGER_SPACING_MM = 8;

export class GestureSynth {
  private active = 0;
  private lastT = 0;

  get isDown(): boolean {
    return this.active > 0;
  }

  private stamp(tMs: number): number {
    // Touch timestamps must be non-decreasing integers.
    const t = Math.max(Math.round(tMs), this.lastT);
    this.lastT = t;
    return t;
  }

  private fan(xMm: number, yMm: number, phase: Phase, tMs: number): TouchMsg[] {
    const out: TouchMsg[] = [];
    for (let i = 0; i < this.active; i++) {
      out.push({
        type: "touch",
        pointer_id: i,
        phase,
        x_mm: round2(xMm + i * FINGER_SPACING_MM),
        y_mm: round2(yMm),
        t_ms: this.stamp(tMs),
      });
    }
    return out;
  }

  begin(xMm: number, yMm: number, tMs: number, fingers: number): TouchMsg[] {
    if (this.active > 0) return [];
    this.active = Math.min(Math.max(fingers, 1), 4);
    return this.fan(xMm, yMm, "down", tMs);
  }

  move(xMm: number, yMm: number, tMs: number): TouchMsg[] {
    if (this.active === 0) return [];
    return this.fan(xMm, yMm, "move", tMs);
  }

  end(xMm: number, yMm: number, tMs: number): TouchMsg[] {
    if (this.active === 0) return [];
    const out = this.fan(xMm, yMm, "up", tMs);
    this.active = 0;
    return out;
  }
}

export function round2(v: number): number {
  return Math.round(v * 100) / 100;
}

/** The finger count a chord state implies (held digit key wins). */
export function chordFingers(heldDigit: number | null): number {
  if (heldDigit && heldDigit >= 2 && heldDigit <= 4) return heldDigit;
  return 1;
}
