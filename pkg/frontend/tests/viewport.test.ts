// Pixel <-> millimeter mapping invariants.

import { describe, expect, it } from "vitest";

import { fitViewport, mmToPx, pxToMm } from "../src/viewport.js";

describe("viewport mapping", () => {
  it("round-trips px -> mm -> px within half a pixel", () => {
    const view = fitViewport(1280, 720, 267, 167);
    let worst = 0;
    for (let i = 0; i < 1000; i++) {
      const x = Math.random() * 1280;
      const y = Math.random() * 720;
      const mm = pxToMm(view, x, y);
      const back = mmToPx(view, mm.x, mm.y);
      worst = Math.max(worst, Math.abs(back.x - x), Math.abs(back.y - y));
    }
    expect(worst).toBeLessThan(0.5);
  });

  it("fits and centers the physical screen", () => {
    const view = fitViewport(1000, 800, 167, 267);
    const topLeft = mmToPx(view, 0, 0);
    const bottomRight = mmToPx(view, 167, 267);
    expect(bottomRight.y - topLeft.y).toBeLessThanOrEqual(800);
    expect(bottomRight.x - topLeft.x).toBeLessThanOrEqual(1000);
    // centered: equal slack on both sides
    expect(topLeft.x).toBeCloseTo(1000 - bottomRight.x, 6);
    expect(topLeft.y).toBeCloseTo(800 - bottomRight.y, 6);
  });

  it("preserves aspect ratio", () => {
    const view = fitViewport(500, 900, 267, 167);
    const a = mmToPx(view, 0, 0);
    const b = mmToPx(view, 267, 167);
    expect((b.x - a.x) / (b.y - a.y)).toBeCloseTo(267 / 167, 6);
  });
});
