// Scene model: rendering counts and cross-language geometry agreement.

import { describe, expect, it } from "vitest";

import { bandRect, buildScene, markerCenter, projectPoint } from "../src/scene.js";
import { loadOverlayDoc, loadScenarioDoc } from "./helpers.js";

describe("scene building", () => {
  it("draws 35 braille labels for the interface overlay", () => {
    const overlay = loadOverlayDoc("InterfaceBraille").payload;
    const scenario = loadScenarioDoc("BankTransactions").payload;
    const scene = buildScene(overlay, scenario);
    expect(scene.markers).toHaveLength(35); // 21 rows + 14 columns
    expect(scene.quadrantLines).toHaveLength(0);
    expect(scene.markers.every((m) => m.shape === null)).toBe(true);
    expect(scene.markers.every((m) => /^[a-z]$/.test(m.label))).toBe(true);
  });

  it("draws 39 shape markers plus 4 quadrant lines for the data viz overlay", () => {
    const overlay = loadOverlayDoc("DataVizCutout").payload;
    const scenario = loadScenarioDoc("MoviesScatter").payload;
    const scene = buildScene(overlay, scenario);
    expect(scene.markers).toHaveLength(39); // 14 rows + 25 columns
    expect(scene.quadrantLines).toHaveLength(4);
    expect(scene.markers.every((m) => m.shape !== null)).toBe(true);
    expect(scene.points).toHaveLength(36);
  });

  it("repeats the five-shape cycle starting at a circle", () => {
    const overlay = loadOverlayDoc("DataVizCutout").payload;
    const scene = buildScene(overlay, loadScenarioDoc("MoviesScatter").payload);
    const columns = scene.markers.filter((m) => m.axis === "column");
    expect(columns[0].shape).toBe("circle");
    expect(columns[1].shape).toBe("double_diamond");
    expect(columns[5].shape).toBe("circle");
  });

  it("places markers where the engine places them", () => {
    const cutout = loadOverlayDoc("DataVizCutout").payload;
    expect(markerCenter(cutout, "column", 24)).toEqual({ x: 243.5, y: 162 });
    const braille = loadOverlayDoc("InterfaceBraille").payload;
    expect(markerCenter(braille, "row", 10)).toEqual({ x: 5, y: 108.5 });
    expect(markerCenter(braille, "column", 11).y).toBe(5); // top axis strip
  });

  it("projects the Avengers point into column 24 row 13 territory", () => {
    const overlay = loadOverlayDoc("DataVizCutout").payload;
    const scenario = loadScenarioDoc("MoviesScatter").payload;
    if (scenario.kind !== "scatterplot") throw new Error("expected scatterplot");
    const avengers = scenario.points.find((p) => p.id === "avengers")!;
    const pos = projectPoint(scenario, overlay, avengers);
    expect(pos.x).toBeCloseTo(243.9, 6);
    expect(pos.y).toBeCloseTo(20.0, 6);
  });

  it("computes full-screen selection bands", () => {
    const overlay = loadOverlayDoc("InterfaceBraille").payload;
    const band = bandRect(overlay, "row", 10);
    expect(band).toEqual({ x: 0, y: 103.5, width: 167, height: 10 });
    const col = bandRect(overlay, "column", 1);
    expect(col.y).toBe(0);
    expect(col.height).toBe(267);
  });
});
