// Pixel <-> millimeter mapping for the simulator canvas.

export interface ViewportMapping {
  pxPerMm: number;
  originPx: { x: number; y: number };
  screenWidthMm: number;
  screenHeightMm: number;
}

/** Fit the physical screen rectangle inside a canvas, centered. */
export function fitViewport(
  canvasWidthPx: number,
  canvasHeightPx: number,
  screenWidthMm: number,
  screenHeightMm: number,
  paddingPx = 10,
): ViewportMapping {
  const usableW = Math.max(canvasWidthPx - 2 * paddingPx, 1);
  const usableH = Math.max(canvasHeightPx - 2 * paddingPx, 1);
  const pxPerMm = Math.min(usableW / screenWidthMm, usableH / screenHeightMm);
  const originPx = {
    x: (canvasWidthPx - screenWidthMm * pxPerMm) / 2,
    y: (canvasHeightPx - screenHeightMm * pxPerMm) / 2,
  };
  return { pxPerMm, originPx, screenWidthMm, screenHeightMm };
}

export function pxToMm(m: ViewportMapping, xPx: number, yPx: number): { x: number; y: number } {
  return {
    x: (xPx - m.originPx.x) / m.pxPerMm,
    y: (yPx - m.originPx.y) / m.pxPerMm,
  };
}

export function mmToPx(m: ViewportMapping, xMm: number, yMm: number): { x: number; y: number } {
  return {
    x: m.originPx.x + xMm * m.pxPerMm,
    y: m.originPx.y + yMm * m.pxPerMm,
  };
}

/** Clamp a millimeter position onto the physical screen rectangle. */
export function clampMm(m: ViewportMapping, xMm: number, yMm: number): { x: number; y: number } {
  return {
    x: Math.min(Math.max(xMm, 0), m.screenWidthMm),
    y: Math.min(Math.max(yMm, 0), m.screenHeightMm),
  };
}
