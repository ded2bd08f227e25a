// Geometry utilities over CurveIteration JSON: bounding boxes and the
// world-to-screen transform for the y-up vector canvas.

import type { CurveJson, PrimitiveJson } from "./types.js";

export interface Box {
  minX: number;
  minY: number;
  maxX: number;
  maxY: number;
}

export function boxHeight(box: Box): number {
  return box.maxY - box.minY;
}

export function boxWidth(box: Box): number {
  return box.maxX - box.minX;
}

function grow(box: Box, x: number, y: number): void {
  box.minX = Math.min(box.minX, x);
  box.minY = Math.min(box.minY, y);
  box.maxX = Math.max(box.maxX, x);
  box.maxY = Math.max(box.maxY, y);
}

export function signedSpan(start: number, end: number, orientation: "ccw" | "cw"): number {
  const raw = end - start;
  if (orientation === "ccw") {
    return raw > 0 ? raw : raw + 2 * Math.PI;
  }
  return raw < 0 ? raw : raw - 2 * Math.PI;
}

const ARC_BBOX_STEPS = 32;

export function primitiveBox(prim: PrimitiveJson, box: Box): void {
  if (prim.kind === "segment") {
    grow(box, prim.a[0], prim.a[1]);
    grow(box, prim.b[0], prim.b[1]);
    return;
  }
  const span = signedSpan(prim.start_angle, prim.end_angle, prim.orientation);
  for (let i = 0; i <= ARC_BBOX_STEPS; i++) {
    const theta = prim.start_angle + (span * i) / ARC_BBOX_STEPS;
    grow(
      box,
      prim.center[0] + prim.radius * Math.cos(theta),
      prim.center[1] + prim.radius * Math.sin(theta),
    );
  }
}

export function curveBox(curve: CurveJson): Box {
  const box: Box = {
    minX: Infinity,
    minY: Infinity,
    maxX: -Infinity,
    maxY: -Infinity,
  };
  for (const prim of curve.primitives) {
    primitiveBox(prim, box);
  }
  return box;
}

/** Maps mathematical coordinates into canvas pixels with y pointing up. */
export interface Viewport {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function fitViewport(box: Box, width: number, height: number, margin = 0.05): Viewport {
  const spanX = Math.max(boxWidth(box), 1e-9);
  const spanY = Math.max(boxHeight(box), 1e-9);
  const scale = Math.min(
    (width * (1 - 2 * margin)) / spanX,
    (height * (1 - 2 * margin)) / spanY,
  );
  return {
    scale,
    offsetX: width / 2 - scale * (box.minX + spanX / 2),
    offsetY: height / 2 + scale * (box.minY + spanY / 2),
  };
}

export function toScreenX(view: Viewport, x: number): number {
  return view.offsetX + view.scale * x;
}

export function toScreenY(view: Viewport, y: number): number {
  return view.offsetY - view.scale * y;
}
