// Canvas rendering of CurveIteration JSON with mathematical y up.

import {
  curveBox,
  fitViewport,
  signedSpan,
  toScreenX,
  toScreenY,
  type Viewport,
} from "./geometry.js";
import type { CurveJson } from "./types.js";
import { scaleSeries, type ChartSeries } from "./chart.js";

export function drawCurve(canvas: HTMLCanvasElement, curve: CurveJson): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const box = curveBox(curve);
  const view = fitViewport(box, canvas.width, canvas.height);

  // base line through y = 0 for reference
  ctx.strokeStyle = "#bbbbbb";
  ctx.setLineDash([4, 4]);
  ctx.beginPath();
  ctx.moveTo(0, toScreenY(view, 0));
  ctx.lineTo(canvas.width, toScreenY(view, 0));
  ctx.stroke();
  ctx.setLineDash([]);

  ctx.strokeStyle = "#1d3557";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  for (const prim of curve.primitives) {
    if (prim.kind === "segment") {
      ctx.moveTo(toScreenX(view, prim.a[0]), toScreenY(view, prim.a[1]));
      ctx.lineTo(toScreenX(view, prim.b[0]), toScreenY(view, prim.b[1]));
    } else {
      drawArc(ctx, view, prim.center, prim.radius, prim.start_angle, prim.end_angle, prim.orientation);
    }
  }
  ctx.stroke();
}

function drawArc(
  ctx: CanvasRenderingContext2D,
  view: Viewport,
  center: [number, number],
  radius: number,
  startAngle: number,
  endAngle: number,
  orientation: "ccw" | "cw",
): void {
  const span = signedSpan(startAngle, endAngle, orientation);
  // With the y-flip, a math angle theta maps to canvas angle -theta, and
  // increasing math angle means decreasing canvas angle (anticlockwise
  // in canvas terms).
  const cx = toScreenX(view, center[0]);
  const cy = toScreenY(view, center[1]);
  const r = radius * view.scale;
  ctx.moveTo(cx + r * Math.cos(-startAngle), cy + r * Math.sin(-startAngle));
  ctx.arc(cx, cy, r, -startAngle, -(startAngle + span), span > 0);
}

export function drawChart(
  canvas: HTMLCanvasElement,
  series: ChartSeries[],
  logY: boolean,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const colors = ["#1d3557", "#e05252", "#4caf6e"];
  const scaled = scaleSeries(series, canvas.width, canvas.height, logY);
  scaled.forEach((line, index) => {
    ctx.strokeStyle = colors[index % colors.length];
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    line.points.forEach((point, i) => {
      if (i === 0) ctx.moveTo(point.x, point.y);
      else ctx.lineTo(point.x, point.y);
    });
    ctx.stroke();
    ctx.fillStyle = ctx.strokeStyle;
    for (const point of line.points) {
      ctx.beginPath();
      ctx.arc(point.x, point.y, 2.5, 0, 2 * Math.PI);
      ctx.fill();
    }
  });
}
