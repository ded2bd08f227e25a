// Data preparation for the sequence line chart (S_n and sup-distance vs n)
// with an optional log-y axis.

export interface ChartSeries {
  label: string;
  points: Array<{ n: number; value: number }>;
}

export interface ScaledPoint {
  x: number;
  y: number;
}

export interface ScaledSeries {
  label: string;
  points: ScaledPoint[];
}

export function scaleSeries(
  series: ChartSeries[],
  width: number,
  height: number,
  logY: boolean,
  pad = 8,
): ScaledSeries[] {
  const all = series.flatMap((s) => s.points).filter((p) => !logY || p.value > 0);
  if (all.length === 0) return series.map((s) => ({ label: s.label, points: [] }));
  const ns = all.map((p) => p.n);
  const vs = all.map((p) => (logY ? Math.log10(p.value) : p.value));
  const minN = Math.min(...ns);
  const maxN = Math.max(...ns);
  const minV = Math.min(...vs);
  const maxV = Math.max(...vs);
  const spanN = Math.max(maxN - minN, 1e-9);
  const spanV = Math.max(maxV - minV, 1e-9);
  return series.map((s) => ({
    label: s.label,
    points: s.points
      .filter((p) => !logY || p.value > 0)
      .map((p) => {
        const v = logY ? Math.log10(p.value) : p.value;
        return {
          x: pad + ((p.n - minN) / spanN) * (width - 2 * pad),
          y: height - pad - ((v - minV) / spanV) * (height - 2 * pad),
        };
      }),
  }));
}
