/**
 * Fixed color ramps. Hand-rolled from pinned stop lists so the rendered
 * bytes never depend on an external palette package's version.
 */

type Rgb = [number, number, number];

const DIVERGING_STOPS: Rgb[] = [
  [33, 102, 172], // deep blue
  [247, 247, 247], // neutral
  [178, 24, 43], // deep red
];

const SEQUENTIAL_STOPS: Rgb[] = [
  [68, 1, 84],
  [59, 82, 139],
  [33, 145, 140],
  [94, 201, 98],
  [253, 231, 37],
];

function lerpStops(stops: Rgb[], t: number): Rgb {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (stops.length - 1);
  const lo = Math.min(stops.length - 2, Math.floor(pos));
  const frac = pos - lo;
  const a = stops[lo]!;
  const b = stops[lo + 1]!;
  return [0, 1, 2].map((i) => Math.round(a[i]! + frac * (b[i]! - a[i]!))) as Rgb;
}

function toHex(rgb: Rgb): string {
  return "#" + rgb.map((c) => c.toString(16).padStart(2, "0")).join("");
}

/** Symmetric diverging color for t in [-1, 1]; 0 maps to the neutral mid. */
export function divergingColor(t: number): string {
  return toHex(lerpStops(DIVERGING_STOPS, (t + 1) / 2));
}

/** Sequential color for t in [0, 1], dark low to bright high. */
export function sequentialColor(t: number): string {
  return toHex(lerpStops(SEQUENTIAL_STOPS, t));
}

/** Curve colors per method column, assigned in column order. */
export const SERIES_COLORS = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#8c564b",
  "#e377c2",
] as const;

export function seriesColor(index: number): string {
  return SERIES_COLORS[index % SERIES_COLORS.length]!;
}
