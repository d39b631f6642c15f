/**
 * Minimal deterministic SVG assembly. Coordinates are formatted with a
 * fixed number of decimals so identical inputs always produce identical
 * bytes; no external DOM or renderer is involved.
 */

export const RENDERER_VERSION = "sfr-plots/1";

/** Fixed two-decimal pixel formatting (trailing zeros kept on purpose). */
export function px(value: number): string {
  return value.toFixed(2);
}

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(
  name: string,
  attrs: Array<[string, string]>,
  children?: string[] | string,
): string {
  const attrText = attrs.map(([k, v]) => ` ${k}="${esc(v)}"`).join("");
  if (children === undefined) {
    return `<${name}${attrText}/>`;
  }
  const body = Array.isArray(children) ? children.join("") : children;
  return `<${name}${attrText}>${body}</${name}>`;
}

export function svgDocument(width: number, height: number, body: string[]): string {
  const root = tag(
    "svg",
    [
      ["xmlns", "http://www.w3.org/2000/svg"],
      ["width", String(width)],
      ["height", String(height)],
      ["viewBox", `0 0 ${width} ${height}`],
      ["font-family", "sans-serif"],
      ["data-renderer", RENDERER_VERSION],
    ],
    body,
  );
  return `<?xml version="1.0" encoding="UTF-8"?>\n${root}\n`;
}

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const slope = d1 === d0 ? 0 : (r1 - r0) / (d1 - d0);
  const scale = ((value: number) => r0 + (value - d0) * slope) as LinearScale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

/** Tick positions covering [min, max] at a 1-2-5 step near the target count. */
export function niceTicks(min: number, max: number, target = 6): number[] {
  if (!(max > min)) {
    return [min];
  }
  const rawStep = (max - min) / Math.max(1, target);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 5, 10].map((m) => m * power);
  const step = candidates.find((c) => c >= rawStep) ?? candidates[3]!;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    // snap to the step grid to avoid 0.30000000000000004-style labels
    ticks.push(Number((Math.round(v / step) * step).toPrecision(12)));
  }
  return ticks;
}

export function formatTick(value: number): string {
  if (value === 0) {
    return "0";
  }
  const abs = Math.abs(value);
  if (abs >= 1e4 || abs < 1e-3) {
    return value.toExponential(1);
  }
  return String(Number(value.toPrecision(10)));
}
