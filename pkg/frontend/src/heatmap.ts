/**
 * Heatmaps over the rectangular evaluation grid. Field maps show the real
 * part on a symmetric diverging scale centered at zero; error maps show the
 * squared error on a log scale with a 1e-6 floor so zero-error cells stay
 * renderable. Axis extents equal the region bounds (cell centers plus half
 * a step).
 */
import { HeatGrid } from "./csv.js";
import { divergingColor, sequentialColor } from "./color.js";
import { formatTick, linearScale, niceTicks, px, svgDocument, tag } from "./svg.js";

export type HeatmapKind = "field" | "error";

export const ERROR_FLOOR = 1e-6;

const PLOT_SIZE = 420;
const MARGIN = { left: 64, right: 110, top: 24, bottom: 52 };
const BAR_WIDTH = 16;
const BAR_STEPS = 64;

interface ColorModel {
  colorFor(value: number): string;
  barTicks: Array<{ t: number; label: string }>;
  barColor(t: number): string;
  label: string;
}

function fieldModel(grid: HeatGrid): ColorModel {
  let peak = 0;
  for (const row of grid.values) {
    for (const v of row) {
      peak = Math.max(peak, Math.abs(v));
    }
  }
  if (peak === 0) {
    peak = 1;
  }
  const ticks = [-peak, -peak / 2, 0, peak / 2, peak].map((v) => ({
    t: (v / peak + 1) / 2,
    label: formatTick(Number(v.toPrecision(3))),
  }));
  return {
    colorFor: (value) => divergingColor(value / peak),
    barTicks: ticks,
    barColor: (t) => divergingColor(2 * t - 1),
    label: "Re p",
  };
}

function errorModel(grid: HeatGrid): ColorModel {
  let top = ERROR_FLOOR;
  for (const row of grid.values) {
    for (const v of row) {
      top = Math.max(top, v);
    }
  }
  const lo = Math.log10(ERROR_FLOOR);
  // degenerate all-floor maps still need a nonempty scale
  const hi = top > ERROR_FLOOR ? Math.log10(top) : lo + 1;
  const toT = (value: number) =>
    (Math.log10(Math.max(value, ERROR_FLOOR)) - lo) / (hi - lo);
  const tickCount = 4;
  const barTicks = Array.from({ length: tickCount + 1 }, (_, i) => {
    const logv = lo + ((hi - lo) * i) / tickCount;
    return { t: i / tickCount, label: `1e${formatTick(Number(logv.toPrecision(3)))}` };
  });
  return {
    colorFor: (value) => sequentialColor(toT(value)),
    barTicks,
    barColor: sequentialColor,
    label: "squared error",
  };
}

/** Render a parsed grid as a complete SVG document. */
export function renderHeatmapSvg(grid: HeatGrid, kind: HeatmapKind): string {
  const model = kind === "field" ? fieldModel(grid) : errorModel(grid);
  const { x0, x1, y0, y1 } = grid.bounds;

  // keep cells square: scale the longer region edge to the fixed plot size
  const aspect = (y1 - y0) / (x1 - x0);
  const plotW = aspect > 1 ? PLOT_SIZE / aspect : PLOT_SIZE;
  const plotH = aspect > 1 ? PLOT_SIZE : PLOT_SIZE * aspect;
  const width = MARGIN.left + plotW + MARGIN.right;
  const height = MARGIN.top + plotH + MARGIN.bottom;

  const xScale = linearScale([x0, x1], [MARGIN.left, MARGIN.left + plotW]);
  const yScale = linearScale([y0, y1], [MARGIN.top + plotH, MARGIN.top]);

  const cells: string[] = [];
  grid.ys.forEach((yc, iy) => {
    grid.xs.forEach((xc, ix) => {
      // pixel edges from the cell boundaries so neighbors share edges
      const left = xScale(xc - grid.stepX / 2);
      const right = xScale(xc + grid.stepX / 2);
      const topEdge = yScale(yc + grid.stepY / 2);
      const bottomEdge = yScale(yc - grid.stepY / 2);
      cells.push(
        tag("rect", [
          ["x", px(left)],
          ["y", px(topEdge)],
          ["width", px(right - left)],
          ["height", px(bottomEdge - topEdge)],
          ["fill", model.colorFor(grid.values[iy]![ix]!)],
        ]),
      );
    });
  });

  const frame: string[] = [];
  for (const t of niceTicks(x0, x1, 5)) {
    frame.push(
      tag("line", [
        ["x1", px(xScale(t))], ["x2", px(xScale(t))],
        ["y1", px(MARGIN.top + plotH)], ["y2", px(MARGIN.top + plotH + 5)],
        ["stroke", "#333333"], ["stroke-width", "1"],
      ]),
      tag(
        "text",
        [
          ["x", px(xScale(t))], ["y", px(MARGIN.top + plotH + 20)],
          ["text-anchor", "middle"], ["font-size", "12"], ["fill", "#333333"],
        ],
        formatTick(t),
      ),
    );
  }
  for (const t of niceTicks(y0, y1, 5)) {
    frame.push(
      tag("line", [
        ["x1", px(MARGIN.left - 5)], ["x2", px(MARGIN.left)],
        ["y1", px(yScale(t))], ["y2", px(yScale(t))],
        ["stroke", "#333333"], ["stroke-width", "1"],
      ]),
      tag(
        "text",
        [
          ["x", px(MARGIN.left - 9)], ["y", px(yScale(t))], ["text-anchor", "end"],
          ["dominant-baseline", "middle"], ["font-size", "12"], ["fill", "#333333"],
        ],
        formatTick(t),
      ),
    );
  }
  frame.push(
    tag("rect", [
      ["x", px(MARGIN.left)], ["y", px(MARGIN.top)],
      ["width", px(plotW)], ["height", px(plotH)],
      ["fill", "none"], ["stroke", "#333333"], ["stroke-width", "1"],
    ]),
    tag(
      "text",
      [
        ["x", px(MARGIN.left + plotW / 2)], ["y", px(MARGIN.top + plotH + 40)],
        ["text-anchor", "middle"], ["font-size", "13"], ["fill", "#000000"],
      ],
      "x / m",
    ),
    tag(
      "text",
      [
        ["x", "18"], ["y", px(MARGIN.top + plotH / 2)],
        ["text-anchor", "middle"], ["font-size", "13"], ["fill", "#000000"],
        ["transform", `rotate(-90 18 ${px(MARGIN.top + plotH / 2)})`],
      ],
      "y / m",
    ),
  );

  const barX = MARGIN.left + plotW + 24;
  const bar: string[] = [];
  for (let i = 0; i < BAR_STEPS; i++) {
    // top of the bar is the high end of the scale
    const t = 1 - i / (BAR_STEPS - 1);
    const cellTop = MARGIN.top + (plotH * i) / BAR_STEPS;
    bar.push(
      tag("rect", [
        ["x", px(barX)], ["y", px(cellTop)],
        ["width", px(BAR_WIDTH)], ["height", px(plotH / BAR_STEPS + 0.5)],
        ["fill", model.barColor(t)],
      ]),
    );
  }
  for (const { t, label } of model.barTicks) {
    const y = MARGIN.top + plotH * (1 - t);
    bar.push(
      tag(
        "text",
        [
          ["x", px(barX + BAR_WIDTH + 6)], ["y", px(y)],
          ["dominant-baseline", "middle"], ["font-size", "11"], ["fill", "#333333"],
        ],
        label,
      ),
    );
  }
  bar.push(
    tag("rect", [
      ["x", px(barX)], ["y", px(MARGIN.top)],
      ["width", px(BAR_WIDTH)], ["height", px(plotH)],
      ["fill", "none"], ["stroke", "#333333"], ["stroke-width", "1"],
    ]),
    tag(
      "text",
      [
        ["x", px(barX)], ["y", px(MARGIN.top - 8)],
        ["font-size", "12"], ["fill", "#000000"],
      ],
      model.label,
    ),
  );

  const body = tag("g", [["data-kind", `${kind}-heatmap`]], [...cells, ...frame, ...bar]);
  return svgDocument(Math.round(width), Math.round(height), [body]);
}
