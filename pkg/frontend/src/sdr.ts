/**
 * SDR-versus-frequency figure: one labeled curve per method column of the
 * sweep CSV. Cells holding `null` (infinite SDR) are skipped, splitting the
 * curve; isolated points still get a marker.
 */
import { SweepTable } from "./csv.js";
import { seriesColor } from "./color.js";
import { LinearScale, formatTick, linearScale, niceTicks, px, svgDocument, tag } from "./svg.js";

const WIDTH = 760;
const HEIGHT = 480;
const MARGIN = { left: 64, right: 150, top: 24, bottom: 52 };

interface Segment {
  points: Array<[number, number]>;
}

/** Contiguous runs of non-null samples, as (frequency, value) pairs. */
function segments(frequencies: number[], series: Array<number | null>): Segment[] {
  const runs: Segment[] = [];
  let current: Array<[number, number]> = [];
  series.forEach((value, i) => {
    if (value === null) {
      if (current.length > 0) {
        runs.push({ points: current });
        current = [];
      }
      return;
    }
    current.push([frequencies[i]!, value]);
  });
  if (current.length > 0) {
    runs.push({ points: current });
  }
  return runs;
}

function axis(
  xScale: LinearScale,
  yScale: LinearScale,
  xTicks: number[],
  yTicks: number[],
): string[] {
  const [x0, x1] = xScale.range;
  const [y1, y0] = yScale.range; // y range is top-down
  const parts: string[] = [];
  for (const t of xTicks) {
    const x = px(xScale(t));
    parts.push(
      tag("line", [
        ["x1", x], ["x2", x], ["y1", px(y0)], ["y2", px(y1)],
        ["stroke", "#dddddd"], ["stroke-width", "1"],
      ]),
      tag(
        "text",
        [
          ["x", x], ["y", px(y1 + 18)], ["text-anchor", "middle"],
          ["font-size", "12"], ["fill", "#333333"],
        ],
        formatTick(t),
      ),
    );
  }
  for (const t of yTicks) {
    const y = px(yScale(t));
    parts.push(
      tag("line", [
        ["x1", px(x0)], ["x2", px(x1)], ["y1", y], ["y2", y],
        ["stroke", "#dddddd"], ["stroke-width", "1"],
      ]),
      tag(
        "text",
        [
          ["x", px(x0 - 8)], ["y", y], ["text-anchor", "end"],
          ["dominant-baseline", "middle"], ["font-size", "12"], ["fill", "#333333"],
        ],
        formatTick(t),
      ),
    );
  }
  parts.push(
    tag("rect", [
      ["x", px(x0)], ["y", px(y0)],
      ["width", px(x1 - x0)], ["height", px(y1 - y0)],
      ["fill", "none"], ["stroke", "#333333"], ["stroke-width", "1"],
    ]),
    tag(
      "text",
      [
        ["x", px((x0 + x1) / 2)], ["y", px(y1 + 40)],
        ["text-anchor", "middle"], ["font-size", "13"], ["fill", "#000000"],
      ],
      "frequency / Hz",
    ),
    tag(
      "text",
      [
        ["x", "18"], ["y", px((y0 + y1) / 2)],
        ["text-anchor", "middle"], ["font-size", "13"], ["fill", "#000000"],
        ["transform", `rotate(-90 18 ${px((y0 + y1) / 2)})`],
      ],
      "SDR / dB",
    ),
  );
  return parts;
}

/** Render the sweep table into a complete SVG document. */
export function renderSdrSvg(table: SweepTable): string {
  const finite: number[] = [];
  for (const series of table.values.values()) {
    for (const v of series) {
      if (v !== null) {
        finite.push(v);
      }
    }
  }
  const fMin = Math.min(...table.frequencies);
  const fMax = Math.max(...table.frequencies);
  const vMin = finite.length > 0 ? Math.min(...finite) : 0;
  const vMax = finite.length > 0 ? Math.max(...finite) : 1;
  const pad = (vMax - vMin || 1) * 0.05;

  const xScale = linearScale(
    fMin === fMax ? [fMin - 1, fMax + 1] : [fMin, fMax],
    [MARGIN.left, WIDTH - MARGIN.right],
  );
  const yScale = linearScale(
    [vMin - pad, vMax + pad],
    [HEIGHT - MARGIN.bottom, MARGIN.top],
  );

  const body: string[] = axis(
    xScale,
    yScale,
    niceTicks(xScale.domain[0], xScale.domain[1]),
    niceTicks(yScale.domain[0], yScale.domain[1]),
  );

  table.methods.forEach((method, index) => {
    const color = seriesColor(index);
    const runs = segments(table.frequencies, table.values.get(method)!);
    const parts: string[] = [];
    for (const run of runs) {
      const coords = run.points
        .map(([f, v]) => `${px(xScale(f))},${px(yScale(v))}`)
        .join(" ");
      if (run.points.length > 1) {
        parts.push(
          tag("polyline", [
            ["points", coords],
            ["fill", "none"],
            ["stroke", color],
            ["stroke-width", "1.8"],
          ]),
        );
      }
      for (const [f, v] of run.points) {
        parts.push(
          tag("circle", [
            ["cx", px(xScale(f))], ["cy", px(yScale(v))], ["r", "2.5"],
            ["fill", color],
          ]),
        );
      }
    }
    body.push(tag("g", [["data-method", method]], parts));

    const ly = MARGIN.top + 10 + index * 20;
    const lx = WIDTH - MARGIN.right + 16;
    body.push(
      tag("line", [
        ["x1", px(lx)], ["x2", px(lx + 22)], ["y1", px(ly)], ["y2", px(ly)],
        ["stroke", color], ["stroke-width", "1.8"],
      ]),
      tag(
        "text",
        [
          ["x", px(lx + 28)], ["y", px(ly)], ["dominant-baseline", "middle"],
          ["font-size", "12"], ["fill", "#000000"],
        ],
        method,
      ),
    );
  });

  return svgDocument(WIDTH, HEIGHT, [tag("g", [["data-kind", "sdr-curve"]], body)]);
}
