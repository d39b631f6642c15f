import { describe, expect, it } from "vitest";

import { divergingColor, sequentialColor } from "../src/color.js";
import { parseErrorCsv, parseFieldCsv } from "../src/csv.js";
import { renderHeatmapSvg } from "../src/heatmap.js";
import { extractTags, fixture, textContents } from "./helpers.js";

const PLOT_LEFT = 64;
const PLOT_RIGHT = 484;

/** Grid cell rects only: filled rects lying inside the plot frame. */
function cellRects(svg: string): Array<Map<string, string>> {
  return extractTags(svg, "rect").filter((a) => {
    const fill = a.get("fill") ?? "none";
    return fill.startsWith("#") && Number(a.get("x")) < PLOT_RIGHT;
  });
}

describe("renderHeatmapSvg", () => {
  it("draws every cell of the preset field on a diverging scale", () => {
    const grid = parseFieldCsv(fixture("field_pm_450.csv"));
    const svg = renderHeatmapSvg(grid, "field");
    expect(svg).toContain('data-kind="field-heatmap"');
    expect(cellRects(svg)).toHaveLength(400);
    expect(textContents(svg)).toEqual(expect.arrayContaining(["Re p", "x / m", "y / m"]));
  });

  it("labels the color bar symmetrically about zero for fields", () => {
    const grid = parseFieldCsv(fixture("field_pm_450.csv"));
    const svg = renderHeatmapSvg(grid, "field");
    let peak = 0;
    for (const row of grid.values) {
      for (const v of row) {
        peak = Math.max(peak, Math.abs(v));
      }
    }
    const label = String(Number(peak.toPrecision(3)));
    const texts = textContents(svg);
    expect(texts).toContain(label);
    expect(texts).toContain(`-${label}`);
  });

  it("spans exactly the region bounds", () => {
    const svg = renderHeatmapSvg(parseFieldCsv(fixture("field_pm_450.csv")), "field");
    const cells = cellRects(svg);
    const lefts = cells.map((a) => Number(a.get("x")));
    const rights = cells.map((a) => Number(a.get("x")) + Number(a.get("width")));
    expect(Math.min(...lefts)).toBe(PLOT_LEFT);
    expect(Math.max(...rights)).toBe(PLOT_RIGHT);
    // outline rect frames the same extent
    const frame = extractTags(svg, "rect").find(
      (a) => a.get("fill") === "none" && a.get("x") === "64.00" && a.get("y") === "24.00",
    );
    expect(frame).toBeDefined();
    expect(frame!.get("width")).toBe("420.00");
    expect(frame!.get("height")).toBe("420.00");
    expect(textContents(svg)).toEqual(expect.arrayContaining(["-0.4", "0.4"]));
  });

  it("uses a floored log scale for errors", () => {
    const svg = renderHeatmapSvg(parseErrorCsv(fixture("error_pm_450.csv")), "error");
    expect(svg).toContain('data-kind="error-heatmap"');
    const texts = textContents(svg);
    expect(texts).toContain("squared error");
    expect(texts).toContain("1e-6");
    expect(texts.filter((t) => t.startsWith("1e")).length).toBeGreaterThanOrEqual(5);
  });

  it("maps an all-zero error grid to a uniform floor color", () => {
    const text = "x,y,sq_err\n0,0,0\n0.1,0,0\n0,0.1,0\n0.1,0.1,0\n";
    const svg = renderHeatmapSvg(parseErrorCsv(text), "error");
    const cells = cellRects(svg);
    expect(cells).toHaveLength(4);
    for (const cell of cells) {
      expect(cell.get("fill")).toBe(sequentialColor(0));
    }
  });

  it("maps an all-zero field to the neutral mid color", () => {
    const text = "x,y,re\n0,0,0\n0.1,0,0\n0,0.1,0\n0.1,0.1,0\n";
    const svg = renderHeatmapSvg(parseFieldCsv(text), "field");
    for (const cell of cellRects(svg)) {
      expect(cell.get("fill")).toBe(divergingColor(0));
    }
  });

  it("shows a larger high-error area for pm than for wpm at 450 Hz", () => {
    const pm = parseErrorCsv(fixture("error_pm_450.csv"));
    const wpm = parseErrorCsv(fixture("error_wpm_450.csv"));
    const above = (grid: typeof pm) => grid.values.flat().filter((v) => v > 1e-2).length;
    expect(above(pm)).toBeGreaterThan(above(wpm));
    expect(renderHeatmapSvg(pm, "error")).not.toBe(renderHeatmapSvg(wpm, "error"));
  });
});
