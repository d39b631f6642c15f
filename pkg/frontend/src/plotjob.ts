/**
 * One rendering job: a result CSV in, an SVG image out. The CLIs build a
 * job from their arguments; nothing here recomputes physics, so identical
 * input bytes always give identical output bytes.
 */
import { readFileSync, writeFileSync } from "node:fs";
import { basename } from "node:path";

import { parseErrorCsv, parseFieldCsv, parseSweepCsv } from "./csv.js";
import { renderHeatmapSvg } from "./heatmap.js";
import { renderSdrSvg } from "./sdr.js";

export type FigureKind = "sdr-curve" | "field-heatmap" | "error-heatmap";

export interface PlotJob {
  input: string;
  kind: FigureKind;
  output: string;
}

/** Render a job's input CSV to an SVG string (no file I/O). */
export function renderJob(kind: FigureKind, csvText: string, source: string): string {
  switch (kind) {
    case "sdr-curve":
      return renderSdrSvg(parseSweepCsv(csvText, source));
    case "field-heatmap":
      return renderHeatmapSvg(parseFieldCsv(csvText, source), "field");
    case "error-heatmap":
      return renderHeatmapSvg(parseErrorCsv(csvText, source), "error");
  }
}

/** Execute a job: read the CSV, render, write the image file. */
export function runPlotJob(job: PlotJob): void {
  const text = readFileSync(job.input, "utf-8");
  const svg = renderJob(job.kind, text, basename(job.input));
  writeFileSync(job.output, svg, "utf-8");
}
