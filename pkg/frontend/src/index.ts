export { CsvError, parseErrorCsv, parseFieldCsv, parseGridCsv, parseSweepCsv } from "./csv.js";
export type { HeatGrid, SweepTable } from "./csv.js";
export { divergingColor, sequentialColor, seriesColor } from "./color.js";
export { RENDERER_VERSION, linearScale, niceTicks } from "./svg.js";
export { renderSdrSvg } from "./sdr.js";
export { ERROR_FLOOR, renderHeatmapSvg } from "./heatmap.js";
export type { HeatmapKind } from "./heatmap.js";
export { renderJob, runPlotJob } from "./plotjob.js";
export type { FigureKind, PlotJob } from "./plotjob.js";
