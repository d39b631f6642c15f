/**
 * Parsers for the harness result CSVs.
 *
 * Two shapes exist: the SDR sweep (frequency column plus one column per
 * method, cells numeric or the literal `null`) and per-point grids
 * (x,y coordinate columns plus value columns on a rectangular grid).
 * Everything here validates the column contract and reports the offending
 * column or row on failure.
 */
import Papa from "papaparse";

/** Raised for any violation of the CSV column contract. */
export class CsvError extends Error {}

export interface SweepTable {
  /** Frequencies in file order, Hz. */
  frequencies: number[];
  /** Method column names in file order. */
  methods: string[];
  /** SDR series per method; null marks an infinite (exact) cell. */
  values: Map<string, Array<number | null>>;
}

export interface HeatGrid {
  /** Sorted unique cell-center coordinates. */
  xs: number[];
  ys: number[];
  stepX: number;
  stepY: number;
  /** values[iy][ix], aligned with xs/ys. */
  values: number[][];
  /** Region bounds: cell centers plus half a step on each side. */
  bounds: { x0: number; x1: number; y0: number; y1: number };
}

function parseRows(text: string, source: string): Papa.ParseResult<Record<string, string>> {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    delimiter: ",",
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]!;
    throw new CsvError(`${source}: ${first.message} (row ${first.row ?? "?"})`);
  }
  if (!parsed.meta.fields || parsed.meta.fields.length === 0) {
    throw new CsvError(`${source}: no header row`);
  }
  return parsed;
}

function toNumber(raw: string | undefined, source: string, column: string, row: number): number {
  const value = Number(raw);
  if (raw === undefined || raw === "" || !Number.isFinite(value)) {
    throw new CsvError(
      `${source}: column "${column}" row ${row} is not a finite number (got ${JSON.stringify(raw)})`,
    );
  }
  return value;
}

/** Parse an SDR sweep CSV (frequency + one SDR column per method). */
export function parseSweepCsv(text: string, source = "sweep csv"): SweepTable {
  const parsed = parseRows(text, source);
  const fields = parsed.meta.fields!;
  if (fields[0] !== "frequency") {
    throw new CsvError(
      `${source}: expected leading "frequency" column, got "${fields[0]}"`,
    );
  }
  const methods = fields.slice(1);
  if (methods.length === 0) {
    throw new CsvError(`${source}: no method columns after "frequency"`);
  }
  const frequencies: number[] = [];
  const values = new Map<string, Array<number | null>>(methods.map((m) => [m, []]));
  parsed.data.forEach((row, i) => {
    frequencies.push(toNumber(row["frequency"], source, "frequency", i + 1));
    for (const m of methods) {
      const raw = row[m];
      // `null` cells mark an infinite SDR (exact reproduction); skip them
      values.get(m)!.push(raw === "null" ? null : toNumber(raw, source, m, i + 1));
    }
  });
  if (frequencies.length === 0) {
    throw new CsvError(`${source}: no data rows`);
  }
  return { frequencies, methods, values };
}

function uniqueSorted(coords: number[]): number[] {
  return Array.from(new Set(coords)).sort((a, b) => a - b);
}

/**
 * Parse a per-point CSV (x,y,<valueColumn>) into a rectangular grid.
 *
 * Row order is free, but the points must fill the full cartesian product of
 * their x and y coordinates exactly once each.
 */
export function parseGridCsv(text: string, valueColumn: string, source = "grid csv"): HeatGrid {
  const parsed = parseRows(text, source);
  const fields = parsed.meta.fields!;
  if (fields[0] !== "x" || fields[1] !== "y") {
    throw new CsvError(`${source}: expected leading "x,y" columns, got "${fields.slice(0, 2)}"`);
  }
  if (fields.includes("z")) {
    throw new CsvError(`${source}: 3D grids cannot be drawn as a heatmap`);
  }
  if (!fields.includes(valueColumn)) {
    throw new CsvError(
      `${source}: missing value column "${valueColumn}" (columns: ${fields.join(",")})`,
    );
  }
  const rows = parsed.data.map((row, i) => ({
    x: toNumber(row["x"], source, "x", i + 1),
    y: toNumber(row["y"], source, "y", i + 1),
    v: toNumber(row[valueColumn], source, valueColumn, i + 1),
  }));
  if (rows.length === 0) {
    throw new CsvError(`${source}: no data rows`);
  }

  const xs = uniqueSorted(rows.map((r) => r.x));
  const ys = uniqueSorted(rows.map((r) => r.y));
  if (xs.length * ys.length !== rows.length) {
    throw new CsvError(
      `${source}: points do not form a rectangular grid ` +
        `(${xs.length} x ${ys.length} cells vs ${rows.length} rows)`,
    );
  }
  const xi = new Map(xs.map((x, i) => [x, i]));
  const yi = new Map(ys.map((y, i) => [y, i]));
  const values: Array<Array<number | undefined>> = ys.map(() => new Array(xs.length));
  for (const r of rows) {
    const ix = xi.get(r.x)!;
    const iy = yi.get(r.y)!;
    if (values[iy]![ix] !== undefined) {
      throw new CsvError(`${source}: duplicate grid point (${r.x}, ${r.y})`);
    }
    values[iy]![ix] = r.v;
  }
  for (const row of values) {
    if (row.some((v) => v === undefined)) {
      throw new CsvError(`${source}: points do not form a rectangular grid (missing cells)`);
    }
  }

  const stepX = xs.length > 1 ? (xs[xs.length - 1]! - xs[0]!) / (xs.length - 1) : 1.0;
  const stepY = ys.length > 1 ? (ys[ys.length - 1]! - ys[0]!) / (ys.length - 1) : 1.0;
  return {
    xs,
    ys,
    stepX,
    stepY,
    values: values as number[][],
    bounds: {
      x0: xs[0]! - stepX / 2,
      x1: xs[xs.length - 1]! + stepX / 2,
      y0: ys[0]! - stepY / 2,
      y1: ys[ys.length - 1]! + stepY / 2,
    },
  };
}

/** Field CSVs carry re,im; the plots show the real part. */
export function parseFieldCsv(text: string, source = "field csv"): HeatGrid {
  return parseGridCsv(text, "re", source);
}

/** Error CSVs carry the squared error per cell. */
export function parseErrorCsv(text: string, source = "error csv"): HeatGrid {
  return parseGridCsv(text, "sq_err", source);
}
