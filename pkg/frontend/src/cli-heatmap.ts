#!/usr/bin/env node
import { pathToFileURL } from "node:url";

import { CliSpec, UsageError, cliMain, splitArgs } from "./cli.js";
import { FigureKind } from "./plotjob.js";

const SPEC: CliSpec = {
  usage: "usage: plot-heatmap --kind field|error <grid.csv> <out.svg>",
  parse(argv) {
    const { positionals, flags } = splitArgs(argv, ["--kind"]);
    if (positionals.length !== 2) {
      throw new UsageError(`expected 2 arguments, got ${positionals.length}`);
    }
    const kindFlag = flags.get("--kind");
    if (kindFlag === undefined) {
      throw new UsageError("--kind is required");
    }
    let kind: FigureKind;
    if (kindFlag === "field") {
      kind = "field-heatmap";
    } else if (kindFlag === "error") {
      kind = "error-heatmap";
    } else {
      throw new UsageError(`--kind must be field or error, got ${kindFlag}`);
    }
    return { input: positionals[0]!, kind, output: positionals[1]! };
  },
};

export function main(argv: string[]): number {
  return cliMain(SPEC, argv);
}

if (import.meta.url === pathToFileURL(process.argv[1] ?? "").href) {
  process.exit(main(process.argv.slice(2)));
}
