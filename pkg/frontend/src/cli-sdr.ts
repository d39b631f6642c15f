#!/usr/bin/env node
import { pathToFileURL } from "node:url";

import { CliSpec, UsageError, cliMain, splitArgs } from "./cli.js";

const SPEC: CliSpec = {
  usage: "usage: plot-sdr <sweep.csv> <out.svg>",
  parse(argv) {
    const { positionals } = splitArgs(argv, []);
    if (positionals.length !== 2) {
      throw new UsageError(`expected 2 arguments, got ${positionals.length}`);
    }
    return { input: positionals[0]!, kind: "sdr-curve", output: positionals[1]! };
  },
};

export function main(argv: string[]): number {
  return cliMain(SPEC, argv);
}

if (import.meta.url === pathToFileURL(process.argv[1] ?? "").href) {
  process.exit(main(process.argv.slice(2)));
}
