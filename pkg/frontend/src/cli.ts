/**
 * Shared CLI plumbing for the two plot commands.
 *
 * Exit codes: 0 success, 1 usage/input problems (bad flags, missing file,
 * malformed CSV), 2 unexpected failures.
 */
import { CsvError } from "./csv.js";
import { PlotJob, runPlotJob } from "./plotjob.js";

export interface CliSpec {
  usage: string;
  /** Turn argv (without node/script) into a job, or throw UsageError. */
  parse(argv: string[]): PlotJob;
}

export class UsageError extends Error {}

export function cliMain(spec: CliSpec, argv: string[]): number {
  if (argv.includes("--help") || argv.includes("-h")) {
    process.stdout.write(spec.usage + "\n");
    return 0;
  }
  let job: PlotJob;
  try {
    job = spec.parse(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      process.stderr.write(`${err.message}\n${spec.usage}\n`);
      return 1;
    }
    throw err;
  }
  try {
    runPlotJob(job);
  } catch (err) {
    if (err instanceof CsvError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 1;
    }
    if (err instanceof Error && "code" in err && err.code === "ENOENT") {
      process.stderr.write(`error: cannot read ${job.input}\n`);
      return 1;
    }
    const message = err instanceof Error ? err.message : String(err);
    process.stderr.write(`error: ${message}\n`);
    return 2;
  }
  return 0;
}

/** Split argv into positionals and --flag=value / --flag value options. */
export function splitArgs(argv: string[], allowedFlags: string[]): {
  positionals: string[];
  flags: Map<string, string>;
} {
  const positionals: string[] = [];
  const flags = new Map<string, string>();
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i]!;
    if (!arg.startsWith("--")) {
      positionals.push(arg);
      continue;
    }
    const eq = arg.indexOf("=");
    const name = eq >= 0 ? arg.slice(0, eq) : arg;
    if (!allowedFlags.includes(name)) {
      throw new UsageError(`unknown flag ${name}`);
    }
    let value: string;
    if (eq >= 0) {
      value = arg.slice(eq + 1);
    } else {
      const next = argv[++i];
      if (next === undefined) {
        throw new UsageError(`flag ${name} needs a value`);
      }
      value = next;
    }
    flags.set(name, value);
  }
  return { positionals, flags };
}
