"""Command-line entry points.

Exit codes: 0 success, 1 for configuration/usage problems, 2 for runtime
failures while computing or writing results.
"""
import argparse
import sys
from typing import List, Optional

from .config import load_config, preset_paper_experiment
from .errors import ConfigError, SfrError
from .runner import run


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sfr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_run = sub.add_parser("run", help="full run: SDR sweep plus per-point files")
    p_run.add_argument("--config", required=True, help="JSON config path")
    p_run.add_argument("--out", required=True, help="output directory")

    p_preset = sub.add_parser(
        "preset-paper",
        help="write the bundled reference experiment config and run it",
    )
    p_preset.add_argument("--out", required=True, help="output directory")

    p_sweep = sub.add_parser("sweep", help="SDR sweep only")
    p_sweep.add_argument("--config", required=True, help="JSON config path")
    p_sweep.add_argument("--out", required=True, help="output directory")

    p_field = sub.add_parser("field", help="per-point field/error/drive files only")
    p_field.add_argument("--config", required=True, help="JSON config path")
    p_field.add_argument("--out", required=True, help="output directory")
    p_field.add_argument(
        "--freq",
        action="append",
        type=float,
        default=None,
        help="frequency in Hz (repeatable; default: config field_frequencies)",
    )

    p_val = sub.add_parser("validate", help="check a config file")
    p_val.add_argument("--config", required=True, help="JSON config path")
    return parser


def cli_main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "validate":
            load_config(args.config)
            print("ok")
            return 0
        if args.command == "preset-paper":
            manifest = run(preset_paper_experiment(), args.out)
        elif args.command == "run":
            manifest = run(load_config(args.config), args.out)
        elif args.command == "sweep":
            manifest = run(load_config(args.config), args.out,
                           field_frequencies=[])
        else:
            manifest = run(load_config(args.config), args.out,
                           include_sweep=False, field_frequencies=args.freq)
        print(f"results written to {manifest.out_dir}")
        return 0
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SfrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # last resort: report, do not traceback-dump
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
