"""Experiment runner: computes sweeps and writes the CSV/JSON artifacts.

CSV cells carry 17 significant digits so values round-trip through text
exactly; an infinite SDR is written as the literal `null`. Output bytes are
independent of the worker count because each frequency is computed as a pure
task and files are written sequentially in a fixed order.
"""
import csv
import datetime
import json
import math
import pathlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .config import ExperimentConfig, save_config
from .errors import ConfigError
from .evaluation import (
    FrequencyResult,
    evaluate_frequency,
    make_eval_grid,
    sweep_frequencies,
    thread_count,
)

try:
    from importlib.metadata import version as _pkg_version

    TOOL_VERSION = _pkg_version("sfrepro")
except Exception:  # pragma: no cover - metadata missing in odd installs
    TOOL_VERSION = "unknown"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_sdr(x: float) -> str:
    return "null" if math.isinf(x) else _fmt(x)


def _freq_token(freq: float) -> str:
    return format(float(freq), "g")


@dataclass(frozen=True)
class RunManifest:
    """Index of the files one run produced."""

    out_dir: str
    config_hash: str
    tool_version: str
    created_utc: str
    files: Dict


def _write_csv(path: pathlib.Path, header: Sequence[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_field_files(out: pathlib.Path, result: FrequencyResult,
                       method: str) -> Dict[str, str]:
    token = _freq_token(result.frequency)
    grid = result.desired.grid
    coords = grid.points
    coord_names = ["x", "y", "z"][: coords.shape[1]]
    syn = result.fields[method].values
    err = (abs(syn - result.desired.values)) ** 2

    field_name = f"field_{method}_{token}.csv"
    rows = (
        [_fmt(c) for c in coords[i]] + [_fmt(syn[i].real), _fmt(syn[i].imag)]
        for i in range(coords.shape[0])
    )
    _write_csv(out / field_name, coord_names + ["re", "im"], rows)

    error_name = f"error_{method}_{token}.csv"
    rows = (
        [_fmt(c) for c in coords[i]] + [_fmt(err[i])]
        for i in range(coords.shape[0])
    )
    _write_csv(out / error_name, coord_names + ["sq_err"], rows)

    drive_name = f"drive_{method}_{token}.csv"
    d = result.drives[method].d
    rows = (
        [str(i), _fmt(d[i].real), _fmt(d[i].imag)] for i in range(d.shape[0])
    )
    _write_csv(out / drive_name, ["source_index", "re", "im"], rows)

    return {
        "frequency": result.frequency,
        "method": method,
        "field": field_name,
        "error": error_name,
        "drive": drive_name,
    }


def run(cfg: ExperimentConfig, out_dir=None, *, include_sweep: bool = True,
        field_frequencies: Optional[Sequence[float]] = None) -> RunManifest:
    """Execute a config and write its artifacts into `out_dir`.

    `field_frequencies` overrides the config's list of frequencies that get
    per-point field, error and drive files; pass an empty list to skip them.
    """
    target = out_dir if out_dir is not None else cfg.output_dir
    if target is None:
        raise ConfigError("no output directory given (config output_dir or --out)")
    out = pathlib.Path(target)
    out.mkdir(parents=True, exist_ok=True)

    scene = cfg.scene()
    desired = cfg.desired_field()
    grid = make_eval_grid(scene.region, cfg.eval_spacing)
    methods = list(cfg.methods)

    sweep_freqs = (
        sweep_frequencies(cfg.sweep.start, cfg.sweep.stop, cfg.sweep.step)
        if include_sweep
        else []
    )
    if field_frequencies is None:
        field_frequencies = cfg.field_frequencies
    field_freqs = [float(f) for f in field_frequencies]
    extra = [f for f in field_freqs
             if not any(abs(f - g) <= 1e-9 for g in sweep_freqs)]
    all_freqs = sweep_freqs + sorted(extra)
    if not all_freqs:
        raise ConfigError("nothing to compute: empty sweep and no field frequencies")

    def task(freq: float) -> FrequencyResult:
        return evaluate_frequency(scene, desired, methods, freq, cfg.quadrature, grid)

    workers = min(thread_count(), len(all_freqs))
    if workers <= 1:
        results = [task(f) for f in all_freqs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(task, all_freqs))
    by_freq = dict(zip(all_freqs, results))

    save_config(cfg, out / "config.json")
    files: Dict = {"config": "config.json"}

    if include_sweep:
        names = [m.name for m in methods]
        rows = (
            [_fmt(f)] + [_fmt_sdr(by_freq[f].sdrs[n]) for n in names]
            for f in sweep_freqs
        )
        _write_csv(out / "sdr_sweep.csv", ["frequency"] + names, rows)
        files["sdr_sweep"] = "sdr_sweep.csv"

    per_freq: List[Dict] = []
    for f in sorted(field_freqs):
        result = by_freq[
            next(g for g in by_freq if abs(g - f) <= 1e-9)
        ]
        for m in methods:
            per_freq.append(_write_field_files(out, result, m.name))
    files["per_frequency"] = per_freq

    manifest = RunManifest(
        out_dir=str(out),
        config_hash=cfg.config_hash(),
        tool_version=TOOL_VERSION,
        created_utc=datetime.datetime.now(datetime.timezone.utc)
        .strftime("%Y-%m-%dT%H:%M:%SZ"),
        files=files,
    )
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(
            {
                "tool": "sfrepro",
                "version": manifest.tool_version,
                "config_hash": manifest.config_hash,
                "created_utc": manifest.created_utc,
                "files": manifest.files,
            },
            fh,
            indent=2,
        )
        fh.write("\n")
    return manifest
