"""Timing comparison of the compiled and pure-Python numeric backends.

Run as a script:

    python3 benchmarks/bench_backends.py [--sizes 1000,10000,100000] [--repeat 5]

The series evaluations are timed in-process against both backend modules.
The end-to-end weight-matrix assembly is timed in subprocesses because the
backend is chosen once at import time (SFR_BACKEND).
"""
import argparse
import json
import math
import os
import subprocess
import sys
import time

import numpy as np


def _sample_args(n, seed=7, radius=25.0):
    rng = np.random.default_rng(seed)
    z = rng.uniform(-1.0, 1.0, n) + 1j * rng.uniform(-0.25, 0.25, n)
    return z * radius / np.max(np.abs(z))


def _best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_series(sizes, repeat):
    from sfrepro import _purefuncs

    try:
        from sfrepro import _fastfuncs
    except ImportError:
        _fastfuncs = None

    rows = []
    for n in sizes:
        z = _sample_args(n)
        t_py = _best_of(lambda: _purefuncs.j0_complex(z), repeat)
        row = {"n": n, "python": t_py}
        if _fastfuncs is not None:
            t_cy = _best_of(lambda: _fastfuncs.j0_complex(z), repeat)
            row["cython"] = t_cy
            row["speedup"] = t_py / t_cy
            err = np.max(np.abs(_fastfuncs.j0_complex(z) - _purefuncs.j0_complex(z)))
            row["max_abs_diff"] = float(err)
        rows.append(row)
    return rows


def _assembly_once():
    from sfrepro import backend
    from sfrepro.config import preset_paper_experiment
    from sfrepro.kernels import KernelSpec
    from sfrepro.solvers import build_weight_shared

    cfg = preset_paper_experiment()
    scene = cfg.scene()
    k = scene.wavenumber(2.0 * math.pi * 450.0)
    spec = KernelSpec(2, "uniform")
    t0 = time.perf_counter()
    build_weight_shared(spec, k, scene.control_points, 1e-6, scene.region,
                        cfg.quadrature)
    return backend.BACKEND_NAME, time.perf_counter() - t0


def bench_assembly(repeat):
    rows = []
    for forced in ("python", "cython"):
        env = dict(os.environ, SFR_BACKEND=forced)
        code = (
            "import json, benchmarks.bench_backends as b;"
            f"r=[b._assembly_once() for _ in range({repeat})];"
            "print(json.dumps([r[0][0], min(t for _, t in r)]))"
        )
        proc = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env,
            cwd=os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
        )
        if proc.returncode != 0:
            rows.append({"backend": forced, "error": proc.stderr.strip()[-200:]})
            continue
        name, best = json.loads(proc.stdout.strip().splitlines()[-1])
        rows.append({"backend": name, "seconds": best})
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,10000,100000",
                        help="comma-separated argument counts")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",") if s]

    print("series evaluation (j0 of complex arguments, |z| <= 25)")
    for row in bench_series(sizes, args.repeat):
        line = f"  n={row['n']:>8}  python {row['python'] * 1e3:8.2f} ms"
        if "cython" in row:
            line += (f"  cython {row['cython'] * 1e3:8.2f} ms"
                     f"  speedup {row['speedup']:5.1f}x"
                     f"  max|diff| {row['max_abs_diff']:.2e}")
        print(line)

    print("weight-matrix assembly, reference scene at 450 Hz (40x40 nodes)")
    for row in bench_assembly(args.repeat):
        if "error" in row:
            print(f"  {row['backend']:>7}: failed ({row['error']})")
        else:
            print(f"  {row['backend']:>7} backend  {row['seconds'] * 1e3:8.2f} ms")


if __name__ == "__main__":
    main()
