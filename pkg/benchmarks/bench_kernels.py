#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure NumPy/Python fallback.

Usage:
    python benchmarks/bench_kernels.py             # time the active backend
    python benchmarks/bench_kernels.py --compare   # numba vs fallback table

The backend is chosen at import time from DSITNIKOV_NO_NUMBA, so --compare
re-runs this script in two subprocesses with the flag flipped.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def build_cases():
    import dsitnikov as ds
    from dsitnikov import _kernels, resonance

    _kernels.warmup()
    kgrid = np.linspace(0.01, 0.7, 10_000)
    ugrid = np.linspace(-20.0, 20.0, 20_000)
    orb = ds.make_orbit(-1.0, 0.7)
    ts = np.linspace(0.0, 40.0, 20_000)
    s0 = ds.PhysicalState(0.0, 0.0, 2 ** 0.5, -(2 ** 0.5))
    sb = ds.PhysicalState(0.7, -0.4, -1.0, 0.6)

    def catalog():
        resonance._INVERT_CACHE.clear()
        resonance._RATIO_CACHE.clear()
        return resonance.build_catalog(8)

    return {
        "complete K,E        (10k evals)": lambda: [_kernels.agm_ke(float(k)) for k in kgrid],
        "jacobi sn,cn,dn     (20k evals)": lambda: [_kernels.jacobi_sncndn(float(u), 0.55) for u in ugrid],
        "third kind Pi       (10k evals)": lambda: [_kernels.complete_pi(2.0 * k * k, float(k)) for k in kgrid],
        "orbit evaluation    (20k times)": lambda: ds.eval_state_array(ts, orb),
        "limit integration   (50k steps)": lambda: ds.integrate_physical(
            s0, ds.EQUAL_MASS_LIMIT, 50.0, 1e-3, sample_every=100),
        "bounce extension    (12k steps)": lambda: ds.extend_with_bounce(sb, 12.0),
        "resonance catalog   (p_max = 8)": catalog,
    }


def run_benchmarks(repeats=3):
    from dsitnikov import BACKEND

    results = {}
    for name, fn in build_cases().items():
        best = min(_timed(fn) for _ in range(repeats))
        results[name] = best
    return BACKEND, results


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--compare", action="store_true",
                    help="run both backends in subprocesses and tabulate")
    ap.add_argument("--json", action="store_true",
                    help="emit machine-readable results (used by --compare)")
    args = ap.parse_args()

    if args.compare:
        rows = {}
        for flag in ("0", "1"):
            env = dict(os.environ, DSITNIKOV_NO_NUMBA=flag)
            out = subprocess.run(
                [sys.executable, os.path.abspath(__file__), "--json"],
                env=env, capture_output=True, text=True, check=True)
            backend, res = json.loads(out.stdout.splitlines()[-1])
            rows[backend] = res
        if set(rows) != {"numba", "numpy"}:
            sys.exit("expected one numba and one numpy run; is numba installed?")
        width = max(len(n) for n in rows["numba"])
        print(f"{'case'.ljust(width)}   numba [s]   numpy [s]   speedup")
        for name in rows["numba"]:
            a = rows["numba"][name]
            b = rows["numpy"][name]
            print(f"{name.ljust(width)}   {a:9.4f}   {b:9.4f}   {b / a:6.1f}x")
        return

    backend, results = run_benchmarks()
    if args.json:
        print(json.dumps([backend, results]))
        return
    print(f"backend: {backend}")
    for name, secs in results.items():
        print(f"  {name}: {secs:.4f} s")


if __name__ == "__main__":
    main()
