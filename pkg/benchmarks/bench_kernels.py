"""Time the numeric kernels with and without numba.

Each mode runs in its own interpreter because the JIT switch is read once at
import.  The compiled mode is warmed up first so compilation (or the on-disk
cache load) is not counted.

    python3 benchmarks/bench_kernels.py            # both modes, side by side
    python3 benchmarks/bench_kernels.py --worker   # one mode, JSON to stdout
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

# (label, statement, repeats); the Kapteyn table is the hot loop: one Miller
# recurrence per series term, shared across all j
CASES = [
    ("kapteyn taus, n=20", "tau_estimates(20, Method.KAPTEYN)", 3),
    ("kapteyn taus, n=30", "tau_estimates(30, Method.KAPTEYN)", 1),
    ("newton taus, n=400", "tau_estimates(400, Method.NEWTON)", 5),
    ("bessel J_k(k rho), k<=2000", "[bessel_j(k, 0.99 * k) for k in range(1, 2001)]", 3),
    ("hermite recurrence, n=5000 x 200", "[hermite_recurrence_log(5000, x) for x in xs]", 3),
    ("airy on [-20, 20] x 2000", "[airy_ai(z) for z in zs]", 3),
]

SETUP = """
import numpy as np
from hermasym.zeros import Method, tau_estimates
from hermasym.specfun import airy_ai, bessel_j
from hermasym.exactpoly import hermite_recurrence_log
xs = [float(x) for x in np.linspace(-90.0, 90.0, 200)]
zs = [float(z) for z in np.linspace(-20.0, 20.0, 2000)]
"""


def worker():
    from hermasym._jit import JIT_ENABLED

    ns = {}
    exec(SETUP, ns)
    results = {"jit": JIT_ENABLED, "times": {}}
    for label, stmt, reps in CASES:
        timeit.timeit(stmt, globals=ns, number=1)  # warm-up and compile
        best = min(timeit.repeat(stmt, globals=ns, number=1, repeat=reps))
        results["times"][label] = best
    json.dump(results, sys.stdout)


def run_mode(disable):
    env = dict(os.environ)
    env["HERMASYM_DISABLE_NUMBA"] = "1" if disable else "0"
    proc = subprocess.run([sys.executable, __file__, "--worker"], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker()
        return
    fast = run_mode(disable=False)
    slow = run_mode(disable=True)
    if not fast["jit"]:
        print("numba unavailable: both columns are the pure-Python path")
    width = max(len(c[0]) for c in CASES)
    print(f"{'kernel':<{width}}  {'numba [s]':>10}  {'python [s]':>10}  {'speed-up':>8}")
    for label, _, _ in CASES:
        a, b = fast["times"][label], slow["times"][label]
        print(f"{label:<{width}}  {a:10.4f}  {b:10.4f}  {b / a:7.1f}x")


if __name__ == "__main__":
    main()
