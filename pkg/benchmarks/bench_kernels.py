"""Compare the compiled and pure-Python echelon kernels.

Two workloads: raw integer matrices of the sizes the package sees
(Λ² and Λ³ of 4- to 6-dimensional algebras), and an end-to-end
classification sweep run once per kernel in a subprocess.

    python benchmarks/bench_kernels.py [--reps N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from liecone import _echelon
from liecone.linalg import KERNEL

try:
    from liecone._kernels import echelon as compiled
except ImportError:
    compiled = None


def matrices(rng, count, rows, cols, rank, bound=3):
    """Integer matrices of a prescribed rank (products of two random factors)."""
    out = []
    for _ in range(count):
        a = [[rng.randint(-bound, bound) for _ in range(rank)] for _ in range(rows)]
        b = [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rank)]
        out.append([[sum(x * y for x, y in zip(r, col)) for col in zip(*b)] for r in a])
    return out


def dispatched(m, ncols):
    """What the package does: compiled first, pure Python on int64 overflow."""
    try:
        return compiled(m, ncols)
    except OverflowError:
        return _echelon.echelon(m, ncols)


def overflow_count(mats, ncols):
    n = 0
    for m in mats:
        try:
            compiled(m, ncols)
        except OverflowError:
            n += 1
    return n


def time_kernel(fn, mats, ncols, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for m in mats:
            fn(m, ncols)
        best = min(best, time.perf_counter() - t0)
    return best


SWEEP = """
import time
from liecone.catalog import catalog_get, catalog_list
from liecone.hodge import Orientation
from liecone.acs import random_acs
from liecone.tameness import classify
from liecone.linalg import KERNEL
o = Orientation.standard(4, 1)
t0 = time.perf_counter()
for name in catalog_list():
    g = catalog_get(name).algebra
    for s in range(40):
        classify(g, o, random_acs(o, s, sparse=bool(s % 2)))
print(KERNEL, time.perf_counter() - t0)
"""


def sweep(pure):
    env = dict(os.environ)
    if pure:
        env["LIECONE_PURE_PYTHON"] = "1"
    res = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True,
                         text=True, check=True)
    kernel, secs = res.stdout.split()
    return kernel, float(secs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--count", type=int, default=300)
    args = ap.parse_args()
    rng = random.Random(7)
    print(f"loaded kernel: {KERNEL}")
    if compiled is None:
        print("compiled kernel unavailable; only the Python timings are shown")
    print(f"{'shape':>12} {'rank':>4} {'python ms':>10} {'cython ms':>10} {'speedup':>8}"
          f" {'fallbacks':>10}")
    for rows, cols, rank in [(6, 6, 3), (6, 6, 5), (10, 10, 6), (15, 20, 12), (20, 15, 15)]:
        mats = matrices(rng, args.count, rows, cols, rank)
        for m in mats[:20]:
            if compiled is not None:
                assert dispatched(m, cols) == _echelon.echelon(m, cols)
        tp = time_kernel(_echelon.echelon, mats, cols, args.reps) * 1e3
        if compiled is not None:
            tc = time_kernel(dispatched, mats, cols, args.reps) * 1e3
            fb = overflow_count(mats, cols)
            print(f"{rows:>5}x{cols:<6} {rank:>4} {tp:>10.1f} {tc:>10.1f} {tp / tc:>7.1f}x"
                  f" {fb:>6}/{len(mats)}")
        else:
            print(f"{rows:>5}x{cols:<6} {rank:>4} {tp:>10.1f} {'-':>10} {'-':>8}")
    print("\nclassification sweep (200 random J, 5 algebras):")
    for pure in (True, False):
        kernel, secs = sweep(pure)
        print(f"  {kernel:>7}: {secs:.2f} s")


if __name__ == "__main__":
    main()
