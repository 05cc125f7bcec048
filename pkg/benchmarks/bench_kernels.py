"""Time the branch-and-bound kernels on both backends.

    python3 benchmarks/bench_kernels.py [--repeat R]
"""
from __future__ import annotations

import argparse
import time

from hmshift import kernels
from hmshift.setfamily import level_masks
from hmshift.verify.search import cross_tables

CASES = [
    ("hm", 8, 3),
    ("ekr", 8, 3),
    ("cross", 8, 3),
    ("cross", 7, 4),
]


def job(impl, problem, n, k):
    if problem == "cross":
        _, alevel, meet, shad = cross_tables(n, k)
        return lambda: impl.search_cross(meet, shad, len(alevel), True, True)
    sets = level_masks(n, k)
    return lambda: impl.search_intersecting(sets, n, problem == "hm", True)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available()
    print(f"{'case':<14}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}  maximum  nodes")
    for problem, n, k in CASES:
        row = {}
        for name in backends:
            row[name] = best_of(job(kernels.load(name), problem, n, k), args.repeat)
        results = {r[1] for r in row.values()}
        assert len(results) == 1, f"backends disagree on {problem}({n},{k})"
        best, _, nodes = next(iter(row.values()))[1]
        speed = ""
        if "cython" in row:
            speed = f"{row['python'][0] / row['cython'][0]:.0f}x"
        cells = "".join(f"{row[b][0]:>11.4f}s" for b in backends)
        print(f"{problem}({n},{k})".ljust(14) + cells + f"{speed:>10}  {best:>7}  {nodes}")


if __name__ == "__main__":
    main()
