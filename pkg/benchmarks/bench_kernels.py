"""Wall-clock comparison of the numba and numpy oracle backends.

    python benchmarks/bench_kernels.py [--n 10] [--samples 1000000] [--repeat 3]

Each workload runs once untimed (JIT warm-up) and then ``--repeat`` times;
the best time is reported.  Outputs of the two backends are checked for
equality before timing is printed.
"""

import argparse
import time

from selfoverlap import Permutation
from selfoverlap.oracle import brute_pattern_tables, enumerate_classify, estimate_probability
from selfoverlap.oracle.backend import BACKENDS


def best_of(fn, repeat):
    result = fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads(n, samples, workers):
    pats = [Permutation((1, 3, 2)), Permutation((2, 1, 3)), Permutation((2, 3, 1))]
    return {
        f"classify S_{n}": lambda b: enumerate_classify(n, workers=workers, backend=b),
        f"pattern tables S_{n}": lambda b: brute_pattern_tables(pats, n, workers=workers, backend=b),
        f"sample {samples} of S_8": lambda b: estimate_probability("so", 8, samples, seed=7, backend=b).hits,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--samples", type=int, default=10**6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    available = [b for b in ("numpy", "numba") if b in BACKENDS]
    if "numba" not in available:
        print("numba not installed; timing numpy only")

    print(f"{'workload':28s}" + "".join(f"{b:>12s}" for b in available) + "  numba speedup")
    for label, fn in workloads(args.n, args.samples, args.workers).items():
        times, results = [], []
        for b in available:
            t, r = best_of(lambda: fn(b), args.repeat)
            times.append(t)
            results.append(r)
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        speedup = f"{times[0] / times[1]:13.1f}x" if len(times) == 2 else ""
        print(f"{label:28s}" + "".join(f"{t:11.3f}s" for t in times) + speedup)


if __name__ == "__main__":
    main()
