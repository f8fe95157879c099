"""Numba vs numpy on the multiset enumeration kernels.

For each case the workload is the oracle's inner loop: one enumeration per
coset over its conormal labels, plus one over the full base label set.
Both backends are checked to return identical codes and witnesses.

    python benchmarks/bench_kernels.py [--repeat 5] [--cases a:3,8 e6:3]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from schubdual import _kernels
from schubdual.cli import parse_space
from schubdual.dualcore import conormal_labels
from schubdual.labels import code_count, kind_of
from schubdual.polarize import _label_codes, base_labels
from schubdual.rootsys import all_indices

DEFAULT_CASES = ["a:3,8", "d:3", "e6:1", "e6:3"]


def workload(case):
    kind, (ncodes, nbits) = kind_of(case), code_count(case)
    jobs = [_label_codes(conormal_labels(case, idx, "base")) for idx in all_indices(case)]
    jobs.append(_label_codes([lab for _, lab, _ in base_labels(case)]))
    return [(kind, codes, case.degree, ncodes, nbits) for codes in jobs]


def run(jobs, backend):
    return [_kernels.enumerate_targets(*job, backend=backend) for job in jobs]


def timed(jobs, backend, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        run(jobs, backend)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--cases", nargs="+", default=DEFAULT_CASES)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is unavailable or disabled; nothing to compare")

    t0 = time.perf_counter()
    _kernels.enumerate_targets(0, np.array([[1, 2]]), 1, 4, 2, backend="numba")
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s\n")

    print(f"{'case':<10}{'calls':>7}{'multisets':>12}{'numba':>12}{'numpy':>12}{'speedup':>9}")
    for spec in args.cases:
        case = parse_space(spec)
        jobs = workload(case)
        for (fa, wa), (fb, wb) in zip(run(jobs, "numba"), run(jobs, "numpy")):
            assert np.array_equal(fa, fb) and np.array_equal(wa, wb), f"backends disagree on {spec}"
        total = sum(_kernels.comb(len(c) + d - 1, d) for _, c, d, _, _ in jobs)
        tn = timed(jobs, "numba", args.repeat)
        tp = timed(jobs, "numpy", args.repeat)
        print(f"{spec:<10}{len(jobs):>7}{total:>12,}{tn * 1e3:>10.1f}ms{tp * 1e3:>10.1f}ms{tp / tn:>8.1f}x")


if __name__ == "__main__":
    main()
