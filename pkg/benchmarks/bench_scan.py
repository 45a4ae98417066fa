#!/usr/bin/env python3
"""Benchmark the two ordering-scan backends on real shifted-square patterns.

For each d the scan runs over (d+1)! permutations of the (d+1)x(d+1)
zero/nonzero pattern of ([L*] + shift I)^2 in the u*-basis.  Two pattern
regimes matter: the canonical shift (r-d)/2 zeroes the near-diagonal except
at one end, so witnesses exist and pruning bites late; shift 0 leaves a full
pentadiagonal pattern that fails fast.  Usage:

    python benchmarks/bench_scan.py [--max-d 8] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from leonard_lab import _scan_py
from leonard_lab.leonard import canonical_shift, lstar_shift_square
from leonard_lab.params import build_params
from leonard_lab.scan import zero_pattern

try:
    from leonard_lab import _scan_cy
except ImportError:
    _scan_cy = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=8)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _scan_cy is None:
        print("compiled backend not built; timing the pure-Python backend only")

    header = f"{'d':>2} {'perms':>9} {'shift':>10} {'python':>12} {'cython':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for d in range(2, args.max_d + 1):
        p = build_params(d, Fraction(1, 2), Fraction(-1, 2))
        perms = 1
        for k in range(2, d + 2):
            perms *= k
        for label, shift in (("canonical", canonical_shift(p)), ("zero", Fraction(0))):
            pattern = zero_pattern(lstar_shift_square(p, shift))
            n = d + 1
            baseline = _scan_py.scan_tridiagonal_orderings(pattern, n)
            t_py = best_of(
                lambda: _scan_py.scan_tridiagonal_orderings(pattern, n), args.repeats
            )
            if _scan_cy is not None:
                assert _scan_cy.scan_tridiagonal_orderings(pattern, n) == baseline
                t_cy = best_of(
                    lambda: _scan_cy.scan_tridiagonal_orderings(pattern, n),
                    args.repeats,
                )
                print(
                    f"{d:>2} {perms:>9} {label:>10} {t_py * 1e3:>10.3f}ms "
                    f"{t_cy * 1e3:>10.3f}ms {t_py / t_cy:>7.0f}x"
                )
            else:
                print(f"{d:>2} {perms:>9} {label:>10} {t_py * 1e3:>10.3f}ms {'-':>12} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
