"""chi(E) for weighted blow-ups of cA/m points: (xy + z^(mk) + u^k) in P(a, b, 1, m).

Prints one row per admissible (m, k, a, b) with the branched-cover value, the
group-average value and the expected k + 2.
"""

import argparse
import time

from chitop import WeightedLocus, chi_wps, parse_poly

VARS = ("x", "y", "z", "u")


def rows(max_m, max_k):
    for m in range(2, max_m + 1):
        for k in range(1, max_k + 1):
            for a in range(1, m * k):
                if a % m and (m * k - a) % m:
                    yield m, k, a, m * k - a


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()
    print(f"{'m':>2} {'k':>2} {'a':>2} {'b':>2} {'cover':>6} {'average':>8} {'k+2':>4} {'sec':>6}")
    for m, k, a, b in rows(args.max_m, args.max_k):
        y = WeightedLocus.of((a, b, 1, m), [parse_poly(f"x*y + z^{m * k} + u^{k}", VARS)], VARS)
        t0 = time.perf_counter()
        cover = chi_wps(y)
        avg = chi_wps(y, quotient="average")
        print(f"{m:>2} {k:>2} {a:>2} {b:>2} {cover:>6} {avg:>8} {k + 2:>4} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
