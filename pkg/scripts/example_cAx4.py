"""chi(E) for the cAx/4 family (x^2 + z^(4k+2) + u^(2k+1)) in P(2k+1, 2k+3, 1, 2).

Alongside the total, the chart z = 1 is evaluated on its own: it is the affine
curve x^2 + u^(2k+1) + 1 = 0 (times a free coordinate), a hyperelliptic curve
of genus k with one point at infinity, so its chi is 1 - 2k.  For k = 2 a
quoted value of -13 is compared and any mismatch is flagged.
"""

import argparse
import logging

from chitop import AffineLocus, WeightedLocus, chi_affine, chi_wps, compare_reference, parse_poly

VARS = ("x", "y", "z", "u")
QUOTED = {2: -13}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    for k in range(1, args.max_k + 1):
        weights = (2 * k + 1, 2 * k + 3, 1, 2)
        y = WeightedLocus.of(weights, [parse_poly(f"x^2 + z^{4 * k + 2} + u^{2 * k + 1}", VARS)], VARS)
        total, avg = chi_wps(y), chi_wps(y, quotient="average")
        curve = chi_affine(AffineLocus.of(("x", "u"), [parse_poly(f"x^2 + u^{2 * k + 1} + 1", ("x", "u"))]))
        line = f"k={k} P{weights}: chi(E)={total} (group average {avg}), chart z=1: {curve} (1-2k = {1 - 2 * k})"
        if k in QUOTED:
            chk = compare_reference(f"cAx/4, k={k}", total, QUOTED[k])
            line += f", quoted {chk.reference}, discrepancy={chk.discrepancy}"
        print(line)


if __name__ == "__main__":
    main()
