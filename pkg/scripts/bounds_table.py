"""Print small values of the bound families, with their bit lengths once they get large."""

import argparse

from chitop.bounds import bound_D, bound_Dprime, bound_M, bound_N, bound_Phi, bound_PhiBar


def show(v: int) -> str:
    return str(v) if v.bit_length() <= 40 else f"~2^{v.bit_length() - 1} ({v.bit_length()} bits)"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--max-dep", type=int, default=3)
    args = ap.parse_args()
    for name, fn in (("N", bound_N), ("M", bound_M)):
        for n in range(args.max_n + 1):
            cells = [show(fn(n, d, 1)) for d in range(1, args.max_d + 1)]
            print(f"{name}(n={n}, d=1..{args.max_d}, k=1): " + ", ".join(cells))
    for dep in range(args.max_dep + 1):
        print(f"dep={dep}: D={show(bound_D(dep))}  D'={show(bound_Dprime(dep))}  "
              f"Phi={show(bound_Phi(dep))}  PhiBar={show(bound_PhiBar(dep))}")


if __name__ == "__main__":
    main()
