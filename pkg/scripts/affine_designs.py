"""Build the affine orbit designs in GF(2^n) and compare with the closed forms."""
import argparse

from symtriple.constructions import affine_orbit_design
from symtriple.designs import is_t_design, two_transitive_automorphism_check
from symtriple.permgroup import group_order


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'n':>2} {'m':>2} {'|G|':>6} {'blocks':>7} {'λ':>5}  expected (blocks, λ)  flag-transitive")
    for n in range(2, args.max_n + 1):
        for m in range(1, n):
            d, G = affine_orbit_design(n, m)
            got = is_t_design(d, 2)
            want = (2 ** m * (2 ** n - 1), (2 ** m - 1) * (2 ** n - 2 ** (n - m) - 1))
            flag = two_transitive_automorphism_check(d, G).flag_transitive
            print(f"{n:>2} {m:>2} {group_order(G):>6} {got.block_count:>7} {got.lam:>5}  {str(want):<21} {flag}")


if __name__ == "__main__":
    main()
