"""Print the feasible row (f) parameters for every odd prime up to a limit."""
import argparse

from symtriple.tables import feasible_f_rows, is_prime, row_c_matches


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=31)
    args = ap.parse_args()
    for p in range(3, args.max_p + 1):
        if not is_prime(p):
            continue
        rows = feasible_f_rows(p)
        print(f"p = {p}: {len(rows)} row(s) (f)")
        for row in rows:
            print(f"  a={row.a:<3} s={row.s:<3} (v,b,r,λ) = {row.vbrl}")
        for q, n, params in row_c_matches(p):
            print(f"  row (c): q={q}, n={n}, (v,b,r,λ) = {params}")


if __name__ == "__main__":
    main()
