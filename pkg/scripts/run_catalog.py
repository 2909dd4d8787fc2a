"""Analyze and classify every catalog triple and print a one-line summary each."""
import argparse

from symtriple import catalog
from symtriple.classifier import analyze_triple, classify
from symtriple.errors import PreconditionViolation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mode", choices=("theorem1", "p3", "p5"), help="force a case list")
    ap.add_argument("keys", nargs="*", help="catalog keys (default: every triple)")
    args = ap.parse_args()
    keys = args.keys or catalog.triple_keys()
    print(f"{'key':<18}{'(v,k,r,b,m)':<18}{'p':>3} {'λ':>4} {'2AT':>5}  case  exit")
    for key in keys:
        t = catalog.build(key)
        try:
            r = classify(analyze_triple(t), args.mode)
        except PreconditionViolation as exc:
            print(f"{key:<18}invalid: {exc}")
            continue
        P = r.parameters
        lam = "-" if r.lam is None else r.lam
        print(f"{key:<18}{str((P.v, P.k, P.r, P.b, P.m)):<18}{r.p:>3} {lam:>4} {str(r.quotient_2at):>5}"
              f"  {r.matched_case:<5} {r.exit_code()}")


if __name__ == "__main__":
    main()
