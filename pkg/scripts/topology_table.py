"""Betti-number obstruction table for complex Grassmannians."""

import argparse

from hsskernel.topology import sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-l", type=int, default=10)
    args = ap.parse_args()
    for v in sweep(args.max_l):
        tag = "lens-compatible" if v.lens_candidate else "obstructed"
        print(f"Gr({v.k},{v.l})  n={v.n:<3d} dim S={v.real_dimension:<3d} {tag:16s} P(q)={list(v.poincare)}")


if __name__ == "__main__":
    main()
