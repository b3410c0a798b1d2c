"""Print the Laurent profile of every catalog space up to a dimension bound.

    python3 scripts/profile_sweep.py --max-n 10 --mu 1 2
"""

import argparse

from hsskernel.catalog import space_from_label
from hsskernel.kernels import check_c0
from hsskernel.suites import catalog_sweep_labels, sweep_expansions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--mu", type=int, nargs="+", default=[1])
    args = ap.parse_args()
    labels = catalog_sweep_labels(args.max_n)
    for label, spec, P, prof in sweep_expansions(labels, tuple(args.mu)):
        sp = space_from_label(label)
        ok = "ok" if check_c0(prof, sp, spec) else "MISMATCH"
        print(f"{str(label):8s} n={sp.n:<3d} {spec.kind.value:7s} mu={spec.mu}  c0 {ok}  K = {prof.format()}")


if __name__ == "__main__":
    main()
