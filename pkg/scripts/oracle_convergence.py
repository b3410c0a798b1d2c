"""Series-vs-Laurent discrepancy as |t| approaches the boundary.

Shows how many series terms the direct sum needs and how closely it tracks
the closed-form profile on I(2,2).
"""

import argparse

import numpy as np

from hsskernel import typei
from hsskernel.kernels import Kind, KernelSpec, expand
from hsskernel.suites import random_matrix


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mu", type=int, default=1)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    shape = (2, 2)
    _, _, prof = expand(typei.typei_space(shape), KernelSpec(Kind.SZEGO, args.mu))
    x = random_matrix(rng, shape, 1.0)
    y = random_matrix(rng, shape, 1.0)
    h = typei.h_pair(x, y) ** args.mu
    for target in (0.1, 0.3, 0.5, 0.7, 0.8, 0.9):
        alpha = target / abs(h)
        K = typei.szego_series(x, alpha, y, 1.0, args.mu)
        L = prof.evaluate(typei.rho_ext(x, alpha, y, 1.0, args.mu))
        print(f"|t|={target:.1f}  K={K:.6e}  rel.err={abs(K - L) / abs(L):.2e}")


if __name__ == "__main__":
    main()
