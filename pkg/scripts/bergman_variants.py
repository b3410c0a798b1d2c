"""Compare the two candidate Bergman coefficients against the CP^1 slice norm.

The reproducing coefficient is 1/||lambda^nu||^2 with the norm computed by
quadrature; only the shifted Pochhammer form reproduces it.
"""

import math

from hsskernel.catalog import space_from_label
from hsskernel.kernels import bergman_coeff_poly, bergman_coeff_poly_unshifted
from hsskernel.typei import bergman_norm_quadrature


def main():
    sp = space_from_label("I(1,1)")
    Q = bergman_coeff_poly(sp)
    Qv = bergman_coeff_poly_unshifted(sp)
    print(f"shifted   Q(nu) = {Q.format('nu')}")
    print(f"unshifted Q(nu) = {Qv.format('nu')}")
    print(f"{'nu':>3} {'pi/norm':>14} {'shifted':>10} {'unshifted':>10}")
    for nu in range(11):
        c = math.pi / bergman_norm_quadrature(nu)
        print(f"{nu:>3} {c:14.9f} {float(Q(nu)):10.4f} {float(Qv(nu)):10.4f}")


if __name__ == "__main__":
    main()
