"""Numeric realization for the Grassmannians I(k, m).

Points of the big cell are complex ``k x m`` matrices ``z`` and the Jordan
polynomial is realized as ``h(x, -y) = det(I_k + x y^*)``, so that
``h(z, -z) = det(I + z z^*) >= 1``.  Everything here is floating point and
serves as an independent oracle for the exact pipeline in :mod:`kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .catalog import SpaceParams, space_from_label, SpaceLabel
from .kernels import szego_coeff_poly


class ChartError(ValueError):
    """The point (or a finite-difference stencil around it) leaves the chart."""


class StepError(ValueError):
    """Finite-difference estimates disagree; the step is too coarse."""


class ConvergenceError(ValueError):
    """The requested series cannot be summed to the requested accuracy."""


def as_cmatrix(x) -> np.ndarray:
    """Coerce to a 2-D complex array with positive dimensions and finite entries."""
    z = np.asarray(x, dtype=complex)
    if z.ndim == 0:
        z = z.reshape(1, 1)
    elif z.ndim == 1:
        z = z.reshape(1, -1)
    if z.ndim != 2 or 0 in z.shape:
        raise ValueError(f"expected a non-empty matrix, got shape {z.shape}")
    if not np.all(np.isfinite(z)):
        raise ValueError("matrix entries must be finite")
    return z


def typei_space(shape: tuple[int, int]) -> SpaceParams:
    k, m = shape
    return space_from_label(SpaceLabel("I", (min(k, m), max(k, m))))


@dataclass(frozen=True)
class BundlePoint:
    z: np.ndarray
    lam: complex
    mu: int = 1

    def __post_init__(self):
        object.__setattr__(self, "z", as_cmatrix(self.z))
        if self.mu < 1:
            raise ValueError("mu must be >= 1")

    @property
    def rho(self) -> float:
        return abs(self.lam) ** 2 * h_pair(self.z, self.z).real ** self.mu - 1.0

    def is_interior(self) -> bool:
        return self.rho < 0

    @classmethod
    def on_boundary(cls, z, theta: float, mu: int) -> "BundlePoint":
        """Point of the circle bundle over ``z`` with fiber phase ``theta``."""
        z = as_cmatrix(z)
        r = h_pair(z, z).real ** (-mu / 2)
        return cls(z, r * np.exp(1j * theta), mu)


def h_pair(x, y) -> complex:
    """``h(x, -y) = det(I_k + x y^*)``."""
    x = as_cmatrix(x)
    y = as_cmatrix(y)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch {x.shape} vs {y.shape}")
    k = x.shape[0]
    return complex(np.linalg.det(np.eye(k) + x @ y.conj().T))


def bergman_op_det(z, w) -> tuple[complex, complex]:
    """Determinant of ``X -> (I - z w^*) X (I - w^* z)`` on ``k x m`` matrices,
    next to ``det(I - z w^*)^(k+m)``.  The two should agree."""
    z = as_cmatrix(z)
    w = as_cmatrix(w)
    if z.shape != w.shape:
        raise ValueError(f"shape mismatch {z.shape} vs {w.shape}")
    k, m = z.shape
    left = np.eye(k) - z @ w.conj().T
    right = np.eye(m) - w.conj().T @ z
    d = np.linalg.det(left)
    if abs(d) < 1e-14:
        raise ChartError("I - z w^* is singular")
    # assemble the operator column by column from the matrix units
    op = np.empty((k * m, k * m), dtype=complex)
    for idx in range(k * m):
        E = np.zeros((k, m), dtype=complex)
        E.flat[idx] = 1.0
        op[:, idx] = (left @ E @ right).ravel()
    return complex(np.linalg.det(op)), complex(d ** (k + m))


def rho_ext(x, alpha, y, beta, mu: int = 1) -> complex:
    """Sesqui-holomorphic defining function ``alpha conj(beta) h(x,-y)^mu - 1``."""
    return alpha * np.conj(beta) * h_pair(x, y) ** mu - 1.0


@lru_cache(maxsize=None)
def _float_coeffs(r: int, a: int, b: int, mu: int) -> np.ndarray:
    P = szego_coeff_poly(SpaceParams(r, a, b), mu)
    return np.array([float(c) for c in P.coeffs])


def szego_series(x, alpha, y, beta, mu: int = 1, tol: float = 1e-15, max_terms: int = 100_000) -> complex:
    """Sum ``sum_nu P_mu(nu) t**nu`` with ``t = alpha conj(beta) h(x,-y)^mu``.

    Stops once the tail bound ``|c_N t^N| q / (1 - q)`` with
    ``q = (1 + 1/N)^n |t|`` drops below ``tol`` times the partial sum.  The
    bound is valid because every factor of ``P_mu`` is ``mu*nu + (positive)``.
    """
    x = as_cmatrix(x)
    sp = typei_space(x.shape)
    t = alpha * np.conj(beta) * h_pair(x, y) ** mu
    at = abs(t)
    if at > 0.9:
        raise ConvergenceError(f"|t| = {at:.3g} exceeds the 0.9 convergence margin")
    coeffs = _float_coeffs(sp.r, sp.a, sp.b, mu)
    total = 0j
    tpow = 1.0 + 0j
    for nu in range(max_terms):
        c = np.polynomial.polynomial.polyval(nu, coeffs)
        term = c * tpow
        total += term
        if at == 0:
            return total
        N = nu + 1
        q = (1 + 1 / N) ** sp.n * at
        if q < 1:
            tail = abs(term) * q / (1 - q)
            if tail <= tol * abs(total):
                return total
        tpow *= t
    raise ConvergenceError(f"no convergence after {max_terms} terms")


def mobius_action(u, z) -> np.ndarray:
    """``(A z + B)(C z + D)^{-1}`` for ``u = [[A, B], [C, D]]`` with ``A`` of size k x k."""
    z = as_cmatrix(z)
    k, m = z.shape
    u = np.asarray(u, dtype=complex)
    if u.shape != (k + m, k + m):
        raise ValueError(f"u must be {(k + m)}x{(k + m)}, got {u.shape}")
    A, B = u[:k, :k], u[:k, k:]
    C, D = u[k:, :k], u[k:, k:]
    den = C @ z + D
    if abs(np.linalg.det(den)) < 1e-12 * max(1.0, np.linalg.norm(den)) ** m:
        raise ChartError("C z + D is singular; the image leaves the chart")
    return (A @ z + B) @ np.linalg.inv(den)


def _central(f: Callable, x: np.ndarray, e: np.ndarray, h: float):
    return (f(x + h * e) - f(x - h * e)) / (2 * h)


def _richardson_first(f: Callable, x: np.ndarray, e: np.ndarray, h: float):
    d1 = _central(f, x, e, h)
    d2 = _central(f, x, e, h / 2)
    return d2 + (d2 - d1) / 3


def jacobian_det_numeric(u, z, step: float = 1e-3) -> complex:
    """Complex Jacobian determinant of ``z -> mobius_action(u, z)``.

    Holomorphic partials are taken along the real axis of each coordinate,
    with Richardson-refined central differences.
    """
    z = as_cmatrix(z)
    n = z.size

    def f(v):
        return mobius_action(u, v.reshape(z.shape)).ravel()

    mobius_action(u, z)  # the center itself must lie in the chart
    v0 = z.ravel()
    J = np.empty((n, n), dtype=complex)
    for j in range(n):
        e = np.zeros(n, dtype=complex)
        e[j] = 1.0
        J[:, j] = _richardson_first(f, v0, e, step)
    return complex(np.linalg.det(J))


def transformation_residual(u, z, step: float = 1e-3) -> float:
    """Relative defect of ``h(gz, -gz) = h(z, -z) |J_g(z)|^(2/p)``."""
    z = as_cmatrix(z)
    p = typei_space(z.shape).p
    gz = mobius_action(u, z)
    lhs = h_pair(gz, gz).real
    rhs = h_pair(z, z).real * abs(jacobian_det_numeric(u, z, step)) ** (2 / p)
    return abs(lhs - rhs) / abs(lhs)


def transformation_check(u, z, tol: float = 1e-5, step: float = 1e-3) -> bool:
    return transformation_residual(u, z, step) <= tol


def _real_derivatives(f: Callable[[np.ndarray], float], x: np.ndarray, h: float):
    """Gradient and Hessian of a real function of real variables.

    Central differences at ``h`` and ``h/2`` combined by Richardson.
    Returns ``f(x)``, the raw ``h/2`` estimates and the refined ones.
    """
    d = x.size
    f0 = f(x)

    def at_step(s):
        g = np.empty(d)
        H = np.empty((d, d))
        fp = np.empty(d)
        fm = np.empty(d)
        for i in range(d):
            ei = np.zeros(d)
            ei[i] = s
            fp[i] = f(x + ei)
            fm[i] = f(x - ei)
            g[i] = (fp[i] - fm[i]) / (2 * s)
            H[i, i] = (fp[i] - 2 * f0 + fm[i]) / s**2
        for i in range(d):
            for j in range(i + 1, d):
                ei = np.zeros(d)
                ej = np.zeros(d)
                ei[i] = s
                ej[j] = s
                v = (f(x + ei + ej) - f(x + ei - ej) - f(x - ei + ej) + f(x - ei - ej)) / (4 * s * s)
                H[i, j] = H[j, i] = v
        return g, H

    g1, H1 = at_step(h)
    g2, H2 = at_step(h / 2)
    return f0, (g2, H2), (g2 + (g2 - g1) / 3, H2 + (H2 - H1) / 3)


def monge_ampere_numeric(point: BundlePoint, step: float = 1e-3) -> float:
    """Monge-Ampère determinant of the bundle's defining function.

    Normalized so that ``|w|^2 - 1`` (the unit ball) gives 1: the bordered
    complex Hessian is built from ``1 - |lambda|^2 h(z,-z)^mu`` (positive
    inside) and multiplied by ``(-1)^(n+1)`` with n = dim of the base.
    On the circle bundle the value is ``mu^n h(z,-z)^(mu-p)``; off it an
    extra factor ``(1 + rho)^n`` appears.
    """
    z = point.z
    shape = z.shape
    N = z.size + 1
    mu = point.mu

    def r(v):
        zz = (v[: N - 1] + 1j * v[N : 2 * N - 1]).reshape(shape)
        lam = v[N - 1] + 1j * v[2 * N - 1]
        return 1.0 - abs(lam) ** 2 * h_pair(zz, zz).real ** mu

    w = np.concatenate([z.ravel(), [point.lam]])
    x0 = np.concatenate([w.real, w.imag])
    f0, raw, refined = _real_derivatives(r, x0, step)

    def bordered_det(g, H):
        gx, gy = g[:N], g[N:]
        Hxx, Hxy, Hyx, Hyy = H[:N, :N], H[:N, N:], H[N:, :N], H[N:, N:]
        M = np.empty((N + 1, N + 1), dtype=complex)
        M[0, 0] = f0
        M[0, 1:] = 0.5 * (gx + 1j * gy)  # d/dconj(w_k)
        M[1:, 0] = 0.5 * (gx - 1j * gy)  # d/dw_j
        M[1:, 1:] = 0.25 * (Hxx + Hyy + 1j * (Hxy - Hyx))  # d^2/dw_j dconj(w_k)
        return float(((-1) ** N * np.linalg.det(M)).real)

    J = bordered_det(*refined)
    J_raw = bordered_det(*raw)
    if abs(J - J_raw) > 1e-2 * abs(J):
        raise StepError(f"finite-difference step {step} too large (estimates {J_raw:.6g} vs {J:.6g}); retry smaller")
    return J


def monge_ampere_expected(point: BundlePoint) -> float:
    sp = typei_space(point.z.shape)
    h = h_pair(point.z, point.z).real
    return (1.0 + point.rho) ** sp.n * point.mu**sp.n * h ** (point.mu - sp.p)


def _gauss_legendre_unit(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return 0.5 * (x + 1.0), 0.5 * w


def hardy_norm_quadrature(space: SpaceParams, nu: int, grid: int | None = None) -> float:
    """``I(nu) / I(0)`` for the polar-coordinate integral of ``h^(-nu-p)``.

    After ``x_j = t_j^2 / (1 + t_j^2)`` the integrand on ``(0,1)^r`` is
    ``prod (1-x_j)^nu x_j^b prod_{i<j} |x_i - x_j|^a``, integrated on a
    Gauss-Legendre tensor grid (``grid`` nodes per axis).  The ratio should equal ``1 / P_1(nu)``.
    """
    if space.r > 2:
        raise ValueError("quadrature oracle supports rank <= 2 only")
    if not 0 <= nu <= 30:
        raise ValueError("nu must lie in 0..30")
    if grid is None:
        grid = 200 if space.r == 1 else 120
    x, w = _gauss_legendre_unit(grid)

    def integral(v):
        if space.r == 1:
            return float(np.sum(w * (1 - x) ** v * x**space.b))
        # fold onto x < y and set y = x + (1-x)s: the factor |x-y|^a becomes
        # ((1-x)s)^a, so the integrand is polynomial on the unit square
        X, S = np.meshgrid(x, x, indexing="ij")
        W = np.outer(w, w)
        Y = X + (1 - X) * S
        f = ((1 - X) * (1 - Y)) ** v * (X * Y) ** space.b * ((1 - X) * S) ** space.a * (1 - X)
        return 2.0 * float(np.sum(W * f))

    return integral(nu) / integral(0)


def bergman_norm_quadrature(nu: int, grid: int = 200) -> float:
    """``||lambda^nu||^2`` in the Bergman space of the disc bundle over CP^1.

    Nested 1-D quadratures: the fiber integral over ``|lambda| < h^(-1/2)``
    in polar form, then the base integral in ``s = |z|^2`` against the
    normalized Fubini-Study volume ``(1+s)^-2 ds``, mapped to ``x = s/(1+s)``.
    Should equal ``pi / ((nu+1)(nu+2))``.
    """
    if not 0 <= nu <= 30:
        raise ValueError("nu must lie in 0..30")
    x, w = _gauss_legendre_unit(grid)
    s = x / (1 - x)
    ds = 1 / (1 - x) ** 2
    h = 1 + s
    R = h ** -0.5
    # fiber: int_0^R 2 pi t^(2nu+1) dt, on the same reference grid
    t = np.outer(R, x)
    fiber = 2 * math.pi * np.sum(w * t ** (2 * nu + 1), axis=1) * R
    return float(np.sum(w * fiber * h**-2 * ds))
