"""Differential operators, inner products and (semi)norms in coefficient space.

Norms at a weight other than the polynomial's own parameter are computed by
re-expanding into the weight's family, never by quadrature.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .basis import WirtingerDirection, to_parameter
from .core import ZernikePoly, linear_combine, mode_norm_sq_array
from .errors import ArgumentError, ParameterMismatchError, check_alpha


class SeminormConvention(Enum):
    """How the order-k seminorm sums derivatives.

    ``Cartesian`` sums ||d1^k1 d2^k2 u||^2 over k1 + k2 = k; ``ComplexPair``
    sums ||dz^k1 dz*^k2 u||^2. For k = 1 the first is exactly twice the second.
    """

    Cartesian = "cartesian"
    ComplexPair = "complex"


def wirtinger_derivative(p: ZernikePoly, direction: WirtingerDirection) -> ZernikePoly:
    """dz or dz* of ``p``; the result lives in the parameter ``alpha + 1`` family."""
    direction = WirtingerDirection(direction)
    a = p.alpha
    m = p.m.astype(float)
    n = p.n.astype(float)
    if direction is WirtingerDirection.Dz:
        keep = p.m > 0
        factor = m * (n + a + 1) / (a + 1)
        return ZernikePoly(a + 1, p.m[keep] - 1, p.n[keep], (p.c * factor)[keep])
    keep = p.n > 0
    factor = (m + a + 1) * n / (a + 1)
    return ZernikePoly(a + 1, p.m[keep], p.n[keep] - 1, (p.c * factor)[keep])


def cartesian_derivative(p: ZernikePoly, axis: int) -> ZernikePoly:
    """d/dx1 (axis 1) or d/dx2 (axis 2); result at parameter ``alpha + 1``."""
    dz = wirtinger_derivative(p, WirtingerDirection.Dz)
    dzs = wirtinger_derivative(p, WirtingerDirection.Dzstar)
    if axis == 1:
        return linear_combine([(1.0, dz), (1.0, dzs)])
    if axis == 2:
        return linear_combine([(1j, dz), (-1j, dzs)])
    raise ArgumentError(f"axis must be 1 or 2, got {axis!r}")


def angular_derivative(p: ZernikePoly) -> ZernikePoly:
    """x2 d1 p - x1 d2 p, i.e. minus the polar-angle derivative.

    Diagonal in the basis: mode (m, n) is scaled by -i (m - n).
    """
    return ZernikePoly(p.alpha, p.m, p.n, p.c * (-1j * (p.m - p.n)))


def apply_operator_L(p: ZernikePoly) -> ZernikePoly:
    """Apply the weighted Sturm-Liouville operator whose eigenfunctions are the basis."""
    d = (p.m + p.n).astype(float)
    return ZernikePoly(p.alpha, p.m, p.n, p.c * (d * (d + 2 + 2 * p.alpha)))


def _at_weight(p: ZernikePoly, weight_exp: float) -> ZernikePoly:
    return to_parameter(p, weight_exp)


def l2_inner_product(p: ZernikePoly, q: ZernikePoly, weight_exp: float | None = None) -> complex:
    """<p, q> in L2 with weight (1 - |x|^2)**weight_exp (defaults to the parameter)."""
    if p.alpha != q.alpha:
        raise ParameterMismatchError(f"parameters differ: {p.alpha!r} vs {q.alpha!r}")
    w = p.alpha if weight_exp is None else check_alpha(weight_exp)
    pw, qw = _at_weight(p, w), _at_weight(q, w)
    common, ip, iq = np.intersect1d(_keys(pw), _keys(qw), return_indices=True)
    if common.size == 0:
        return 0j
    h = mode_norm_sq_array(w, pw.m[ip], pw.n[ip])
    return complex(np.sum(pw.c[ip] * np.conj(qw.c[iq]) * h))


def _keys(p: ZernikePoly) -> np.ndarray:
    # injective for m, n < 2**31
    return (p.m << 32) | p.n


def norm_sq(p: ZernikePoly, weight_exp: float | None = None) -> float:
    """Squared weighted L2 norm via Parseval in the weight's family."""
    w = p.alpha if weight_exp is None else check_alpha(weight_exp)
    pw = _at_weight(p, w)
    if pw.is_zero():
        return 0.0
    return float(np.sum(np.abs(pw.c) ** 2 * mode_norm_sq_array(w, pw.m, pw.n)))


def gradient_norm_sq(p: ZernikePoly, weight_exp: float | None = None) -> float:
    """||grad p||^2 with weight exponent ``weight_exp`` (default ``alpha + 1``).

    Uses |grad u|^2 = 2 (|dz u|^2 + |dz* u|^2).
    """
    w = p.alpha + 1 if weight_exp is None else weight_exp
    dz = wirtinger_derivative(p, WirtingerDirection.Dz)
    dzs = wirtinger_derivative(p, WirtingerDirection.Dzstar)
    return 2.0 * (norm_sq(dz, w) + norm_sq(dzs, w))


def multi_derivative(p: ZernikePoly, k1: int, k2: int,
                     convention: SeminormConvention) -> ZernikePoly:
    """d1^k1 d2^k2 p (Cartesian) or dz^k1 dz*^k2 p (ComplexPair)."""
    convention = SeminormConvention(convention)
    q = p
    if convention is SeminormConvention.Cartesian:
        for _ in range(k1):
            q = cartesian_derivative(q, 1)
        for _ in range(k2):
            q = cartesian_derivative(q, 2)
    else:
        for _ in range(k1):
            q = wirtinger_derivative(q, WirtingerDirection.Dz)
        for _ in range(k2):
            q = wirtinger_derivative(q, WirtingerDirection.Dzstar)
    return q


def sobolev_seminorm_sq(p: ZernikePoly, k: int,
                        convention: SeminormConvention = SeminormConvention.Cartesian) -> float:
    """Order-``k`` weighted Sobolev seminorm squared, weight exponent ``p.alpha``."""
    if k < 0:
        raise ArgumentError("seminorm order must be nonnegative")
    if k == 0:
        return norm_sq(p)
    total = 0.0
    for k1 in range(k + 1):
        total += norm_sq(multi_derivative(p, k1, k - k1, convention), p.alpha)
    return total


def sobolev_norm_sq(p: ZernikePoly, k: int,
                    convention: SeminormConvention = SeminormConvention.Cartesian) -> float:
    """Full order-``k`` norm squared: sum of seminorms of orders 0..k."""
    return sum(sobolev_seminorm_sq(p, r, convention) for r in range(k + 1))


def wz_norm_sq(p: ZernikePoly) -> float:
    """WZ norm squared in Parseval form, sum (1 + lambda) |c|^2 h."""
    if p.is_zero():
        return 0.0
    d = (p.m + p.n).astype(float)
    lam = d * (d + 2 + 2 * p.alpha)
    h = mode_norm_sq_array(p.alpha, p.m, p.n)
    return float(np.sum((1 + lam) * np.abs(p.c) ** 2 * h))


def bernstein_sum(p: ZernikePoly) -> float:
    """sum lambda |c|^2 h; equals ||grad p||^2_(alpha+1) + ||angular p||^2_(alpha)."""
    if p.is_zero():
        return 0.0
    d = (p.m + p.n).astype(float)
    h = mode_norm_sq_array(p.alpha, p.m, p.n)
    return float(np.sum(d * (d + 2 + 2 * p.alpha) * np.abs(p.c) ** 2 * h))
