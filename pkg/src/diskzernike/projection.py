"""Orthogonal projection onto polynomials of total degree <= N."""

from __future__ import annotations

import numpy as np

from .basis import WirtingerDirection, change_parameter
from .calculus import norm_sq, wirtinger_derivative
from .core import ZernikePoly, evaluate, mode_norm_sq_array
from .errors import PreconditionError, check_alpha
from .quadrature import DiskQuadrature, sample


def truncate(p: ZernikePoly, N: int) -> ZernikePoly:
    """Keep the modes with m + n <= N."""
    keep = (p.m + p.n) <= N
    if keep.all():
        return p
    return ZernikePoly(p.alpha, p.m[keep], p.n[keep], p.c[keep], _canonical=True)


def residual(p: ZernikePoly, N: int) -> ZernikePoly:
    """``p - truncate(p, N)``: the modes with m + n > N."""
    keep = (p.m + p.n) > N
    return ZernikePoly(p.alpha, p.m[keep], p.n[keep], p.c[keep], _canonical=True)


def tail_norm_sq(p: ZernikePoly, N: int) -> float:
    """||p - truncate(p, N)||^2 in the weight matching ``p.alpha``."""
    return norm_sq(residual(p, N))


def expand_function(f, alpha: float, N: int, rule: DiskQuadrature) -> ZernikePoly:
    """Coefficients of the degree-``N`` projection of ``f``, by quadrature.

    ``rule`` must integrate products of two degree-``N`` polynomials exactly
    against the weight; :class:`PreconditionError` is raised otherwise.
    """
    alpha = check_alpha(alpha)
    if rule.alpha != alpha:
        raise PreconditionError(f"rule built for alpha={rule.alpha}, need {alpha}")
    if rule.polynomial_exactness < 2 * N:
        raise PreconditionError(
            f"rule exact to total degree {rule.polynomial_exactness}, need {2 * N}"
        )
    x1, x2, w = rule.nodes()
    values = sample(f, x1, x2)
    ms, ns = [], []
    for d in range(N + 1):
        for m in range(d + 1):
            ms.append(m)
            ns.append(d - m)
    ms = np.array(ms, dtype=np.int64)
    ns = np.array(ns, dtype=np.int64)
    coeffs = np.empty(ms.size, dtype=complex)
    for i, (m, n) in enumerate(zip(ms, ns)):
        basis = evaluate(ZernikePoly.basis(alpha, int(m), int(n)), (x1, x2))
        coeffs[i] = np.sum(w * values * np.conj(basis))
    coeffs /= mode_norm_sq_array(alpha, ms, ns)
    return ZernikePoly(alpha, ms, ns, coeffs)


def residual_norm_quadrature(f, p: ZernikePoly, rule: DiskQuadrature) -> float:
    """||f - p|| in the rule's weight, both sampled at the rule's nodes."""
    x1, x2, w = rule.nodes()
    diff = sample(f, x1, x2) - evaluate(p, (x1, x2))
    return float(np.sqrt(np.sum(w * np.abs(diff) ** 2)))


def commutator(p: ZernikePoly, N: int, direction=WirtingerDirection.Dzstar) -> ZernikePoly:
    """Truncate-then-differentiate minus differentiate-then-truncate, same parameter."""
    d = change_parameter(wirtinger_derivative(p, direction), p.alpha)
    d_trunc = change_parameter(wirtinger_derivative(truncate(p, N), direction), p.alpha)
    return truncate(d, N) - d_trunc


def commutator_norm_sq(p: ZernikePoly, N: int, direction=WirtingerDirection.Dzstar) -> float:
    return norm_sq(commutator(p, N, direction))


def commutator_norm_sq_diagonal(p: ZernikePoly, N: int,
                                direction=WirtingerDirection.Dzstar) -> float:
    """The same squared norm rebuilt from the derivative's degree-N and N+1 modes only.

    Each mode (i, N - i) is weighted by (i+a+1)(N-i+a+1) / ((a+1)(N+a+1)) and
    each mode (i, N + 1 - i) by i(N+1-i) / ((a+1)(N+a+2)). Both weights are
    symmetric under m <-> n, so the formula serves either direction.
    """
    a = p.alpha
    v = change_parameter(wirtinger_derivative(p, direction), a)
    deg = v.m + v.n
    i = v.m.astype(float)
    weight = np.zeros(v.m.size)
    on_n = deg == N
    on_n1 = deg == N + 1
    weight[on_n] = (i[on_n] + a + 1) * (N - i[on_n] + a + 1) / ((a + 1) * (N + a + 1))
    weight[on_n1] = i[on_n1] * (N + 1 - i[on_n1]) / ((a + 1) * (N + a + 2))
    sel = on_n | on_n1
    if not sel.any():
        return 0.0
    h = mode_norm_sq_array(a, v.m[sel], v.n[sel])
    return float(np.sum(weight[sel] * np.abs(v.c[sel]) ** 2 * h))
