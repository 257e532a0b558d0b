"""Changes of weight parameter between Zernike families.

Lowering the parameter (``gamma < alpha``) is the common case: every
connection coefficient is then positive, so the expansion is a sum of
positive terms per mode and stays accurate at very high degree. Raising by
an integer amount should go through :func:`raise_parameter_one`, which only
ever combines two neighbouring modes; :func:`change_parameter` with
``gamma > alpha`` has alternating coefficients and loses accuracy beyond
degree of a few hundred.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .core import ZernikePoly, check_alpha
from .kernels import connection_terms
from .special import log_gamma_shift_array, pochhammer


class WirtingerDirection(Enum):
    """``Dz`` is d/dz = (d1 - i d2)/2, ``Dzstar`` is d/dz* = (d1 + i d2)/2."""

    Dz = "dz"
    Dzstar = "dzstar"


def _log_leading_coefficient(m, n, src: float, dst: float) -> np.ndarray:
    # k = 0 connection coefficient as four gamma ratios with offset dst - src
    m = np.asarray(m, dtype=float)
    n = np.asarray(n, dtype=float)
    s = m + n
    g = dst - src
    return (
        -log_gamma_shift_array(np.full(m.shape, src + 1), g)
        + log_gamma_shift_array(src + m + 1, g)
        + log_gamma_shift_array(src + n + 1, g)
        - log_gamma_shift_array(src + s + 1, g)
    )


def connection_coefficients(alpha: float, gamma: float, m: int, n: int) -> np.ndarray:
    """Coefficients C_k with P[alpha]_{m,n} = sum_k C_k P[gamma]_{m-k,n-k}."""
    alpha, gamma = check_alpha(alpha), check_alpha(gamma)
    mm = np.array([m], dtype=np.int64)
    nn = np.array([n], dtype=np.int64)
    _, _, c = connection_terms(mm, nn, np.ones(1, complex),
                               _log_leading_coefficient(mm, nn, alpha, gamma), alpha, gamma)
    return c.real.copy()


def change_parameter(p: ZernikePoly, gamma: float) -> ZernikePoly:
    """Re-expand ``p`` in the parameter-``gamma`` family (same function)."""
    gamma = check_alpha(gamma)
    if gamma == p.alpha:
        return p
    if p.is_zero():
        return ZernikePoly.zero(gamma)
    logc0 = _log_leading_coefficient(p.m, p.n, p.alpha, gamma)
    m, n, c = connection_terms(p.m, p.n, p.c, logc0, p.alpha, gamma)
    return ZernikePoly(gamma, m, n, c)


def raise_parameter_one(p: ZernikePoly) -> ZernikePoly:
    """Re-expand ``p`` in the parameter ``alpha + 1`` family.

    Each mode splits into itself and its diagonal predecessor.
    """
    a = p.alpha
    m = p.m.astype(float)
    n = p.n.astype(float)
    s = m + n + a + 1
    keep = p.c * ((m + a + 1) * (n + a + 1) / ((a + 1) * s))
    down = -p.c * (m * n / ((a + 1) * s))
    lower = (p.m > 0) & (p.n > 0)
    return ZernikePoly(
        a + 1,
        np.concatenate([p.m, p.m[lower] - 1]),
        np.concatenate([p.n, p.n[lower] - 1]),
        np.concatenate([keep, down[lower]]),
    )


def to_parameter(p: ZernikePoly, gamma: float) -> ZernikePoly:
    """Change parameter by the most stable route available.

    Integer raises iterate :func:`raise_parameter_one`; everything else uses
    the direct connection expansion.
    """
    gamma = check_alpha(gamma)
    steps = gamma - p.alpha
    if steps == 0:
        return p
    if steps > 0 and steps == int(steps):
        for _ in range(int(steps)):
            p = raise_parameter_one(p)
        return p
    return change_parameter(p, gamma)


def reflect(p: ZernikePoly) -> ZernikePoly:
    """Coefficients of ``p(x1, -x2)``: modes (m, n) become (n, m)."""
    return ZernikePoly(p.alpha, p.n, p.m, p.c)


def _ratio(x: float, alpha: float, k: int) -> float:
    return float(pochhammer(x + 1, k) / pochhammer(x + alpha + 1, k))


def derivative_coeffs(p: ZernikePoly, direction: WirtingerDirection) -> ZernikePoly:
    """Wirtinger derivative of ``p`` expanded in the same parameter family.

    Works mode by mode from the finite sums expressing derivative coefficients
    through the coefficients of ``p``; independent of :func:`change_parameter`.
    """
    direction = WirtingerDirection(direction)
    a = p.alpha
    out = {}
    for M, N, u in zip(p.m.tolist(), p.n.tolist(), p.c.tolist()):
        if direction is WirtingerDirection.Dzstar:
            if N == 0:
                continue
            # contributes to (M - l, N - 1 - l)
            for l in range(min(M, N - 1) + 1):
                m, n = M - l, N - 1 - l
                w = (m + n + a + 1) * _ratio(m, a, l) * _ratio(n, a, l + 1)
                out[(m, n)] = out.get((m, n), 0j) + w * u
        else:
            if M == 0:
                continue
            for l in range(min(M - 1, N) + 1):
                m, n = M - 1 - l, N - l
                w = (m + n + a + 1) * _ratio(m, a, l + 1) * _ratio(n, a, l)
                out[(m, n)] = out.get((m, n), 0j) + w * u
    if not out:
        return ZernikePoly.zero(a)
    keys = list(out)
    return ZernikePoly(a, [k[0] for k in keys], [k[1] for k in keys], list(out.values()))


def monomial_expansion(alpha: float, a: int, b: int) -> ZernikePoly:
    """Expansion of ``z**a * conj(z)**b`` in the parameter-``alpha`` family.

    Every coefficient is positive.
    """
    alpha = check_alpha(alpha)
    lg = math.lgamma
    base = lg(a + 1) + lg(b + 1) - lg(alpha + 1)
    ks = np.arange(min(a, b) + 1)
    logc = np.array([
        base - lg(k + 1)
        + lg(alpha + a - k + 1) + lg(alpha + b - k + 1)
        + math.log(alpha + a + b - 2 * k + 1)
        - lg(a - k + 1) - lg(b - k + 1) - lg(alpha + a + b - k + 2)
        for k in ks
    ])
    return ZernikePoly(alpha, a - ks, b - ks, np.exp(logc))


def series_expansion(alpha: float, weight, max_degree: int) -> ZernikePoly:
    """Zernike expansion of ``sum_{a+b <= max_degree} weight(a, b) z^a conj(z)^b``."""
    alpha = check_alpha(alpha)
    ms, ns, cs = [], [], []
    for d in range(max_degree + 1):
        for a in range(d + 1):
            w = weight(a, d - a)
            if w == 0:
                continue
            mono = monomial_expansion(alpha, a, d - a)
            ms.append(mono.m)
            ns.append(mono.n)
            cs.append(w * mono.c)
    if not ms:
        return ZernikePoly.zero(alpha)
    return ZernikePoly(alpha, np.concatenate(ms), np.concatenate(ns), np.concatenate(cs))
