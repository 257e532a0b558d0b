"""Value types for Zernike expansions on the unit disk and log-domain scalar kernels.

A :class:`ZernikePoly` is a finite expansion ``sum c[m, n] * P[alpha]_{m,n}``
in the generalized Zernike basis orthogonal under ``(1 - |x|^2)**alpha``.
Coefficients live in three parallel numpy arrays sorted by (degree, m), so
the heavy operations elsewhere in the package can work on whole arrays.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import (
    ArgumentError,
    ConstructionError,
    ParameterMismatchError,
    check_alpha,
)
from .jacobi import jacobi_eval_array
from .special import (
    gamma_ratio,
    log_gamma_shift,
    log_gamma_shift_array,
    pochhammer,
)


# --------------------------------------------------------------------------
# Modes and polynomials
# --------------------------------------------------------------------------


class ModeIndex(NamedTuple):
    m: int
    n: int

    @property
    def degree(self) -> int:
        return self.m + self.n

    @property
    def angular_order(self) -> int:
        return self.m - self.n

    @property
    def radial_index(self) -> int:
        return min(self.m, self.n)


def _mode(key) -> ModeIndex:
    m, n = key
    if int(m) != m or int(n) != n:
        raise ConstructionError(f"mode indices must be integers, got {key!r}")
    if m < 0 or n < 0:
        raise ConstructionError(f"mode indices must be nonnegative, got {key!r}")
    return ModeIndex(int(m), int(n))


class ZernikePoly:
    """Finite Zernike expansion with weight parameter ``alpha``.

    Instances are immutable. ``m``, ``n`` and ``c`` are read-only arrays of
    equal length holding distinct modes in canonical order and their nonzero
    complex coefficients.
    """

    __slots__ = ("alpha", "m", "n", "c", "_dict")

    def __init__(self, alpha: float, m, n, c, *, _canonical: bool = False):
        self.alpha = check_alpha(alpha)
        m = np.asarray(m, dtype=np.int64).ravel()
        n = np.asarray(n, dtype=np.int64).ravel()
        c = np.asarray(c, dtype=np.complex128).ravel()
        if not (m.shape == n.shape == c.shape):
            raise ConstructionError("m, n and c must have equal lengths")
        if not _canonical:
            if m.size and (m.min() < 0 or n.min() < 0):
                raise ConstructionError("mode indices must be nonnegative")
            m, n, c = _merge(m, n, c)
        for arr in (m, n, c):
            arr.setflags(write=False)
        self.m = m
        self.n = n
        self.c = c
        self._dict = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, alpha: float) -> "ZernikePoly":
        return cls(alpha, [], [], [], _canonical=True)

    @classmethod
    def basis(cls, alpha: float, m: int, n: int, coeff: complex = 1.0) -> "ZernikePoly":
        """The single-mode polynomial ``coeff * P[alpha]_{m,n}``."""
        return make_poly(alpha, [((m, n), coeff)])

    @classmethod
    def from_mapping(cls, alpha: float, coeffs: Mapping) -> "ZernikePoly":
        return make_poly(alpha, coeffs.items())

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        """Mapping ``ModeIndex -> complex`` (a fresh copy)."""
        if self._dict is None:
            self._dict = {
                ModeIndex(int(a), int(b)): complex(v)
                for a, b, v in zip(self.m, self.n, self.c)
            }
        return dict(self._dict)

    @property
    def degree(self) -> int:
        """Maximum total degree ``m + n``; 0 for the zero polynomial."""
        if self.m.size == 0:
            return 0
        return int((self.m + self.n).max())

    def is_zero(self) -> bool:
        return self.m.size == 0

    def __len__(self) -> int:
        return int(self.m.size)

    def __getitem__(self, key) -> complex:
        if self._dict is None:
            self.coeffs
        return self._dict.get(ModeIndex(*key), 0j)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __repr__(self) -> str:
        terms = ", ".join(f"({a},{b}): {v:.6g}" for (a, b), v in list(self.coeffs.items())[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"ZernikePoly(alpha={self.alpha:g}, {{{terms}{more}}})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZernikePoly):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and np.array_equal(self.m, other.m)
            and np.array_equal(self.n, other.n)
            and np.array_equal(self.c, other.c)
        )

    __hash__ = None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "ZernikePoly") -> "ZernikePoly":
        return linear_combine([(1.0, self), (1.0, other)])

    def __sub__(self, other: "ZernikePoly") -> "ZernikePoly":
        return linear_combine([(1.0, self), (-1.0, other)])

    def __neg__(self) -> "ZernikePoly":
        return ZernikePoly(self.alpha, self.m, self.n, -self.c, _canonical=True)

    def __mul__(self, scalar: complex) -> "ZernikePoly":
        if isinstance(scalar, ZernikePoly):
            raise TypeError("products of Zernike polynomials are not supported")
        return linear_combine([(scalar, self)])

    __rmul__ = __mul__

    def __call__(self, x1, x2):
        return evaluate(self, (x1, x2))

    def with_coeffs(self, c) -> "ZernikePoly":
        """Same modes, new coefficient array (re-canonicalized)."""
        return ZernikePoly(self.alpha, self.m, self.n, c)


def _merge(m: np.ndarray, n: np.ndarray, c: np.ndarray):
    """Sort by (degree, m), sum duplicate modes, drop exact zeros."""
    if m.size == 0:
        return m.copy(), n.copy(), c.copy()
    order = np.lexsort((m, m + n))
    m, n, c = m[order], n[order], c[order]
    new = np.ones(m.size, dtype=bool)
    new[1:] = (m[1:] != m[:-1]) | (n[1:] != n[:-1])
    if not new.all():
        starts = np.flatnonzero(new)
        c = np.add.reduceat(c, starts)
        m, n = m[starts], n[starts]
    keep = c != 0
    if not keep.all():
        m, n, c = m[keep], n[keep], c[keep]
    return m, n, c


def make_poly(alpha: float, entries: Iterable) -> ZernikePoly:
    """Build a polynomial from ``((m, n), coeff)`` pairs; duplicates are rejected."""
    alpha = check_alpha(alpha)
    seen = set()
    ms, ns, cs = [], [], []
    for key, value in entries:
        mode = _mode(key)
        if mode in seen:
            raise ConstructionError(f"duplicate mode {tuple(mode)}")
        seen.add(mode)
        ms.append(mode.m)
        ns.append(mode.n)
        cs.append(complex(value))
    return ZernikePoly(alpha, ms, ns, cs)


def linear_combine(terms) -> ZernikePoly:
    """Coefficient-wise ``sum a_i * p_i`` over ``(a_i, p_i)`` pairs."""
    terms = list(terms)
    if not terms:
        raise ArgumentError("linear_combine needs at least one term")
    alpha = terms[0][1].alpha
    for _, p in terms:
        if p.alpha != alpha:
            raise ParameterMismatchError(
                f"cannot combine parameters {alpha!r} and {p.alpha!r}"
            )
    m = np.concatenate([p.m for _, p in terms])
    n = np.concatenate([p.n for _, p in terms])
    c = np.concatenate([complex(a) * p.c for a, p in terms])
    return ZernikePoly(alpha, m, n, c)


# --------------------------------------------------------------------------
# Pointwise evaluation and mode constants
# --------------------------------------------------------------------------


def basis_prefactor(alpha: float, k: int) -> float:
    """Gamma(k+1) Gamma(alpha+1) / Gamma(k+alpha+1) = k! / (alpha+1)_k."""
    return float(gamma_ratio(k + 1, 1.0) / pochhammer(alpha + 1, k))


def evaluate(p: ZernikePoly, point):
    """Evaluate ``p`` at ``point = (x1, x2)``; scalars or broadcastable arrays.

    Points outside the closed unit disk are accepted and simply extrapolate
    the polynomial.
    """
    x1 = np.asarray(point[0], dtype=float)
    x2 = np.asarray(point[1], dtype=float)
    x1, x2 = np.broadcast_arrays(x1, x2)
    z = x1 + 1j * x2
    s = 2.0 * (x1 * x1 + x2 * x2) - 1.0
    out = np.zeros(z.shape, dtype=np.complex128)
    flat_s = s.ravel()
    for m, n, c in zip(p.m, p.n, p.c):
        k = int(min(m, n))
        mu = int(m - n)
        radial = jacobi_eval_array(k, p.alpha, abs(mu), flat_s).reshape(s.shape)
        # r^|mu| e^{i mu theta} is z^mu or conj(z)^|mu|; no angle needed at 0
        angular = z ** mu if mu >= 0 else np.conj(z) ** (-mu)
        out += c * basis_prefactor(p.alpha, k) * angular * radial
    if out.ndim == 0:
        return complex(out)
    return out


def log_mode_norm_sq(alpha: float, m: int, n: int) -> float:
    """log of h[alpha]_{m,n}."""
    return (
        math.log(math.pi)
        + 2 * math.lgamma(alpha + 1)
        - math.log(m + n + alpha + 1)
        - log_gamma_shift(m + 1, alpha)
        - log_gamma_shift(n + 1, alpha)
    )


def mode_norm_sq(alpha: float, m: int, n: int) -> float:
    """Squared weighted L2 norm h[alpha]_{m,n} of a basis polynomial."""
    alpha = check_alpha(alpha)
    return math.exp(log_mode_norm_sq(alpha, int(m), int(n)))


def mode_norm_sq_array(alpha: float, m: np.ndarray, n: np.ndarray) -> np.ndarray:
    """Vectorized :func:`mode_norm_sq`."""
    alpha = check_alpha(alpha)
    m = np.asarray(m, dtype=float)
    n = np.asarray(n, dtype=float)
    logh = (
        math.log(math.pi)
        + 2 * math.lgamma(alpha + 1)
        - np.log(m + n + alpha + 1)
        - log_gamma_shift_array(m + 1, alpha)
        - log_gamma_shift_array(n + 1, alpha)
    )
    return np.exp(logh)


def eigenvalue(alpha: float, m: int, n: int) -> float:
    """lambda[alpha]_{m,n} = (m+n)(m+n+2+2 alpha)."""
    alpha = check_alpha(alpha)
    d = m + n
    return float(d * (d + 2 + 2 * alpha))
