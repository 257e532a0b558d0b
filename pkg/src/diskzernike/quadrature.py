"""Tensor quadrature on the unit disk for the weight (1 - |x|^2)**alpha.

With s = 2 r^2 - 1 the weighted disk integral becomes

    int_B f rho^alpha = 2**(-alpha-2) int_0^{2 pi} int_{-1}^{1} f (1 - s)**alpha ds dtheta,

so a Gauss-Jacobi rule in s (weight (1-s)^alpha) times the equispaced
trapezoid rule in theta handles the weight exactly. Nothing here uses the
closed-form norms of the basis, which keeps the rule usable as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, check_alpha
from .kernels import jacobi_eval_array
from .special import log_gamma_shift

NEWTON_TOL = 1e-14
NEWTON_MAXITER = 100


def _jacobi_and_derivative(n: int, a: float, b: float, x: float):
    p = float(jacobi_eval_array(n, a, b, np.array([x]))[0])
    if n == 0:
        return p, 0.0
    dp = 0.5 * (n + a + b + 1) * float(jacobi_eval_array(n - 1, a + 1, b + 1, np.array([x]))[0])
    return p, dp


def gauss_jacobi(n: int, a: float, b: float = 0.0):
    """Nodes and weights of the n-point Gauss rule for (1-s)^a (1+s)^b on [-1, 1].

    Newton iteration with deflation against the roots already found, started
    from Chebyshev points.
    """
    if n < 1:
        raise ArgumentError("need at least one node")
    roots = []
    for k in range(n):
        x = -math.cos((2 * k + 1) * math.pi / (2 * n))
        if k > 0:
            x = 0.5 * (x + roots[-1])
        for _ in range(NEWTON_MAXITER):
            p, dp = _jacobi_and_derivative(n, a, b, x)
            s = sum(1.0 / (x - r) for r in roots)
            delta = p / (dp - p * s)
            x -= delta
            if abs(delta) < NEWTON_TOL:
                break
        roots.append(x)
    x = np.array(sorted(roots))
    logc = (
        (a + b + 1) * math.log(2)
        + log_gamma_shift(n + 1, a)
        - log_gamma_shift(n + b + 1, a)
    )
    dp = np.array([_jacobi_and_derivative(n, a, b, xi)[1] for xi in x])
    w = math.exp(logc) / ((1 - x * x) * dp * dp)
    return x, w


@dataclass(frozen=True)
class DiskQuadrature:
    """Product rule: Gauss-Jacobi in s = 2r^2 - 1 times equispaced angles.

    ``radial_exactness`` is the polynomial degree in s integrated exactly,
    ``angular_exactness`` the largest |j| with e^{ij theta} integrated exactly.
    """

    alpha: float
    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    angular_count: int

    @property
    def radial_exactness(self) -> int:
        return 2 * len(self.radial_nodes) - 1

    @property
    def angular_exactness(self) -> int:
        return self.angular_count - 1

    @property
    def polynomial_exactness(self) -> int:
        """Largest total degree D such that every degree-D polynomial times the weight is exact.

        A degree-D polynomial has angular frequencies |j| <= D and, after the
        angular sum, a radial part of degree floor(D/2) in s.
        """
        return min(self.angular_exactness, 2 * self.radial_exactness + 1)

    def nodes(self):
        """Flattened ``(x1, x2, w)`` including the 2**(-alpha-2) Jacobian."""
        r = np.sqrt((1 + self.radial_nodes) / 2)
        theta = 2 * np.pi * np.arange(self.angular_count) / self.angular_count
        rr, tt = np.meshgrid(r, theta, indexing="ij")
        w = np.outer(self.radial_weights, np.full(self.angular_count, 2 * np.pi / self.angular_count))
        w = w * 2.0 ** (-self.alpha - 2)
        return (rr * np.cos(tt)).ravel(), (rr * np.sin(tt)).ravel(), w.ravel()


def disk_rule(alpha: float, n_rad: int, n_ang: int) -> DiskQuadrature:
    alpha = check_alpha(alpha)
    if n_rad < 1 or n_ang < 1:
        raise ArgumentError("node counts must be positive")
    s, w = gauss_jacobi(n_rad, alpha, 0.0)
    return DiskQuadrature(alpha, s, w, int(n_ang))


def rule_for_degree(alpha: float, degree: int) -> DiskQuadrature:
    """Smallest rule exact for weighted polynomials of total degree ``degree``."""
    n_rad = max(1, (degree // 2 + 2) // 2)
    return disk_rule(alpha, n_rad, degree + 1)


def integrate(f, rule: DiskQuadrature) -> complex:
    """Apply ``rule`` to ``f(x1, x2)``.

    ``f`` is first called once with node arrays; if it does not return an
    array of matching shape it is called point by point.
    """
    x1, x2, w = rule.nodes()
    return complex(np.sum(w * sample(f, x1, x2)))


def sample(f, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
    """``f`` at the given nodes, vectorized when ``f`` supports it."""
    try:
        values = np.asarray(f(x1, x2), dtype=complex)
    except (TypeError, ValueError):
        values = None
    if values is None or values.shape != x1.shape:
        values = np.array([complex(f(a, b)) for a, b in zip(x1, x2)])
    return values
