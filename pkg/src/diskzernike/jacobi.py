"""Univariate Jacobi polynomials J_n^(a,b), normalized by J_n(1) = binom(n+a, n)."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import ParameterError
from .kernels import jacobi_eval_array
from .special import LogScaled, gamma_ratio, pochhammer


class UnsupportedParameterError(ParameterError):
    pass


class JacobiParams(NamedTuple):
    n: int
    a: float
    b: float

    def validate(self) -> "JacobiParams":
        if self.n < 0 or int(self.n) != self.n:
            raise ParameterError(f"degree must be a nonnegative integer, got {self.n!r}")
        if not (self.a > -1 and self.b > -1):
            raise ParameterError(f"Jacobi parameters must exceed -1, got ({self.a}, {self.b})")
        return self


def jacobi_eval(params: JacobiParams, t):
    """Evaluate J_n^(a,b) at ``t`` (scalar or array) by the three-term recurrence."""
    n, a, b = JacobiParams(*params).validate()
    out = jacobi_eval_array(int(n), float(a), float(b), np.asarray(t, dtype=float))
    if np.ndim(out) == 0:
        return float(out)
    return out


def jacobi_connection(n: int, source_a: float, target_a: float, b: float) -> np.ndarray:
    """Coefficients c_0..c_n with J_n^(source_a, b) = sum_k c_k J_k^(target_a, b).

    Raises :class:`UnsupportedParameterError` when ``target_a + b == -1``;
    the formula degenerates there and only its limit is meaningful.
    """
    JacobiParams(n, source_a, b).validate()
    JacobiParams(n, target_a, b).validate()
    if target_a + b == -1:
        raise UnsupportedParameterError("target_a + b = -1 is not supported")
    g, a = float(source_a), float(target_a)
    ab = a + b
    lead = pochhammer(b + 1, n) / pochhammer(ab + 2, n)
    out = np.zeros(n + 1)
    for k in range(n + 1):
        num = (
            pochhammer(g - a, n - k)
            * pochhammer(ab + 1, k)
            * LogScaled.from_float(ab + 2 * k + 1)
            * pochhammer(b + g + n + 1, k)
        )
        den = (
            gamma_ratio(n - k + 1, 1.0)
            * pochhammer(b + 1, k)
            * LogScaled.from_float(ab + 1)
            * pochhammer(ab + n + 2, k)
        )
        out[k] = float(lead * num / den)
    return out
