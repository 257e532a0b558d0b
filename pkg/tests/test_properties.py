"""Property-based checks over random expansions."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from diskzernike import (
    WirtingerDirection,
    ZernikePoly,
    change_parameter,
    evaluate,
    norm_sq,
    truncate,
    wirtinger_derivative,
)
from diskzernike.calculus import l2_inner_product

alphas = st.floats(min_value=-0.9, max_value=10.0, allow_nan=False)
coeff = st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def polys(draw, alpha=None, max_degree=8):
    a = draw(alphas) if alpha is None else alpha
    modes = draw(st.lists(st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)),
                          min_size=1, max_size=10))
    cs = draw(st.lists(coeff, min_size=len(modes), max_size=len(modes)))
    return ZernikePoly(a, [m for m, _ in modes], [n for _, n in modes], cs)


@st.composite
def pairs(draw):
    a = draw(alphas)
    return draw(polys(alpha=a)), draw(polys(alpha=a))


POINTS = (np.array([0.0, 0.3, -0.7, 0.5, 0.99]), np.array([0.0, -0.4, 0.1, 0.5, 0.0]))


def _close(a, b, scale):
    np.testing.assert_allclose(a, b, rtol=0, atol=1e-11 * max(scale, 1.0))


@given(pairs(), coeff)
def test_evaluation_is_linear(pq, s):
    p, q = pq
    lhs = evaluate(p + s * q, POINTS)
    rhs = evaluate(p, POINTS) + s * evaluate(q, POINTS)
    _close(lhs, rhs, np.abs(rhs).max() + abs(s) * np.abs(evaluate(q, POINTS)).max())


@given(pairs(), coeff, st.sampled_from(list(WirtingerDirection)))
def test_derivative_is_linear(pq, s, direction):
    p, q = pq
    lhs = wirtinger_derivative(p + s * q, direction)
    rhs = wirtinger_derivative(p, direction) + s * wirtinger_derivative(q, direction)
    diff = lhs - rhs
    scale = max(np.abs(lhs.c).max(initial=0), np.abs(rhs.c).max(initial=0), 1.0)
    assert diff.is_zero() or np.abs(diff.c).max() <= 1e-12 * scale


@given(polys(max_degree=6), st.floats(min_value=0.0, max_value=1.0))
def test_change_parameter_preserves_values(p, step):
    q = change_parameter(p, p.alpha + step)
    a, b = evaluate(p, POINTS), evaluate(q, POINTS)
    scale = sum(abs(c) * np.abs(evaluate(ZernikePoly.basis(q.alpha, m, n), POINTS)).max()
                for m, n, c in zip(q.m, q.n, q.c))
    _close(a, b, scale)


@given(polys())
def test_norm_is_positive(p):
    n = norm_sq(p)
    assert n >= 0
    if p.is_zero():
        assert n == 0
    elif np.abs(p.c).max() > 1e-100:
        # below that |c|^2 h can underflow to zero in binary64
        assert n > 0


@given(pairs())
def test_inner_product_hermitian(pq):
    p, q = pq
    a = l2_inner_product(p, q)
    b = l2_inner_product(q, p)
    assert a == pytest.approx(np.conj(b), rel=1e-12, abs=1e-12 * np.sqrt(norm_sq(p) * norm_sq(q)))
    assert abs(a) ** 2 <= norm_sq(p) * norm_sq(q) * (1 + 1e-12)


@given(polys(), st.integers(0, 10))
def test_truncation_is_orthogonal_projection(p, N):
    t = truncate(p, N)
    assert norm_sq(t) <= norm_sq(p) * (1 + 1e-14)
    assert norm_sq(p - t) + norm_sq(t) == pytest.approx(norm_sq(p), rel=1e-12)
    assert truncate(t, N) == t
