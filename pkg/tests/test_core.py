import math

import numpy as np
import pytest

import oracles
from conftest import random_poly
from diskzernike import (
    ModeIndex,
    ZernikePoly,
    eigenvalue,
    evaluate,
    linear_combine,
    make_poly,
    mode_norm_sq,
)
from diskzernike.core import mode_norm_sq_array
from diskzernike.errors import ConstructionError, ParameterError, ParameterMismatchError
from diskzernike.quadrature import integrate, rule_for_degree


def test_make_poly_basics():
    one = make_poly(0, [((0, 0), 1)])
    assert one.coeffs == {(0, 0): 1}
    assert evaluate(one, (0.3, -0.2)) == 1
    zero = make_poly(0, [])
    assert zero.is_zero() and zero.degree == 0
    p = make_poly(-0.5, [((2, 1), 3 + 1j)])
    assert p[(2, 1)] == 3 + 1j and p.degree == 3
    assert ModeIndex(2, 1).angular_order == 1 and ModeIndex(2, 1).radial_index == 1


def test_make_poly_errors():
    with pytest.raises(ParameterError):
        make_poly(-1.0, [((0, 0), 1)])
    with pytest.raises(ConstructionError):
        make_poly(0, [((1, 0), 1), ((1, 0), 2)])
    with pytest.raises(ConstructionError):
        make_poly(0, [((-1, 0), 1)])


def test_canonical_storage():
    p = ZernikePoly(0.5, [2, 0, 1, 0], [0, 0, 1, 0], [1.0, 2.0, 0.0, 3.0])
    # duplicates merged, zeros dropped, sorted by degree then m
    assert list(zip(p.m.tolist(), p.n.tolist())) == [(0, 0), (2, 0)]
    assert p[(0, 0)] == 5.0
    with pytest.raises(ValueError):
        p.c[0] = 1.0


def test_linear_combine():
    p = ZernikePoly.basis(1.0, 1, 0)
    q = ZernikePoly.basis(1.0, 0, 1)
    assert linear_combine([(1, p), (0, q)]) == p
    assert linear_combine([(1, p), (-1, p)]).is_zero()
    r = linear_combine([(2, p), (3, q)])
    assert r.coeffs == {(1, 0): 2, (0, 1): 3}
    with pytest.raises(ParameterMismatchError):
        linear_combine([(1, p), (1, ZernikePoly.basis(0.0, 1, 0))])


def test_evaluate_low_modes():
    for alpha in (-0.5, 0.0, 9.9):
        assert evaluate(ZernikePoly.basis(alpha, 0, 0), (0.2, 0.7)) == pytest.approx(1)
        assert evaluate(ZernikePoly.basis(alpha, 1, 0), (0.2, 0.7)) == pytest.approx(0.2 + 0.7j)
        assert evaluate(ZernikePoly.basis(alpha, 0, 1), (0.2, 0.7)) == pytest.approx(0.2 - 0.7j)
    assert evaluate(ZernikePoly.basis(0, 1, 1), (0.5, 0.0)) == pytest.approx(-0.5)


def test_evaluate_against_monomial_oracle(rng):
    for alpha in (-0.5, 0.0, 2.25, 9.9):
        for m, n in [(3, 1), (0, 5), (4, 4), (7, 2)]:
            ref = oracles.basis(alpha, m, n)
            for _ in range(4):
                r, th = math.sqrt(rng.uniform()), rng.uniform(0, 2 * np.pi)
                x1, x2 = r * math.cos(th), r * math.sin(th)
                want = complex(oracles.evaluate(ref, x1, x2))
                got = evaluate(ZernikePoly.basis(alpha, m, n), (x1, x2))
                assert abs(got - want) <= 1e-12 * max(1, abs(want))


def test_evaluate_vectorized_and_linear(rng):
    p = random_poly(rng, 1.5, 6)
    q = random_poly(rng, 1.5, 6)
    x1 = rng.uniform(-0.7, 0.7, 15)
    x2 = rng.uniform(-0.7, 0.7, 15)
    combo = evaluate(linear_combine([(2 - 1j, p), (0.5, q)]), (x1, x2))
    np.testing.assert_allclose(combo, (2 - 1j) * p(x1, x2) + 0.5 * q(x1, x2), rtol=1e-12)
    scalar = np.array([evaluate(p, (a, b)) for a, b in zip(x1, x2)])
    np.testing.assert_allclose(p(x1, x2), scalar, rtol=1e-14)
    assert evaluate(p, (0.0, 0.0)) == pytest.approx(sum(
        v * evaluate(ZernikePoly.basis(1.5, k.m, k.n), (0, 0)) for k, v in p.coeffs.items()))


def test_mode_norms():
    assert mode_norm_sq(0, 0, 0) == pytest.approx(math.pi)
    assert mode_norm_sq(2.5, 0, 0) == pytest.approx(math.pi / 3.5)
    assert mode_norm_sq(0, 2, 3) == pytest.approx(math.pi / 6)
    assert mode_norm_sq(9.9, 3, 7) == mode_norm_sq(9.9, 7, 3)
    with pytest.raises(ParameterError):
        mode_norm_sq(-1, 0, 0)
    m = np.array([0, 3, 50, 4000])
    n = np.array([0, 1, 49, 4001])
    np.testing.assert_allclose(mode_norm_sq_array(9.9, m, n),
                               [mode_norm_sq(9.9, a, b) for a, b in zip(m, n)], rtol=1e-13)


def test_mode_norms_against_monomial_oracle():
    for alpha in (-0.5, 0.0, 9.9):
        for m, n in [(0, 0), (2, 1), (3, 3), (0, 6)]:
            want = float(oracles.norm_sq(oracles.basis(alpha, m, n), alpha))
            assert mode_norm_sq(alpha, m, n) == pytest.approx(want, rel=1e-13)


def test_orthogonality_by_quadrature():
    for alpha in (0.0, -0.5, 9.9):
        rule = rule_for_degree(alpha, 12)
        modes = [(m, d - m) for d in range(7) for m in range(d + 1)]
        for i, (m, n) in enumerate(modes):
            P = ZernikePoly.basis(alpha, m, n)
            hh = integrate(lambda x1, x2: np.abs(P(x1, x2)) ** 2, rule).real
            assert hh == pytest.approx(mode_norm_sq(alpha, m, n), rel=1e-10)
            for m2, n2 in modes[i + 1:]:
                Q = ZernikePoly.basis(alpha, m2, n2)
                val = integrate(lambda x1, x2: P(x1, x2) * np.conj(Q(x1, x2)), rule)
                assert abs(val) < 1e-10


def test_eigenvalue():
    assert eigenvalue(0.7, 0, 0) == 0
    assert eigenvalue(0, 1, 0) == 3
    assert eigenvalue(9.9, 2, 1) == pytest.approx(74.4)


def test_scalar_arithmetic():
    p = ZernikePoly.basis(0.0, 2, 1, 2.0)
    assert (3 * p)[(2, 1)] == 6.0
    assert (-p)[(2, 1)] == -2.0
    assert (p - p).is_zero()
    with pytest.raises(TypeError):
        p * p
