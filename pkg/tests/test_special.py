import math

import mpmath as mp
import numpy as np
import pytest

from diskzernike.errors import ArgumentError, DomainError
from diskzernike.special import (
    ONE,
    ZERO,
    LogScaled,
    gamma_ratio,
    log_gamma_ratio,
    log_gamma_ratio_array,
    log_gamma_shift,
    log_gamma_shift_array,
    pochhammer,
)


def mp_log_ratio(a, b):
    with mp.workdps(50):
        return float(mp.loggamma(mp.mpf(a)) - mp.loggamma(mp.mpf(b)))


@pytest.mark.parametrize("a, b", [
    (0.3, 0.7), (1.0, 1.5), (19.5, 20.5), (21.0, 10.9), (501.0, 500.0),
    (1e4 + 0.5, 1e4), (4107.0, 4116.9), (1e6, 1e6 + 9.9), (3.25, 0.001),
])
def test_log_gamma_ratio_against_mpmath(a, b):
    want = mp_log_ratio(a, b)
    got = log_gamma_ratio(a, b)
    assert abs(got - want) <= 1e-14 * max(1.0, abs(want))


@pytest.mark.parametrize("x, d", [(4103.0, 9.9), (1.0, 9.9), (0.25, -0.2), (3.0, 0.5),
                                  (1e5, 1e-3), (8200.9, 3.0), (19.7, -0.4)])
def test_log_gamma_shift_uses_exact_shift(x, d):
    with mp.workdps(50):
        want = float(mp.loggamma(mp.mpf(x) + mp.mpf(d)) - mp.loggamma(mp.mpf(x)))
    assert log_gamma_shift(x, d) == pytest.approx(want, rel=1e-14, abs=1e-14)
    assert log_gamma_shift_array([x], [d])[0] == pytest.approx(want, rel=1e-14, abs=1e-14)


def test_gamma_ratio_keeps_relative_accuracy_for_close_arguments():
    # Gamma(a + 1) / Gamma(a) = a exactly
    for a in [0.5, 7.0, 500.0, 123456.5]:
        assert float(gamma_ratio(a + 1, a)) == pytest.approx(a, rel=1e-13)


def test_array_version_matches_scalar(rng):
    a = rng.uniform(0.01, 3000, 200)
    b = a + rng.uniform(-0.009, 20, 200)
    got = log_gamma_ratio_array(a, b)
    want = np.array([log_gamma_ratio(x, y) for x, y in zip(a, b)])
    np.testing.assert_allclose(got, want, rtol=0, atol=1e-12)


def test_gamma_ratio_rejects_nonpositive():
    with pytest.raises(DomainError):
        gamma_ratio(-0.5, 1.0)
    with pytest.raises(DomainError):
        log_gamma_ratio_array([1.0, 0.0], [1.0, 1.0])


@pytest.mark.parametrize("a, k", [(3.5, 0), (3.5, 4), (-2.5, 3), (-2.5, 6), (-7.25, 2), (0.1, 30)])
def test_pochhammer_sign_and_magnitude(a, k):
    want = float(mp.rf(a, k))
    got = pochhammer(a, k)
    assert got.sign == np.sign(want)
    assert float(got) == pytest.approx(want, rel=1e-13)


def test_pochhammer_zero_factor():
    assert pochhammer(-3, 4) is ZERO or pochhammer(-3, 4).sign == 0
    assert pochhammer(-3, 3).sign != 0  # factors -3, -2, -1
    assert float(pochhammer(-3, 3)) == -6.0
    with pytest.raises(ArgumentError):
        pochhammer(1.0, -1)


def test_logscaled_arithmetic():
    x = LogScaled.from_float(-3.0)
    y = LogScaled.from_float(0.5)
    assert float(x * y) == pytest.approx(-1.5)
    assert float(x / y) == pytest.approx(-6.0)
    assert float(x ** 2) == pytest.approx(9.0)
    assert float(2.0 * y) == pytest.approx(1.0)
    assert float(ONE) == 1.0 and float(ZERO) == 0.0
    # magnitudes far outside double range survive products
    big = LogScaled(1, 2000.0)
    assert float(big * LogScaled(1, -1999.0)) == pytest.approx(math.e)
