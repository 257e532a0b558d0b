import os
import sys

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_poly(rng, alpha, max_degree, min_degree=0):
    from diskzernike import ZernikePoly

    degree = int(rng.integers(min_degree, max_degree + 1))
    ms, ns = [], []
    for d in range(degree + 1):
        for m in range(d + 1):
            ms.append(m)
            ns.append(d - m)
    c = rng.standard_normal(len(ms)) + 1j * rng.standard_normal(len(ms))
    return ZernikePoly(alpha, ms, ns, c)


def coeff_err(a, b):
    """Largest coefficient difference relative to the largest coefficient of ``b``."""
    d = a - b
    if d.is_zero():
        return 0.0
    return float(np.abs(d.c).max() / np.abs(b.c).max())
