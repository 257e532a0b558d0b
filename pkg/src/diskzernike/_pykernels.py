"""Pure numpy implementations of the hot kernels.

These mirror ``_ckernels.pyx`` exactly (same recurrences, same operation
order per term) and are used whenever the compiled extension is missing.
"""

import numpy as np


def _recurrence(n, a, b):
    # J_k = (A_k t + B_k) J_{k-1} - C_k J_{k-2} for k = 2..n
    k = np.arange(2, n + 1, dtype=np.float64)
    s = 2.0 * k + a + b
    c1 = 2.0 * k * (k + a + b) * (s - 2.0)
    A = (s - 1.0) * s * (s - 2.0) / c1
    B = (s - 1.0) * (a * a - b * b) / c1
    C = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s / c1
    return A, B, C


def jacobi_eval_array(n, a, b, t):
    """Jacobi polynomial J_n^(a,b) at the points ``t`` by three-term recurrence."""
    t = np.asarray(t, dtype=np.float64)
    p0 = np.ones_like(t)
    if n == 0:
        return p0
    p1 = 0.5 * ((a + b + 2.0) * t + (a - b))
    A, B, C = _recurrence(n, a, b)
    for i in range(n - 1):
        p0, p1 = p1, (A[i] * t + B[i]) * p1 - C[i] * p0
    return p1


def connection_terms(m, n, c, logc0, src, dst):
    """Expand each mode of a parameter-``src`` polynomial in the ``dst`` family.

    Mode ``(m_i, n_i)`` with coefficient ``c_i`` contributes
    ``c_i * C_{i,k}`` to mode ``(m_i - k, n_i - k)`` for ``k = 0..min(m_i, n_i)``.
    ``logc0`` holds ``log C_{i,0}``; later terms follow from the term ratio.
    Returns unmerged ``(m_out, n_out, c_out)`` arrays ordered by source mode,
    then by increasing k.
    """
    m = np.asarray(m, dtype=np.int64)
    n = np.asarray(n, dtype=np.int64)
    c = np.asarray(c, dtype=np.complex128)
    logc0 = np.asarray(logc0, dtype=np.float64)
    if m.size == 0:
        return m.copy(), n.copy(), c.copy()
    lengths = np.minimum(m, n) + 1
    width = int(lengths.max())
    k = np.arange(width - 1, dtype=np.float64)[None, :]
    mf = m.astype(np.float64)[:, None]
    nf = n.astype(np.float64)[:, None]
    s = mf + nf
    first = src - dst + k
    num = first * (mf - k) * (nf - k) * (dst + s - k + 1.0) * (dst + s - 2.0 * k - 1.0)
    den = (k + 1.0) * (src + s - k) * (dst + mf - k) * (dst + nf - k) * (dst + s - 2.0 * k + 1.0)
    valid = k < (lengths[:, None] - 1)
    ratio = np.where(valid, num / np.where(valid, den, 1.0), 1.0)
    logr = np.empty((m.size, width))
    logr[:, 0] = logc0
    sgn = np.ones((m.size, width))
    with np.errstate(divide="ignore"):
        logr[:, 1:] = np.log(np.abs(ratio))
    sgn[:, 1:] = np.sign(ratio)
    mag = np.exp(np.cumsum(logr, axis=1)) * np.cumprod(sgn, axis=1)
    mask = np.arange(width)[None, :] < lengths[:, None]
    kk = np.broadcast_to(np.arange(width)[None, :], mask.shape)[mask]
    rows = np.broadcast_to(np.arange(m.size)[:, None], mask.shape)[mask]
    return m[rows] - kk, n[rows] - kk, c[rows] * mag[mask]
