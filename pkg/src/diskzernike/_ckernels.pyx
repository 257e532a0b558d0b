# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, log, fabs

cnp.import_array()

from ._pykernels import _recurrence


def jacobi_eval_array(int n, double a, double b, t):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tt = np.ascontiguousarray(t, dtype=np.float64).ravel()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty_like(tt)
    if n == 0:
        out[:] = 1.0
        return out.reshape(np.shape(t))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] A, B, C
    A, B, C = _recurrence(n, a, b)
    cdef Py_ssize_t i, k, steps = n - 1
    cdef double x, p0, p1, p2
    with nogil:
        for i in range(tt.shape[0]):
            x = tt[i]
            p0 = 1.0
            p1 = 0.5 * ((a + b + 2.0) * x + (a - b))
            for k in range(steps):
                p2 = (A[k] * x + B[k]) * p1 - C[k] * p0
                p0 = p1
                p1 = p2
            out[i] = p1
    return out.reshape(np.shape(t))


def connection_terms(m, n, c, logc0, double src, double dst):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] mm = np.ascontiguousarray(m, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nn = np.ascontiguousarray(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] cc = np.ascontiguousarray(c, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] l0 = np.ascontiguousarray(logc0, dtype=np.float64)
    cdef Py_ssize_t nmodes = mm.shape[0]
    cdef Py_ssize_t i, pos, total = 0
    cdef long k, kmax
    for i in range(nmodes):
        total += min(mm[i], nn[i]) + 1
    cdef cnp.ndarray[cnp.int64_t, ndim=1] mo = np.empty(total, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] no = np.empty(total, dtype=np.int64)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] co = np.empty(total, dtype=np.complex128)
    cdef double logmag, sgn, num, den, ratio, mf, nf, s, kf
    pos = 0
    with nogil:
        for i in range(nmodes):
            kmax = min(mm[i], nn[i])
            mf = <double> mm[i]
            nf = <double> nn[i]
            s = mf + nf
            logmag = l0[i]
            sgn = 1.0
            for k in range(kmax + 1):
                mo[pos] = mm[i] - k
                no[pos] = nn[i] - k
                if sgn == 0.0:
                    co[pos] = 0.0
                else:
                    co[pos] = cc[i] * (sgn * exp(logmag))
                pos += 1
                if k < kmax and sgn != 0.0:
                    kf = <double> k
                    num = ((src - dst + kf) * (mf - kf) * (nf - kf)
                           * (dst + s - kf + 1.0) * (dst + s - 2.0 * kf - 1.0))
                    den = ((kf + 1.0) * (src + s - kf) * (dst + mf - kf)
                           * (dst + nf - kf) * (dst + s - 2.0 * kf + 1.0))
                    ratio = num / den
                    if ratio == 0.0:
                        sgn = 0.0
                    else:
                        if ratio < 0.0:
                            sgn = -sgn
                        logmag += log(fabs(ratio))
    return mo, no, co
