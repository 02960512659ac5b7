# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse convolution over int64 coefficients.

Callers must guarantee that every partial sum fits in a signed 64-bit
integer; :mod:`blowup_series.kernels` performs that check.
"""

from libc.stdlib cimport malloc, calloc, free


def convolve(ea, ca, eb, cb, limit):
    cdef Py_ssize_t na = len(ea), nb = len(eb)
    cdef Py_ssize_t i, j, k
    cdef long long lo, hi, e, ai
    cdef long long *xa
    cdef long long *xb
    cdef long long *ya
    cdef long long *yb
    cdef long long *acc

    if na == 0 or nb == 0:
        return [], []
    lo = ea[0] + eb[0]
    hi = ea[na - 1] + eb[nb - 1]
    if limit is not None and hi >= limit:
        hi = limit - 1
    if hi < lo:
        return [], []

    xa = <long long *> malloc(na * sizeof(long long))
    ya = <long long *> malloc(na * sizeof(long long))
    xb = <long long *> malloc(nb * sizeof(long long))
    yb = <long long *> malloc(nb * sizeof(long long))
    acc = <long long *> calloc(hi - lo + 1, sizeof(long long))
    if not (xa and ya and xb and yb and acc):
        free(xa); free(ya); free(xb); free(yb); free(acc)
        raise MemoryError()
    try:
        for i in range(na):
            xa[i] = ea[i]
            ya[i] = ca[i]
        for j in range(nb):
            xb[j] = eb[j]
            yb[j] = cb[j]
        with nogil:
            for i in range(na):
                if xa[i] + xb[0] > hi:
                    break
                ai = ya[i]
                for j in range(nb):
                    e = xa[i] + xb[j]
                    if e > hi:
                        break
                    acc[e - lo] += ai * yb[j]
        exps = []
        coeffs = []
        for k in range(hi - lo + 1):
            if acc[k] != 0:
                exps.append(lo + k)
                coeffs.append(acc[k])
        return exps, coeffs
    finally:
        free(xa); free(ya); free(xb); free(yb); free(acc)
