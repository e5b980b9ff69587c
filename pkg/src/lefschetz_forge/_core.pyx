# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: in-place reduced row echelon form over GF(p).

The single hot loop of the package.  Entries must already be reduced to
[0, p) and the array must be C-contiguous int64.  p*p + p must fit in
int64, which the callers guarantee (p <= 2**20).
"""

import numpy as np

cimport numpy as cnp


def rref_mod(cnp.int64_t[:, ::1] a, long long p):
    """Reduce ``a`` in place to RREF mod p; return the list of pivot columns."""
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t i, j, col, piv
    cdef long long inv, factor, tmp
    pivots = []
    for col in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inverse(a[r, col], p)
        if inv != 1:
            for j in range(col, n):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            if i != r and a[i, col] != 0:
                factor = p - a[i, col]
                for j in range(col, n):
                    if a[r, j] != 0:
                        a[i, j] = (a[i, j] + factor * a[r, j]) % p
        pivots.append(col)
        r += 1
    return pivots


cdef long long _inverse(long long v, long long p):
    # Fermat: v^(p-2) mod p by square-and-multiply.
    cdef long long result = 1
    cdef long long base = v % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
