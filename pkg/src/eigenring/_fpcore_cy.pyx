# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p matrix kernels.

Same contract as ``_fpcore_py`` (the reference implementation): int64
C-contiguous inputs reduced into [0, p), p prime below 2**20, identical
outputs including pivot order.
"""

import numpy as np

ctypedef long long i64


cdef inline i64 _modinv(i64 a, i64 p) noexcept:
    # Fermat: a**(p-2) mod p.
    cdef i64 result = 1
    cdef i64 base = a % p
    cdef i64 e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def matmul(a, b, i64 p):
    """Return a @ b reduced mod p."""
    cdef const i64[:, ::1] av = a
    cdef const i64[:, ::1] bv = b
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t k = av.shape[1]
    cdef Py_ssize_t m = bv.shape[1]
    out_arr = np.zeros((n, m), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, t
    cdef i64 acc, aval
    for i in range(n):
        for t in range(k):
            aval = av[i, t]
            if aval == 0:
                continue
            for j in range(m):
                out[i, j] += aval * bv[t, j]
        for j in range(m):
            out[i, j] %= p
    return out_arr


def rref(a, i64 p):
    """Reduced row echelon form mod p; returns (array, pivot column list)."""
    m_arr = np.array(a, dtype=np.int64)
    cdef i64[:, ::1] m = m_arr
    cdef Py_ssize_t rows = m.shape[0]
    cdef Py_ssize_t cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j
    cdef i64 inv, factor, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        for i in range(r, rows):
            if m[i, c] != 0:
                break
        else:
            continue
        if i != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[i, j]
                m[i, j] = tmp
        inv = _modinv(m[r, c], p)
        if inv != 1:
            for j in range(cols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            factor = m[i, c]
            if factor == 0:
                continue
            for j in range(cols):
                m[i, j] = (m[i, j] - factor * m[r, j]) % p
                if m[i, j] < 0:
                    m[i, j] += p
        pivots.append(c)
        r += 1
    return m_arr, pivots
