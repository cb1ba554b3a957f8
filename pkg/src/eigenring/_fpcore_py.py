"""Pure-python (numpy) mod-p matrix kernels.

Reference implementations of the two hot operations everything else is built
on. The compiled twin in ``_fpcore_cy`` must match these bit for bit; the
test suite and ``benchmarks/bench_kernels.py`` compare them.

Contract shared by both backends: inputs are 2-d C-contiguous ``int64``
arrays with entries already reduced into ``[0, p)``; outputs are new arrays
in the same form. ``p`` is a prime below 2**20, which keeps every
accumulation well inside int64 range.
"""

import numpy as np


def matmul(a, b, p):
    """Return a @ b reduced mod p."""
    return (a @ b) % p


def rref(a, p):
    """Reduced row echelon form of ``a`` mod p.

    Returns ``(r, pivots)`` where ``r`` is a fresh array in RREF and
    ``pivots`` is the list of pivot column indices. Pivot choice is the
    first row with a nonzero entry in the current column, so the result is
    the canonical RREF of the row space.
    """
    m = a.copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        if inv != 1:
            m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots
