"""Pure-Python (numpy) fallback for the row-reduction kernel.

Same contract as the compiled version in ``_core.pyx``: reduce ``a`` in
place to RREF mod p and return the pivot columns.  Row updates are
vectorized; the outer loop runs once per pivot.
"""

from __future__ import annotations

import numpy as np


def rref_mod(a: np.ndarray, p: int) -> list[int]:
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for col in range(n):
        if r == m:
            break
        rows_below = a[r:, col]
        nz = np.nonzero(rows_below)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        lead = int(a[r, col])
        if lead != 1:
            a[r, col:] = a[r, col:] * pow(lead, p - 2, p) % p
        targets = np.nonzero(a[:, col])[0]
        targets = targets[targets != r]
        if targets.size:
            a[targets, col:] = (
                a[targets, col:] - np.outer(a[targets, col], a[r, col:])
            ) % p
        pivots.append(col)
        r += 1
    return pivots
