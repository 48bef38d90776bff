"""Dense linear algebra over Z/p on int64 numpy arrays.

Row reduction is exact: entries stay in [0, p) and p < 2^31, so every
intermediate product fits in int64.  These routines back the coordinate
computations (Koszul differentials, module component bases, independence
checks); they are deliberately plain Gaussian elimination since desk-scale
matrices stay small.
"""

from __future__ import annotations

import numpy as np

__all__ = ["as_matrix", "rref", "rank", "coords_in_rowspace"]


def as_matrix(rows, ncols: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.  Returns (nonzero rows, pivot columns)."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def coords_in_rowspace(
    v: np.ndarray, basis: np.ndarray, pivots: list[int], p: int
) -> np.ndarray:
    """Coordinates of v against an RREF basis; raises if v is outside the span."""
    v = np.asarray(v, dtype=np.int64) % p
    coeffs = v[pivots] if len(pivots) else np.zeros(0, dtype=np.int64)
    residual = (v - coeffs @ basis) % p if len(pivots) else v
    if np.any(residual):
        raise ValueError("vector not in the row space")
    return coeffs
