"""Dense brute-force determinants used as independent ground truth.

Deliberately independent of the tridiagonal recurrence kernels: a floating
path using Gaussian elimination with partial pivoting, and an exact path
using fraction-free (Bareiss) elimination.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import DENSE_LIMIT_EXACT, DENSE_LIMIT_FLOAT, DenseLimitExceededError


def _check_square(grid, limit):
    n = len(grid)
    if n > limit:
        raise DenseLimitExceededError(f"order {n} exceeds dense limit {limit}")
    for row in grid:
        if len(row) != n:
            raise ValueError("grid is not square")
    return n


def dense_det_float(grid, limit: int = DENSE_LIMIT_FLOAT) -> float:
    """Determinant via elimination with partial pivoting; singular inputs
    come out as 0 within rounding."""
    n = _check_square(grid, limit)
    g = np.array(grid, dtype=float)
    det = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(g[k:, k])))
        if g[p, k] == 0.0:
            return 0.0
        if p != k:
            g[[k, p]] = g[[p, k]]
            det = -det
        det *= g[k, k]
        if k + 1 < n:
            mult = g[k + 1 :, k] / g[k, k]
            g[k + 1 :, k + 1 :] -= np.outer(mult, g[k, k + 1 :])
            g[k + 1 :, k] = 0.0
    return float(det)


def dense_det_exact(grid, limit: int = DENSE_LIMIT_EXACT) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Integer inputs stay in integer arithmetic; anything else is lifted to
    exact rationals (floats via their exact binary value).
    """
    n = _check_square(grid, limit)
    flat = [x for row in grid for x in row]
    all_int = all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1) for x in flat)
    if all_int:
        g = [[int(x) for x in row] for row in grid]
    else:
        g = [[Fraction(x) for x in row] for row in grid]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if g[k][k] == 0:
            for p in range(k + 1, n):
                if g[p][k] != 0:
                    g[k], g[p] = g[p], g[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = g[k][k]
        for i in range(k + 1, n):
            row_i = g[i]
            row_k = g[k]
            gik = row_i[k]
            if all_int:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - gik * row_k[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - gik * row_k[j]) / prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * g[n - 1][n - 1])
