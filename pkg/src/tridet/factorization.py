"""LU factorization and positive-definiteness testing from the pivot vector.

For a tridiagonal matrix with pivot vector c, both triangular factors are
bidiagonal and can be written down directly:

* Doolittle (unit diagonal on L): U has diagonal c and superdiagonal a,
  L has subdiagonal b_i / c_i;
* Crout (unit diagonal on U): L has diagonal c and subdiagonal b,
  U has superdiagonal a_i / c_i.

A symmetric tridiagonal matrix is positive definite iff every c_i > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import NotSymmetricError, TridiagonalMatrix, ZeroPivotError, make_matrix
from .recurrences import pivot_sequence


class Convention(str, Enum):
    DOOLITTLE = "doolittle"
    CROUT = "crout"


@dataclass(frozen=True)
class LUFactors:
    """Bidiagonal L and U factors of a tridiagonal matrix."""

    convention: Convention
    l_diag: tuple
    l_sub: tuple
    u_diag: tuple
    u_super: tuple

    @property
    def n(self) -> int:
        return len(self.l_diag)

    def multiply(self) -> TridiagonalMatrix:
        """Form the product L*U (tridiagonal again)."""
        n = self.n
        d = [self.l_diag[i] * self.u_diag[i] for i in range(n)]
        for i in range(1, n):
            d[i] += self.l_sub[i - 1] * self.u_super[i - 1]
        a = [self.l_diag[i] * self.u_super[i] for i in range(n - 1)]
        b = [self.l_sub[i] * self.u_diag[i] for i in range(n - 1)]
        return make_matrix(d, a, b)


def lu_factorize(
    m: TridiagonalMatrix,
    convention: Convention = Convention.DOOLITTLE,
    exact: bool = False,
) -> LUFactors:
    """Factorize m as L*U. Requires the interior pivots c_1..c_{n-1} to be
    nonzero; a vanishing c_n is allowed (singular matrix, valid LU)."""
    convention = Convention(convention)
    ps = pivot_sequence(m, exact=exact)
    if ps.break_index is not None:
        raise ZeroPivotError(
            ps.break_index, f"LU factorization does not exist: c_{ps.break_index} = 0"
        )
    c = ps.c
    n = m.n
    one = c[0] - c[0] + 1  # 1 in the arithmetic of the pivots
    if convention is Convention.DOOLITTLE:
        return LUFactors(
            convention,
            l_diag=(one,) * n,
            l_sub=tuple(m.b[i] / c[i] for i in range(n - 1)),
            u_diag=c,
            u_super=tuple(m.a),
        )
    return LUFactors(
        convention,
        l_diag=c,
        l_sub=tuple(m.b),
        u_diag=(one,) * n,
        u_super=tuple(m.a[i] / c[i] for i in range(n - 1)),
    )


@dataclass(frozen=True)
class PDResult:
    """Verdict of the positive-definiteness test.

    On success, ``pivots`` holds the full c-vector; on failure,
    ``failure_index`` is the 1-based index of the first non-positive pivot.
    """

    is_pd: bool
    pivots: Optional[tuple] = None
    failure_index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.is_pd


def is_positive_definite(m: TridiagonalMatrix, exact: bool = False) -> PDResult:
    """Test a symmetric tridiagonal matrix for positive definiteness via the
    pivot vector (strict comparison c_i > 0, no tolerance)."""
    if not m.is_symmetric:
        raise NotSymmetricError("positive-definiteness test requires a_i = b_i")
    ps = pivot_sequence(m, exact=exact)
    if ps.break_index is not None:
        return PDResult(False, failure_index=ps.break_index)
    for i, ci in enumerate(ps.c):
        if not ci > 0:
            return PDResult(False, failure_index=i + 1)
    return PDResult(True, pivots=ps.c)
