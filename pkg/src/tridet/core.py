"""Compressed tridiagonal matrices and overflow-safe scalar values.

A tridiagonal matrix of order n is stored as three vectors: the main
diagonal ``d`` (length n) and the super/sub diagonals ``a``/``b``
(length n-1 each), i.e. 3n-2 scalars instead of an n-by-n grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, float, Fraction]

DENSE_LIMIT_FLOAT = 2048
DENSE_LIMIT_EXACT = 64


class TridetError(Exception):
    """Base class for library errors."""


class DimensionMismatchError(TridetError, ValueError):
    """Diagonal vectors have inconsistent lengths."""


class NonFiniteEntryError(TridetError, ValueError):
    """A matrix entry is NaN or infinite."""


class DenseLimitExceededError(TridetError, ValueError):
    """Matrix order exceeds the configured dense-expansion limit."""


class ZeroPivotError(TridetError):
    """An operation that divides by a pivot hit a vanishing pivot."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"zero pivot at index {index}")


class PlainOverflowError(TridetError, OverflowError):
    """A plain-scalar computation left the finite floating range.

    Retry the operation in scaled (signed-log) mode.
    """


class NotSymmetricError(TridetError, ValueError):
    """Operation requires a symmetric matrix (a_i = b_i for all i)."""


class MatrixParseError(TridetError, ValueError):
    """Malformed matrix text input."""


def _check_finite(x) -> None:
    if isinstance(x, float) and not math.isfinite(x):
        raise NonFiniteEntryError(f"non-finite entry: {x!r}")


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Order-n tridiagonal matrix held as its three nonzero diagonals."""

    d: tuple  # main diagonal, length n
    a: tuple  # superdiagonal, length n-1
    b: tuple  # subdiagonal, length n-1

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def is_symmetric(self) -> bool:
        return self.a == self.b

    def entry(self, i: int, j: int):
        """Entry at 0-based position (i, j); zero off the three diagonals."""
        if i == j:
            return self.d[i]
        if j == i + 1:
            return self.a[i]
        if i == j + 1:
            return self.b[j]
        return 0


def make_matrix(d: Sequence[Scalar], a: Sequence[Scalar], b: Sequence[Scalar]) -> TridiagonalMatrix:
    """Validate and build a TridiagonalMatrix from its three diagonals."""
    n = len(d)
    if n < 1:
        raise DimensionMismatchError("matrix order must be at least 1")
    if len(a) != n - 1 or len(b) != n - 1:
        raise DimensionMismatchError(
            f"off-diagonals must have length n-1={n - 1}, got len(a)={len(a)}, len(b)={len(b)}"
        )
    for v in (*d, *a, *b):
        _check_finite(v)
    return TridiagonalMatrix(tuple(d), tuple(a), tuple(b))


def to_dense(m: TridiagonalMatrix, limit: int = DENSE_LIMIT_FLOAT) -> list:
    """Expand to a full n-by-n grid (list of row lists)."""
    n = m.n
    if n > limit:
        raise DenseLimitExceededError(f"order {n} exceeds dense limit {limit}")
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = m.d[i]
    for i in range(n - 1):
        grid[i][i + 1] = m.a[i]
        grid[i + 1][i] = m.b[i]
    return grid


@dataclass(frozen=True)
class SignedLogValue:
    """Overflow-safe scalar: sign in {-1, 0, +1} and natural log of |x|.

    ``logmag`` is meaningless when ``sign == 0`` (stored as 0.0).
    """

    sign: int
    logmag: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")

    @classmethod
    def zero(cls) -> "SignedLogValue":
        return cls(0, 0.0)

    @classmethod
    def from_float(cls, x: float) -> "SignedLogValue":
        if x == 0:
            return cls.zero()
        if not math.isfinite(x):
            raise NonFiniteEntryError(f"cannot encode non-finite value {x!r}")
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    @classmethod
    def from_exact(cls, x) -> "SignedLogValue":
        """Encode an int or Fraction of any magnitude exactly in sign, log in float."""
        if x == 0:
            return cls.zero()
        sign = 1 if x > 0 else -1
        f = Fraction(x)
        # math.log handles arbitrarily large ints without overflow
        return cls(sign, math.log(abs(f.numerator)) - math.log(f.denominator))

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.logmag)

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        s = self.sign * other.sign
        if s == 0:
            return SignedLogValue.zero()
        return SignedLogValue(s, self.logmag + other.logmag)


@dataclass(frozen=True)
class MinorSequence:
    """Leading principal minors f_0..f_n, with f_0 = 1 by definition."""

    values: tuple
    mode: str = "plain"  # "plain" or "scaled"

    def __post_init__(self):
        if self.mode not in ("plain", "scaled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.values:
            raise ValueError("minor sequence must contain at least f_0")
        f0 = self.values[0]
        if self.mode == "plain":
            if f0 != 1:
                raise ValueError("f_0 must equal 1")
            for v in self.values:
                if isinstance(v, float) and not math.isfinite(v):
                    raise PlainOverflowError("non-finite minor in plain mode")
        else:
            if not (f0.sign == 1 and f0.logmag == 0.0):
                raise ValueError("f_0 must encode 1")

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int):
        return self.values[i]


# --- matrix text format -----------------------------------------------------
#
# line 1: n
# line 2: the n values of d, whitespace-separated
# line 3: the n-1 values of a (may be blank when n = 1)
# line 4: the n-1 values of b (may be blank when n = 1)


def _parse_row(line: str, count: int, what: str) -> list:
    parts = line.split()
    if len(parts) != count:
        raise MatrixParseError(f"expected {count} values for {what}, got {len(parts)}")
    out = []
    for p in parts:
        try:
            out.append(float(p))
        except ValueError as exc:
            raise MatrixParseError(f"bad scalar {p!r} in {what}") from exc
    return out


def parse_matrix_text(text: str) -> TridiagonalMatrix:
    """Parse the four-line matrix text format."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < 2:
        raise MatrixParseError("expected at least 2 lines (order and main diagonal)")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise MatrixParseError(f"bad order {lines[0]!r}") from exc
    if n < 1:
        raise MatrixParseError(f"order must be positive, got {n}")
    if n == 1:
        # blank or absent off-diagonal lines are permitted
        extra = [ln for ln in lines[2:] if ln.strip()]
        if len(lines) > 4 or extra:
            raise MatrixParseError("unexpected trailing content for order-1 matrix")
        d = _parse_row(lines[1], 1, "d")
        return make_matrix(d, [], [])
    if len(lines) != 4:
        raise MatrixParseError(f"expected 4 lines, got {len(lines)}")
    d = _parse_row(lines[1], n, "d")
    a = _parse_row(lines[2], n - 1, "a")
    b = _parse_row(lines[3], n - 1, "b")
    return make_matrix(d, a, b)


def format_scalar(x) -> str:
    """Shortest round-trip decimal text for a scalar."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        s = repr(x)
        return s[:-2] if s.endswith(".0") else s
    return str(x)


def format_matrix_text(m: TridiagonalMatrix) -> str:
    lines = [
        str(m.n),
        " ".join(format_scalar(x) for x in m.d),
        " ".join(format_scalar(x) for x in m.a),
        " ".join(format_scalar(x) for x in m.b),
    ]
    return "\n".join(lines) + "\n"
