"""Parameterized constructors for the standard example families, with
closed-form determinant values where they are known.

Families:

* ex31 -- a fixed 4x4 instance whose second pivot vanishes;
* ex32 -- d_i = 2, a_i = b_i = -1 (det = n + 1);
* ex33 -- all ones on the three diagonals (det cycles 1, 0, -1 with period 6);
* ex34 -- d_i = 1, superdiagonal 1..n-1, subdiagonal n-1..1
  (det = 0 for even n, a factorial/binomial expression for odd n);
* ex35 -- d = (1, 2, ..., 2, 1), a_i = 1, b_i = 2 (second pivot vanishes).
"""

from __future__ import annotations

import math
import random
from enum import Enum
from fractions import Fraction

from .core import TridiagonalMatrix, make_matrix


class Family(str, Enum):
    EX31 = "ex31"
    EX32 = "ex32"
    EX33 = "ex33"
    EX34 = "ex34"
    EX35 = "ex35"


_EX31 = (
    [1, 1, 2, -1],  # d
    [1, -1, 1],  # a
    [1, 1, -3],  # b
)


def gen_example(family: Family, n: int) -> TridiagonalMatrix:
    """Build the order-n member of a family (ex31 exists only at n = 4)."""
    family = Family(family)
    if n < 1:
        raise ValueError("n must be positive")
    if family is Family.EX31:
        if n != 4:
            raise ValueError("ex31 is a fixed 4x4 instance; n must be 4")
        return make_matrix(*_EX31)
    if family is Family.EX32:
        return make_matrix([2] * n, [-1] * (n - 1), [-1] * (n - 1))
    if family is Family.EX33:
        return make_matrix([1] * n, [1] * (n - 1), [1] * (n - 1))
    if family is Family.EX34:
        if n < 2:
            raise ValueError("ex34 needs n >= 2")
        return make_matrix([1] * n, list(range(1, n)), list(range(n - 1, 0, -1)))
    if family is Family.EX35:
        if n < 2:
            raise ValueError("ex35 needs n >= 2")
        return make_matrix([1] + [2] * (n - 2) + [1], [1] * (n - 1), [2] * (n - 1))
    raise ValueError(f"unknown family {family!r}")


def closed_form_det(family: Family, n: int) -> int:
    """Exact determinant from the family's closed form (ex32, ex33, ex34)."""
    family = Family(family)
    if n < 1:
        raise ValueError("n must be positive")
    if family is Family.EX32:
        return n + 1
    if family is Family.EX33:
        r = n % 6
        if r in (0, 1):
            return 1
        if r in (2, 5):
            return 0
        return -1
    if family is Family.EX34:
        if n % 2 == 0:
            return 0
        k = (n - 1) // 2
        value = Fraction((-1) ** k * math.factorial(n) * math.comb(n - 1, k), 2 ** (n - 1))
        assert value.denominator == 1
        return int(value)
    raise ValueError(f"no closed form for family {family.value}")


# --- random instances used by tests and benchmark scripts --------------------


def random_integer_matrix(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> TridiagonalMatrix:
    """Uniform integer entries in [lo, hi] on all three diagonals."""
    return make_matrix(
        [rng.randint(lo, hi) for _ in range(n)],
        [rng.randint(lo, hi) for _ in range(n - 1)],
        [rng.randint(lo, hi) for _ in range(n - 1)],
    )


def random_well_conditioned_matrix(rng: random.Random, n: int) -> TridiagonalMatrix:
    """Strictly diagonally dominant random matrix (all pivots nonzero)."""
    a = [rng.uniform(-1, 1) for _ in range(n - 1)]
    b = [rng.uniform(-1, 1) for _ in range(n - 1)]
    d = []
    for i in range(n):
        row = (abs(a[i]) if i < n - 1 else 0.0) + (abs(b[i - 1]) if i > 0 else 0.0)
        d.append(rng.choice([-1, 1]) * (row + rng.uniform(0.5, 1.5)))
    return make_matrix(d, a, b)


def random_symmetric_matrix(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> TridiagonalMatrix:
    off = [rng.randint(lo, hi) for _ in range(n - 1)]
    return make_matrix([rng.randint(lo, hi) for _ in range(n)], off, off)
