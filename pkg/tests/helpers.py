"""Shared helpers for the test suite."""

import math
import random
from fractions import Fraction

from tridet import make_matrix


def rel_close(x, y, tol):
    if x == y:
        return True
    return abs(x - y) <= tol * max(abs(x), abs(y))


def log_abs_exact(x):
    """log|x| for an int or Fraction of any magnitude."""
    f = Fraction(x)
    return math.log(abs(f.numerator)) - math.log(f.denominator)


def random_zero_pivot_matrix(rng: random.Random, n: int, lo=-5, hi=5):
    """Random integer matrix engineered so some interior pivot vanishes:
    pick d_2 = a_1 b_1 / d_1 when that stays integral, else force d_1 = 0."""
    d = [rng.randint(lo, hi) for _ in range(n)]
    a = [rng.randint(lo, hi) for _ in range(n - 1)]
    b = [rng.randint(lo, hi) for _ in range(n - 1)]
    if n >= 2:
        if d[0] != 0 and (a[0] * b[0]) % d[0] == 0:
            d[1] = a[0] * b[0] // d[0]
        else:
            d[0] = 0
    return make_matrix(d, a, b)
