"""Linear-time determinant kernels for tridiagonal matrices.

Three kernels are provided, all O(n):

* two-term: det = prod(c_r) over the pivot vector c, undefined past a
  vanishing pivot;
* three-term: f_i = d_i f_{i-1} - a_{i-1} b_{i-1} f_{i-2}, valid
  unconditionally;
* hybrid: run the two-term pivot product until a pivot vanishes, then
  finish with the three-term recurrence. The switch happens at most once
  and never reverts.

All kernels accept ``exact=True`` to compute with exact rationals
(floats are converted via their exact binary value).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .core import (
    MinorSequence,
    PlainOverflowError,
    SignedLogValue,
    TridiagonalMatrix,
    ZeroPivotError,
)

_LN2 = math.log(2.0)


class Algorithm(str, Enum):
    TWO_TERM = "two_term"
    THREE_TERM = "three_term"
    HYBRID = "hybrid"
    HYBRID_SCALED = "hybrid_scaled"
    DETGTRI = "detgtri"


@dataclass(frozen=True)
class PivotSequence:
    """Pivot vector c with c_1 = d_1, c_i = d_i - a_{i-1} b_{i-1} / c_{i-1}.

    ``break_index`` is the 1-based index of the first vanishing pivot among
    c_1..c_{n-1}, or None. Entries past the break are not produced (the
    vanishing pivot itself is included).
    """

    c: tuple
    break_index: Optional[int] = None


@dataclass(frozen=True)
class DetResult:
    """Determinant value plus provenance of how it was computed."""

    value: Union[float, Fraction, SignedLogValue]
    algorithm: Algorithm
    pivot_break: Optional[int] = None  # only for HYBRID with an actual break
    pivot_steps: int = 0
    recurrence_steps: int = 0
    minors: Optional[MinorSequence] = None


def _is_zero(c, zero_tol, scale) -> bool:
    """Zero test for a pivot. zero_tol = 0 means exact comparison; otherwise
    a relative test |c| <= zero_tol * scale where scale = |d_i| + |a b / c_prev|."""
    if zero_tol == 0:
        return c == 0
    return abs(c) <= zero_tol * scale


def _convert(m: TridiagonalMatrix, exact: bool):
    if exact:
        d = [Fraction(x) for x in m.d]
        a = [Fraction(x) for x in m.a]
        b = [Fraction(x) for x in m.b]
        return d, a, b, Fraction(1)
    return (
        [float(x) for x in m.d],
        [float(x) for x in m.a],
        [float(x) for x in m.b],
        1.0,
    )


def pivot_sequence(m: TridiagonalMatrix, zero_tol: float = 0.0, exact: bool = False) -> PivotSequence:
    """Compute the pivot vector, stopping at the first vanishing interior pivot."""
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    d, a, b, _ = _convert(m, exact)
    n = m.n
    c = [d[0]]
    if _is_zero(d[0], zero_tol, abs(d[0])) and n > 1:
        return PivotSequence(tuple(c), break_index=1)
    for i in range(1, n):
        t = a[i - 1] * b[i - 1] / c[i - 1]
        ci = d[i] - t
        c.append(ci)
        if i < n - 1 and _is_zero(ci, zero_tol, abs(d[i]) + abs(t)):
            return PivotSequence(tuple(c), break_index=i + 1)
    return PivotSequence(tuple(c), break_index=None)


def det_two_term(m: TridiagonalMatrix, zero_tol: float = 0.0, exact: bool = False) -> DetResult:
    """det via the pivot product prod(c_r). Raises ZeroPivotError when an
    interior pivot vanishes (the product is undefined past it); c_n = 0 is
    fine and yields a zero determinant."""
    ps = pivot_sequence(m, zero_tol=zero_tol, exact=exact)
    if ps.break_index is not None:
        raise ZeroPivotError(ps.break_index, f"two-term recurrence undefined: c_{ps.break_index} = 0")
    value = Fraction(1) if exact else 1.0
    for ci in ps.c:
        value = value * ci
    if not exact and not math.isfinite(value):
        raise PlainOverflowError("pivot product overflowed; retry in scaled mode")
    return DetResult(value, Algorithm.TWO_TERM, pivot_steps=m.n - 1)


def det_three_term(m: TridiagonalMatrix, exact: bool = False, keep_minors: bool = False) -> DetResult:
    """det via the unconditional three-term minor recurrence."""
    d, a, b, one = _convert(m, exact)
    n = m.n
    f0, f1 = one, d[0]
    trace = [f0, f1] if keep_minors else None
    if exact:
        for i in range(1, n):
            f0, f1 = f1, d[i] * f1 - a[i - 1] * b[i - 1] * f0
            if keep_minors:
                trace.append(f1)
    else:
        for i in range(1, n):
            f0, f1 = f1, d[i] * f1 - a[i - 1] * b[i - 1] * f0
            if f1 - f1 != 0.0:  # catches inf and NaN in one cheap test
                raise PlainOverflowError(
                    f"minor f_{i + 1} overflowed; retry in scaled mode"
                )
            if keep_minors:
                trace.append(f1)
    minors = MinorSequence(tuple(trace)) if keep_minors else None
    return DetResult(f1, Algorithm.THREE_TERM, recurrence_steps=n - 1, minors=minors)


def det_hybrid(
    m: TridiagonalMatrix,
    zero_tol: float = 0.0,
    exact: bool = False,
    keep_minors: bool = False,
) -> DetResult:
    """det via the hybrid kernel: pivot product until a pivot vanishes, then
    the three-term recurrence for the remaining indices."""
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    d, a, b, one = _convert(m, exact)
    n = m.n
    mm = 1
    c = d[0]
    scale = abs(d[0])
    f0, f1 = one, d[0]  # f_{m-1}, f_m
    trace = [f0, f1] if keep_minors else None
    while mm <= n - 1 and not _is_zero(c, zero_tol, scale):
        t = a[mm - 1] * b[mm - 1] / c
        c = d[mm] - t
        scale = abs(d[mm]) + abs(t)
        f0, f1 = f1, c * f1
        mm += 1
        if keep_minors:
            trace.append(f1)
    pivot_break = mm if mm <= n - 1 else None
    pivot_steps = mm - 1
    for k in range(mm, n):
        f0, f1 = f1, d[k] * f1 - a[k - 1] * b[k - 1] * f0
        if keep_minors:
            trace.append(f1)
    if not exact and not math.isfinite(f1):
        raise PlainOverflowError("hybrid determinant overflowed; retry in scaled mode")
    minors = MinorSequence(tuple(trace)) if keep_minors else None
    return DetResult(
        f1,
        Algorithm.HYBRID,
        pivot_break=pivot_break,
        pivot_steps=pivot_steps,
        recurrence_steps=n - mm,
        minors=minors,
    )


def det_hybrid_scaled(m: TridiagonalMatrix, zero_tol: float = 0.0) -> DetResult:
    """Overflow-safe hybrid kernel: same control flow, but the running minors
    carry a shared log-scale that absorbs their magnitude, so intermediates
    stay within floating range. Returns a SignedLogValue.

    Both phases advance the minors with the minor-form update
    f_i = d_i f_{i-1} - a_{i-1} b_{i-1} f_{i-2}, which is exact for integer
    inputs within float precision (the pivot-form update c_i f_{i-1} divides
    and would round exact zeros away). While the loop runs f_{m-1} != 0, so
    the switch condition c_m = 0 is equivalently tested as f_m = 0.
    Renormalization uses powers of two, which rescales mantissas exactly.
    """
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    d = [float(x) for x in m.d]
    a = [float(x) for x in m.a]
    b = [float(x) for x in m.b]
    n = m.n
    mm = 1
    f0, f1 = 1.0, d[0]  # mantissas of f_{m-1}, f_m
    logsc = 0.0  # true f_i = mantissa * exp(logsc)
    scale = abs(d[0])  # magnitude reference for the relative zero test

    def renorm(f0, f1, logsc):
        e = math.frexp(max(abs(f0), abs(f1)))[1]
        if e > 512 or e < -512:
            s = math.ldexp(1.0, e)
            f0, f1, logsc = f0 / s, f1 / s, logsc + e * _LN2
        return f0, f1, logsc

    while mm <= n - 1 and not _is_zero(f1, zero_tol, scale):
        t1 = d[mm] * f1
        t2 = a[mm - 1] * b[mm - 1] * f0
        f0, f1 = f1, t1 - t2
        scale = abs(t1) + abs(t2)
        f0, f1, logsc = renorm(f0, f1, logsc)
        mm += 1
    pivot_break = mm if mm <= n - 1 else None
    pivot_steps = mm - 1
    for k in range(mm, n):
        f0, f1 = f1, d[k] * f1 - a[k - 1] * b[k - 1] * f0
        f0, f1, logsc = renorm(f0, f1, logsc)
    if f1 == 0.0:
        value = SignedLogValue.zero()
    else:
        value = SignedLogValue(1 if f1 > 0 else -1, math.log(abs(f1)) + logsc)
    return DetResult(
        value,
        Algorithm.HYBRID_SCALED,
        pivot_break=pivot_break,
        pivot_steps=pivot_steps,
        recurrence_steps=n - mm,
    )


def minor_sequence(m: TridiagonalMatrix, exact: bool = False) -> MinorSequence:
    """All leading principal minors f_0..f_n via the three-term recurrence."""
    return det_three_term(m, exact=exact, keep_minors=True).minors
