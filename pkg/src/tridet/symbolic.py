"""Symbolic-pivot determinant evaluation.

Runs the pivot recurrence with exact rational functions in a single
symbol z: whenever the current working pivot reduces to zero it is
replaced by z before being used as a divisor. The product of all working
pivots simplifies to a polynomial P(z), and the determinant is P(0).

Coefficients are exact rationals; float inputs are converted via their
exact binary value. Every arithmetic result is reduced (numerator and
denominator coprime, denominator monic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from .core import TridiagonalMatrix


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial in z with exact rational coefficients.

    coeffs[i] is the degree-i coefficient; the tuple carries no trailing
    zeros, and the zero polynomial is the empty tuple.
    """

    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "Polynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def const(cls, value) -> "Polynomial":
        return cls.from_coeffs([Fraction(value)])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return Polynomial.from_coeffs(cs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial(())
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    cs[i + j] += ci * cj
        return Polynomial.from_coeffs(cs)

    def scale(self, k: Fraction) -> "Polynomial":
        if k == 0:
            return Polynomial(())
        return Polynomial(tuple(c * k for c in self.coeffs))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def divmod(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Polynomial(()), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Polynomial.from_coeffs(quot), Polynomial.from_coeffs(rem)

    def eval_at_zero(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        return " + ".join(terms)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd via the Euclidean algorithm (constant 1 for coprime inputs)."""
    while not q.is_zero:
        _, r = p.divmod(q)
        p, q = q, r
    if p.is_zero:
        return p
    return p.monic()


def poly_eval_at_zero(p: Polynomial) -> Fraction:
    """Constant coefficient of p, i.e. p(0)."""
    return p.eval_at_zero()


@dataclass(frozen=True)
class RationalFunction:
    """Reduced rational function num/den: gcd(num, den) constant, den monic."""

    num: Polynomial
    den: Polynomial

    @classmethod
    def new(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return cls(Polynomial(()), Polynomial.const(1))
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        return cls(num, den)

    @classmethod
    def from_scalar(cls, value) -> "RationalFunction":
        return cls.new(Polynomial.const(value), Polynomial.const(1))

    @classmethod
    def z(cls) -> "RationalFunction":
        return cls.new(Polynomial.x(), Polynomial.const(1))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.new(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.new(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.new(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction.new(self.num * other.den, self.den * other.num)

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def ratfn_arith(x: RationalFunction, y: RationalFunction, op: str) -> RationalFunction:
    """Exact reduced arithmetic; op is one of add, sub, mul, div."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def working_pivots(m: TridiagonalMatrix) -> Iterator[Tuple[RationalFunction, int]]:
    """Yield each working pivot once it is final, paired with the number of
    z-substitutions performed up to that point. A pivot is final just before
    it is used as a divisor (or, for the last one, after its own update)."""
    d = [RationalFunction.from_scalar(Fraction(x)) for x in m.d]
    subs = 0
    for k in range(1, m.n):
        if d[k - 1].is_zero:
            d[k - 1] = RationalFunction.z()
            subs += 1
        yield d[k - 1], subs
        ab = RationalFunction.from_scalar(Fraction(m.a[k - 1]) * Fraction(m.b[k - 1]))
        d[k] = d[k] - ab / d[k - 1]
    yield d[m.n - 1], subs


def det_detgtri(m: TridiagonalMatrix) -> Fraction:
    """Exact determinant via the symbolic-pivot algorithm.

    Returns P(0) where P(z) is the product of the working pivots; P must
    reduce to a polynomial, otherwise an internal invariant is broken.
    """
    d = [RationalFunction.from_scalar(Fraction(x)) for x in m.d]
    for k in range(1, m.n):
        if d[k - 1].is_zero:
            d[k - 1] = RationalFunction.z()
        ab = RationalFunction.from_scalar(Fraction(m.a[k - 1]) * Fraction(m.b[k - 1]))
        d[k] = d[k] - ab / d[k - 1]
    p = RationalFunction.from_scalar(1)
    for piv in d:
        p = p * piv
    if not p.is_polynomial:
        raise RuntimeError(
            "pivot product did not reduce to a polynomial; this is a bug"
        )
    return p.num.eval_at_zero() / p.den.eval_at_zero()
