import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_zero_pivot_matrix
from tridet import (
    Polynomial,
    RationalFunction,
    dense_det_exact,
    det_detgtri,
    det_hybrid,
    gen_example,
    make_matrix,
    pivot_sequence,
    poly_eval_at_zero,
    ratfn_arith,
    to_dense,
)
from tridet.generators import random_integer_matrix
from tridet.symbolic import poly_gcd, working_pivots


def P(*coeffs):
    return Polynomial.from_coeffs(coeffs)


def R(num, den=P(1)):
    return RationalFunction.new(num, den)


class TestPolynomial:
    def test_normalization(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).is_zero
        assert P().degree == -1
        assert P(0, 0, 3).leading == 3

    def test_arithmetic(self):
        assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)
        assert P(1, 2) + P(-1, -2) == P()
        q, r = P(-1, 0, 1).divmod(P(1, 1))
        assert q == P(-1, 1) and r.is_zero

    def test_gcd_is_monic(self):
        g = poly_gcd(P(-2, 0, 2), P(2, 2))
        assert g == P(1, 1)
        assert poly_gcd(P(3), P(0, 5)) == P(1)

    def test_eval_at_zero(self):
        assert poly_eval_at_zero(P(-1, 0, 1)) == -1
        assert poly_eval_at_zero(P()) == 0
        assert poly_eval_at_zero(P(7)) == 7


class TestRationalFunction:
    def test_sub_example(self):
        z = RationalFunction.z()
        one_over_z = R(P(1), P(0, 1))
        assert z - one_over_z == R(P(-1, 0, 1), P(0, 1))

    def test_mul_cancellation(self):
        x = R(P(-1, 0, 1), P(0, 1))  # (z^2-1)/z
        y = R(P(0, 1), P(-1, 1))  # z/(z-1)
        assert x * y == R(P(1, 1))  # z+1

    def test_add_identity(self):
        assert ratfn_arith(R(P(3)), R(P()), "add") == R(P(3))

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ratfn_arith(R(P(1)), R(P()), "div")

    def test_denominator_is_monic(self):
        x = R(P(1), P(0, 2))  # 1/(2z) -> (1/2)/z
        assert x.den == P(0, 1)
        assert x.num == P(Fraction(1, 2))

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    )
    def test_reduction_idempotent(self, nc, dc):
        den = P(*dc)
        if den.is_zero:
            den = P(1)
        x = R(P(*nc), den)
        assert RationalFunction.new(x.num, x.den) == x


class TestDetgtri:
    def test_ex31(self):
        assert det_detgtri(gen_example("ex31", 4)) == -1

    def test_ex35_n3_matches_oracle(self):
        m = make_matrix([1, 2, 1], [1, 1], [2, 2])
        assert pivot_sequence(m).break_index == 2
        assert det_detgtri(m) == dense_det_exact(to_dense(m)) == -2

    def test_ex34_n6_zero_without_interior_break(self):
        m = gen_example("ex34", 6)
        assert pivot_sequence(m).break_index is None
        assert det_detgtri(m) == 0

    def test_order_one_and_zero_entries(self):
        assert det_detgtri(make_matrix([0], [], [])) == 0
        assert det_detgtri(make_matrix([0, 1], [1], [1])) == -1
        assert det_detgtri(make_matrix([0, 0], [1], [1])) == -1

    def test_float_entries_convert_exactly(self):
        m = make_matrix([0.5, 0.5], [0.25], [1.0])
        assert det_detgtri(m) == Fraction(1, 4) - Fraction(1, 4)

    def test_agrees_with_exact_hybrid_random(self):
        rng = random.Random(2024)
        for _ in range(250):
            n = rng.randint(1, 12)
            m = random_integer_matrix(rng, n)
            assert det_detgtri(m) == det_hybrid(m, exact=True).value

    def test_agrees_on_constructed_zero_pivot_cases(self):
        rng = random.Random(99)
        for _ in range(100):
            m = random_zero_pivot_matrix(rng, rng.randint(2, 10))
            assert det_detgtri(m) == dense_det_exact(to_dense(m))

    def test_no_vanish_pivots_are_constants(self):
        m = gen_example("ex32", 8)
        pivots = list(working_pivots(m))
        assert all(p.num.degree <= 0 and p.is_polynomial for p, _ in pivots)
        prod = Fraction(1)
        for c in pivot_sequence(m, exact=True).c:
            prod *= c
        assert det_detgtri(m) == prod == 9

    def test_degree_bound(self):
        rng = random.Random(5)
        cases = [random_zero_pivot_matrix(rng, rng.randint(2, 10)) for _ in range(60)]
        cases += [gen_example("ex33", 30), gen_example("ex35", 30)]
        for m in cases:
            for pivot, subs in working_pivots(m):
                assert max(pivot.num.degree, pivot.den.degree) <= subs + 1
