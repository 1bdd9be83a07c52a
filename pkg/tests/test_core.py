import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tridet import SignedLogValue, make_matrix, parse_matrix_text, format_matrix_text, to_dense
from tridet.core import (
    DenseLimitExceededError,
    DimensionMismatchError,
    MatrixParseError,
    MinorSequence,
    NonFiniteEntryError,
    PlainOverflowError,
    format_scalar,
)

EX31 = ([1, 1, 2, -1], [1, -1, 1], [1, 1, -3])


def test_make_matrix_ex31():
    m = make_matrix(*EX31)
    assert m.n == 4
    assert m.d == (1, 1, 2, -1)
    assert m.a == (1, -1, 1)
    assert m.b == (1, 1, -3)


def test_make_matrix_1x1():
    m = make_matrix([5], [], [])
    assert m.n == 1
    assert to_dense(m) == [[5]]


def test_make_matrix_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        make_matrix([1, 2], [1, 1], [1])
    with pytest.raises(DimensionMismatchError):
        make_matrix([], [], [])


def test_make_matrix_rejects_non_finite():
    with pytest.raises(NonFiniteEntryError):
        make_matrix([1.0, float("nan")], [0.0], [0.0])
    with pytest.raises(NonFiniteEntryError):
        make_matrix([1.0, 2.0], [float("inf")], [0.0])


def test_to_dense_ex31():
    assert to_dense(make_matrix(*EX31)) == [
        [1, 1, 0, 0],
        [1, 1, -1, 0],
        [0, 1, 2, 1],
        [0, 0, -3, -1],
    ]


def test_to_dense_2x2():
    assert to_dense(make_matrix([1, 1], [2], [3])) == [[1, 2], [3, 1]]


def test_to_dense_limit():
    m = make_matrix([1.0] * 10, [0.0] * 9, [0.0] * 9)
    with pytest.raises(DenseLimitExceededError):
        to_dense(m, limit=9)


finite_floats = st.floats(allow_nan=False, allow_infinity=False)


@given(
    st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.tuples(
            st.lists(finite_floats, min_size=n, max_size=n),
            st.lists(finite_floats, min_size=n - 1, max_size=n - 1),
            st.lists(finite_floats, min_size=n - 1, max_size=n - 1),
        )
    )
)
def test_dense_round_trip_bit_identical(dab):
    d, a, b = dab
    m = make_matrix(d, a, b)
    g = to_dense(m)
    n = m.n
    assert [g[i][i] for i in range(n)] == list(d)
    assert [g[i][i + 1] for i in range(n - 1)] == list(a)
    assert [g[i + 1][i] for i in range(n - 1)] == list(b)
    # off-band entries are exactly zero
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1:
                assert g[i][j] == 0


def test_signed_log_zero():
    z = SignedLogValue.zero()
    assert z.sign == 0 and z.to_float() == 0.0
    assert (z * SignedLogValue.from_float(3.0)).sign == 0


@given(st.floats(min_value=-700, max_value=700).map(math.exp), st.sampled_from([1.0, -1.0]))
def test_signed_log_round_trip(mag, s):
    x = s * mag
    y = SignedLogValue.from_float(x).to_float()
    assert abs(y - x) <= 1e-14 * abs(x)


def test_signed_log_multiplication_random_pairs():
    rng = random.Random(7)
    for _ in range(10_000):
        x = rng.choice([-1, 1]) * math.exp(rng.uniform(-200, 200))
        y = rng.choice([-1, 1]) * math.exp(rng.uniform(-200, 200))
        prod = SignedLogValue.from_float(x) * SignedLogValue.from_float(y)
        expect = SignedLogValue.from_float(x * y) if abs(x * y) != 0 else None
        assert prod.sign == (1 if x * y > 0 else -1)
        assert abs(prod.logmag - expect.logmag) <= 1e-12 * max(1.0, abs(expect.logmag))


def test_signed_log_from_exact_large():
    v = SignedLogValue.from_exact(-(10**400))
    assert v.sign == -1
    assert abs(v.logmag - 400 * math.log(10)) < 1e-9


def test_minor_sequence_invariants():
    MinorSequence((1, 2.0, 3.0))
    with pytest.raises(ValueError):
        MinorSequence((2, 3.0))
    with pytest.raises(PlainOverflowError):
        MinorSequence((1, float("inf")))


def test_matrix_text_round_trip():
    m = make_matrix([1.5, -2.0, 3.0], [0.25, 4.0], [-1.0, 0.0])
    m2 = parse_matrix_text(format_matrix_text(m))
    assert m2.d == m.d and m2.a == m.a and m2.b == m.b


def test_matrix_text_order_one_blank_lines():
    assert parse_matrix_text("1\n7\n\n\n").d == (7.0,)
    assert parse_matrix_text("1\n7\n").d == (7.0,)


@pytest.mark.parametrize(
    "text",
    [
        "2\n1 2\n1\n",  # missing subdiagonal line
        "2\n1\n1\n1\n",  # wrong count on d
        "x\n1\n\n\n",  # bad order
        "0\n\n\n\n",  # nonpositive order
        "2\n1 2\n1\nq\n",  # bad scalar
    ],
)
def test_matrix_text_malformed(text):
    with pytest.raises(MatrixParseError):
        parse_matrix_text(text)


def test_format_scalar_shortest():
    assert format_scalar(-1.0) == "-1"
    assert format_scalar(0.1) == "0.1"
    assert format_scalar(10.0) == "10"
    assert float(format_scalar(1 / 3)) == 1 / 3
