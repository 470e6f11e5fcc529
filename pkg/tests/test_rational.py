"""Rational text format and exact p-th-root-sum comparisons."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metriclat import parse_rational, rat_str
from metriclat.exactcmp import cmp_root_sum, root_sum_le

nonneg = st.fractions(min_value=0, max_value=100, max_denominator=50)


@pytest.mark.parametrize("text,value", [
    (3, Fraction(3)),
    (-2, Fraction(-2)),
    ("3/4", Fraction(3, 4)),
    ("-7/2", Fraction(-7, 2)),
    (" 5 ", Fraction(5)),
    ("3/6", Fraction(1, 2)),
    ("+2/4", Fraction(1, 2)),
    ("0", Fraction(0)),
])
def test_parse_accepts(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", [
    1.5, True, False, None, "3/0", "1.5", "a/b", "1/-2", "", "1 / 2", [1],
])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@pytest.mark.parametrize("value,text", [
    (Fraction(3), "3"),
    (Fraction(1, 2), "1/2"),
    (Fraction(-3, 4), "-3/4"),
    (Fraction(4, 2), "2"),
    (Fraction(0), "0"),
])
def test_rat_str(value, text):
    assert rat_str(value) == text


@given(st.fractions(max_denominator=10**6))
def test_text_round_trip(x):
    assert parse_rational(rat_str(x)) == x


# -- root-sum comparisons ---------------------------------------------------


@pytest.mark.parametrize("X,A,B,p,sign", [
    (16, 4, 4, 2, 0),
    (17, 4, 4, 2, 1),
    (15, 4, 4, 2, -1),
    (27, 1, 8, 3, 0),
    (28, 1, 8, 3, 1),
    (26, 1, 8, 3, -1),
    # sqrt(1/2) + sqrt(2) squares to exactly 9/2
    (Fraction(9, 2), Fraction(1, 2), 2, 2, 0),
    # (1/2 + 2)^3 = 125/8
    (Fraction(125, 8), Fraction(1, 8), 8, 3, 0),
    (5, 0, 5, 2, 0),
    (6, 0, 5, 3, 1),
    (0, 0, 0, 3, 0),
    (7, 3, 4, 1, 0),
    (8, 3, 4, 1, 1),
])
def test_cmp_root_sum_cases(X, A, B, p, sign):
    assert cmp_root_sum(X, A, B, p) == sign
    assert root_sum_le(X, A, B, p) == (sign <= 0)


def test_cmp_root_sum_rejects():
    with pytest.raises(ValueError):
        cmp_root_sum(-1, 0, 0, 2)
    with pytest.raises(ValueError):
        cmp_root_sum(1, 1, 1, 4)


@pytest.mark.parametrize("p", [2, 3])
@given(r=nonneg, s=nonneg)
def test_exact_power_sums_compare_equal(p, r, s):
    X = (r + s) ** p
    assert cmp_root_sum(X, r**p, s**p, p) == 0
    if r + s > 0:
        assert cmp_root_sum(X * Fraction(101, 100), r**p, s**p, p) == 1
        assert cmp_root_sum(X * Fraction(100, 101), r**p, s**p, p) == -1


@pytest.mark.parametrize("p", [2, 3])
@given(a=nonneg, b=nonneg, x=nonneg, y=nonneg)
def test_cmp_root_sum_monotone_in_x(p, a, b, x, y):
    lo, hi = min(x, y), max(x, y)
    assert cmp_root_sum(lo, a, b, p) <= cmp_root_sum(hi, a, b, p)
