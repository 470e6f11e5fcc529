"""Exact comparison of p-th-root sums of nonnegative rationals.

Needed wherever LP-combined quantities meet additive bounds: the sandwich
upper bound and the triangle inequality for weighted p-norm tables. p is
limited to 1, 2, 3; those are decidable with one squaring resp. the sign
of the cubic resolvent, with no root extraction.
"""

from __future__ import annotations

from fractions import Fraction


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def cmp_root_sum(X, A, B, p: int) -> int:
    """Sign of X**(1/p) - (A**(1/p) + B**(1/p)) for nonnegative rationals.

    p=2: X <= A+B forces -1; otherwise compare (X-A-B)^2 with 4AB.
    p=3: with c = (X-A-B)/3, the target y = (AB)^(1/3) (A^(1/3)+B^(1/3))
    is the unique nonnegative root of g(t) = t^3 - 3ABt - AB(A+B), and g
    is <= 0 exactly on [0, y]; so for c >= 0 the answer is sign(g(c)).
    """
    X, A, B = Fraction(X), Fraction(A), Fraction(B)
    if X < 0 or A < 0 or B < 0:
        raise ValueError("root-sum comparison needs nonnegative inputs")
    if p == 1:
        return _sign(X - A - B)
    if p == 2:
        t = X - A - B
        if t < 0:
            return -1
        return _sign(t * t - 4 * A * B)
    if p == 3:
        c = Fraction(X - A - B, 3)
        if c < 0:
            return -1
        return _sign(c**3 - 3 * A * B * c - A * B * (A + B))
    raise ValueError("p must be 1, 2 or 3")


def root_sum_le(X, A, B, p: int) -> bool:
    """X**(1/p) <= A**(1/p) + B**(1/p), exactly."""
    return cmp_root_sum(X, A, B, p) <= 0
