"""Modular valuations, their metrics, and difference-valuation round trips.

A valuation v is modular when v(f)+v(g) = v(f^g)+v(fvg) for all pairs. The
induced distance d(f,g) = v(fvg) - v(f^g) is a pseudo-metric once v is
isotone, and a metric exactly when v is positive (strictly isotone); both
facts are re-checked here on every construction, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .errors import (
    CutLawViolated,
    MetricLatticeError,
    NoBottom,
    NotIsotone,
    NotModular,
)
from .exactcmp import root_sum_le

CERTIFIED_KINDS = ("valuation", "ultravaluation", "intervaluation")


def freeze_table(values):
    return tuple(tuple(Fraction(x) for x in row) for row in values)


@dataclass(frozen=True)
class MetricTable:
    """Pairwise distance table plus its construction certificate.

    kind: "valuation", "ultravaluation", "intervaluation" (law-checked
    constructions) or "raw" (no certificate). power=p means entries hold
    d**p, the exact storage for weighted p-norm tables. is_metric is True
    when the table separates distinct elements.
    """

    values: tuple
    kind: str = "raw"
    is_metric: bool = False
    power: int = 1
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", freeze_table(self.values))
        if self.kind not in CERTIFIED_KINDS + ("raw",):
            raise ValueError(f"unknown table kind {self.kind!r}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, fg):
        f, g = fg
        return self.values[f][g]


def check_metric_axioms(m: MetricTable, strong: bool = False):
    """Pseudo-metric axiom violations, tagged. Triangle entries compare
    exactly even for power>1 tables (p-th-root sums). strong=True checks
    the ultrametric triangle instead."""
    v = m.values
    n = m.n
    out = []
    for f in range(n):
        if v[f][f] != 0:
            out.append(("diagonal", f))
        for g in range(f + 1, n):
            if v[f][g] != v[g][f]:
                out.append(("symmetry", f, g))
            if v[f][g] < 0:
                out.append(("negative", f, g))
    if out:
        return out  # triangle scans assume a symmetric nonnegative table
    if strong:
        out.extend(("strong-triangle", f, g, h) for f, g, h in kernels.strong_triangle_violations(v))
    elif m.power == 1:
        out.extend(("triangle", f, g, h) for f, g, h in kernels.triangle_violations(v))
    else:
        for f in range(n):
            for g in range(f + 1, n):
                for h in range(n):
                    if not root_sum_le(v[f][g], v[f][h], v[h][g], m.power):
                        out.append(("triangle", f, g, h))
    return out


class ValuationClass(NamedTuple):
    isotone: bool
    positive: bool


def check_modular_law(L, values):
    """(f, g, lhs, rhs) for every pair breaking v(f)+v(g) = v(f^g)+v(fvg)."""
    values = [Fraction(x) for x in values]
    if len(values) != L.n:
        raise ValueError("valuation length mismatch")
    out = []
    for f, g in kernels.modular_violations(L, values):
        lhs = values[f] + values[g]
        rhs = values[L.meet(f, g)] + values[L.join(f, g)]
        out.append((f, g, lhs, rhs))
    return out


def classify_valuation(L, values) -> ValuationClass:
    """Isotone: never decreases upward. Positive: strictly increases.
    Checked on covering pairs, which settles the full order by transitivity."""
    values = [Fraction(x) for x in values]
    isotone = positive = True
    for p in range(L.n):
        vp = values[p]
        for q in L.lower_covers(p):
            if values[q] > vp:
                isotone = False
            if values[q] >= vp:
                positive = False
    return ValuationClass(isotone, positive)


def metric_from_valuation(L, values) -> MetricTable:
    """d(f,g) = v(fvg) - v(f^g) for a modular isotone valuation.

    Pseudo-metric axioms and the bottom anchoring v(f) = v(0) + d(f,0) are
    re-verified exhaustively; is_metric mirrors positivity and is checked
    against the actual zero pattern in both directions.
    """
    values = [Fraction(x) for x in values]
    bad = check_modular_law(L, values)
    if bad:
        f, g, lhs, rhs = bad[0]
        raise NotModular(
            f"modular law fails at ({L.labels[f]}, {L.labels[g]}): {lhs} != {rhs}",
            witness=bad,
        )
    cls = classify_valuation(L, values)
    if not cls.isotone:
        raise NotIsotone("valuation decreases along the order", witness=cls)
    jn, mn = L.join_np, L.meet_np
    d = [
        [values[int(jn[f, g])] - values[int(mn[f, g])] for g in range(L.n)]
        for f in range(L.n)
    ]
    m = MetricTable(d, kind="valuation", is_metric=cls.positive)
    bad = check_metric_axioms(m)
    if bad:
        raise MetricLatticeError(
            f"valuation metric failed a pseudo-metric axiom: {bad[0]}", witness=bad
        )
    for f in range(L.n):
        if values[f] != values[L.bottom] + m.values[f][L.bottom]:
            raise MetricLatticeError(
                f"bottom anchoring v(f) = v(0) + d(f,0) fails at {L.labels[f]}",
                witness=f,
            )
    _verify_separation_flag(L, m)
    return m


def _verify_separation_flag(L, m: MetricTable):
    """is_metric must match the actual zero pattern, both directions."""
    zero_pair = None
    for f in range(m.n):
        for g in range(f + 1, m.n):
            if m.values[f][g] == 0:
                zero_pair = (f, g)
                break
        if zero_pair:
            break
    if m.is_metric and zero_pair:
        f, g = zero_pair
        raise MetricLatticeError(
            f"claimed metric does not separate {L.labels[f]} and {L.labels[g]}",
            witness=zero_pair,
        )
    if not m.is_metric and not zero_pair:
        raise MetricLatticeError(
            "claimed pseudo-metric actually separates all elements"
        )


def difference_valuation(L, values):
    """w(f,g) = v(f) - v(f^g) as a pair table; the cut law
    w(f,g) = w(f,gvh) + w(f^h,g) is verified and CutLawViolated raised
    with the first witness if it fails (it can, off distributive lattices)."""
    values = [Fraction(x) for x in values]
    if len(values) != L.n:
        raise ValueError("valuation length mismatch")
    mn = L.meet_np
    w = freeze_table(
        [[values[f] - values[int(mn[f, g])] for g in range(L.n)] for f in range(L.n)]
    )
    bad = check_cut_law(L, w)
    if bad:
        f, g, h, lhs, rhs = bad[0]
        raise CutLawViolated(
            f"cut law fails at ({L.labels[f]}, {L.labels[g]}, {L.labels[h]}): "
            f"{lhs} != {rhs}",
            witness=bad,
        )
    return w


def check_cut_law(L, w):
    """(f, g, h, lhs, rhs) for every triple with
    w(f,g) != w(f,gvh) + w(f^h,g)."""
    w = freeze_table(w)
    out = []
    for f, g, h in kernels.additive_cut_violations(L, w):
        lhs = w[f][g]
        rhs = w[f][L.join(g, h)] + w[L.meet(f, h)][g]
        out.append((f, g, h, lhs, rhs))
    return out


def valuation_from_difference(L, w, base_value=0):
    """Rebuild v from its difference table: v(f) = c + w(f, bottom).

    Verifies the cut law first (CutLawViolated) and the round trip
    difference_valuation(result) == w afterwards.
    """
    if getattr(L, "bottom", None) is None:
        raise NoBottom("lattice has no bottom element")
    w = freeze_table(w)
    bad = check_cut_law(L, w)
    if bad:
        f, g, h, lhs, rhs = bad[0]
        raise CutLawViolated(
            f"cut law fails at ({L.labels[f]}, {L.labels[g]}, {L.labels[h]}): "
            f"{lhs} != {rhs}",
            witness=bad,
        )
    base_value = Fraction(base_value)
    values = [base_value + w[f][L.bottom] for f in range(L.n)]
    if difference_valuation(L, values) != w:
        raise MetricLatticeError("difference table is not generated by any valuation")
    return values


def w_nonnegative_violations(w):
    w = freeze_table(w)
    return [
        (f, g) for f, row in enumerate(w) for g, x in enumerate(row) if x < 0
    ]


def w_positive_violations(L, w):
    """Pairs f !<= g with w(f,g) = 0; empty exactly when the table is
    positive (separating)."""
    w = freeze_table(w)
    return [
        (f, g)
        for f in range(L.n)
        for g in range(L.n)
        if w[f][g] == 0 and not L.leq(f, g)
    ]
