"""Irreducibility analysis and approximation bases.

p is d-irreducible when min(d(p,f), d(p,g)) <= d(p, fvg) for every pair;
on a finite lattice the pairwise test settles every finite subfamily as
well (induction on the family join; the exhaustive family check is kept
for cross-testing). mli(L, d) collects all such elements.

For a certified positive metric (a MetricTable built through a valuation,
ultravaluation or intervaluation check with is_metric), d(p, .) is
monotone decreasing on the strict down-set of p, so the test restricted
to pairs below p is equivalent and violations are exactly failures of the
equality min(d(p,f), d(p,g)) = d(p, fvg).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernels
from .errors import HypothesisUnmet, MetricLatticeError, MetricNotCertified, TooLarge
from .generators import SetLattice
from .ultravaluation import check_ultravaluation, from_kappa, metric_from_ultravaluation
from .valuation import (
    CERTIFIED_KINDS,
    MetricTable,
    check_modular_law,
    classify_valuation,
    metric_from_valuation,
)


def discrete_metric(L) -> MetricTable:
    """d(f,g) = 1 for f != g. Certified as an ultravaluation metric via
    w(f,g) = [f !<= g] whenever that table passes the max cut law (it does
    on distributive lattices); otherwise returned as a raw metric."""
    w = [
        [Fraction(0) if L.leq(f, g) else Fraction(1) for g in range(L.n)]
        for f in range(L.n)
    ]
    if not check_ultravaluation(L, w):
        return metric_from_ultravaluation(L, w)
    d = [
        [Fraction(0) if f == g else Fraction(1) for g in range(L.n)]
        for f in range(L.n)
    ]
    return MetricTable(
        d, kind="raw", is_metric=True,
        note="discrete (no ultravaluation certificate on this lattice)",
    )


def is_d_irreducible(L, m: MetricTable, p: int):
    """(True, None) or (False, first (f,g) with min(d(p,f), d(p,g)) > d(p, fvg))."""
    v = m.values
    dp = v[p]
    for f in range(L.n):
        df = dp[f]
        for g in range(f, L.n):
            if min(df, dp[g]) > dp[L.join(f, g)]:
                return False, (f, g)
    return True, None


def family_d_irreducible_witness(L, m: MetricTable, p: int):
    """Exhaustive version over every nonempty subfamily; None when p is
    completely d-irreducible, else a minimal-size violating family.
    Exponential: guarded to lattices of at most 16 elements."""
    if L.n > 16:
        raise TooLarge("family enumeration is exponential; lattice too large")
    v = m.values
    dp = v[p]
    elems = list(range(L.n))
    for size in range(1, L.n + 1):
        for fam in combinations(elems, size):
            if min(dp[f] for f in fam) > dp[L.join_of(fam)]:
                return fam
    return None


def mli(L, m: MetricTable) -> frozenset:
    """Elements d-irreducible against every pair (equivalently, every
    finite subfamily)."""
    wit = kernels.d_irreducible_witnesses(L, m.values)
    return frozenset(p for p in range(L.n) if wit[p] is None)


def is_d_irreducible_downset(L, m: MetricTable, p: int):
    """Pair test restricted to f, g strictly below p; valid only for
    certified positive metrics (MetricNotCertified otherwise), where it
    agrees with the unrestricted test and where non-violation is the
    equality min(d(p,f), d(p,g)) = d(p, fvg) (checked both ways)."""
    if m.kind not in CERTIFIED_KINDS or not m.is_metric:
        raise MetricNotCertified(
            "down-set test needs a positive valuation/ultravaluation/"
            "intervaluation metric"
        )
    v = m.values
    dp = v[p]
    below = sorted(L.down_set(p))
    for i, f in enumerate(below):
        df = dp[f]
        for g in below[i:]:
            lo = min(df, dp[g])
            dj = dp[L.join(f, g)]
            if lo > dj:
                return False, (f, g)
            if lo < dj:
                raise MetricLatticeError(
                    f"d(p, .) not monotone below p={L.labels[p]}; "
                    f"certificate cannot be trusted",
                    witness=(p, f, g),
                )
    return True, None


@dataclass(frozen=True)
class IrreducibilityReport:
    join_irreducible: tuple
    d_irreducible: tuple
    downset_chain: tuple
    witnesses: dict
    mli: frozenset


def irreducibility_report(L, m: MetricTable) -> IrreducibilityReport:
    wit = kernels.d_irreducible_witnesses(L, m.values)
    ji = L.join_irreducibles()
    if m.is_metric:
        # separating d: p = fvg with f,g < p puts d(p, fvg) = 0 under two
        # positive distances, so d-irreducible forces join-irreducible
        for p, w in enumerate(wit):
            if w is None and p not in ji:
                raise MetricLatticeError(
                    f"d-irreducible {L.labels[p]} is join-reducible under a "
                    f"separating metric",
                    witness=p,
                )
    return IrreducibilityReport(
        join_irreducible=tuple(p in ji for p in range(L.n)),
        d_irreducible=tuple(w is None for w in wit),
        downset_chain=tuple(L.is_chain(L.down_set(p)) for p in range(L.n)),
        witnesses={p: w for p, w in enumerate(wit) if w is not None},
        mli=frozenset(p for p, w in enumerate(wit) if w is None),
    )


def theorem_crosscheck(L, values):
    """For a positive valuation on a distributive lattice, d-irreducible
    must coincide with 'strict down-set is a chain' at every element.
    Returns the disagreeing elements as (p, d_irreducible, chain) tuples;
    the expectation is []. HypothesisUnmet when the preconditions fail."""
    if not L.is_distributive():
        raise HypothesisUnmet(
            "lattice is not distributive", witness=L.distributivity_witness()
        )
    bad = check_modular_law(L, values)
    if bad:
        raise HypothesisUnmet("valuation is not modular", witness=bad[0])
    cls = classify_valuation(L, values)
    if not cls.positive:
        raise HypothesisUnmet("valuation is not positive")
    m = metric_from_valuation(L, values)
    wit = kernels.d_irreducible_witnesses(L, m.values)
    out = []
    for p in range(L.n):
        irred = wit[p] is None
        chain = L.is_chain(L.down_set(p))
        if irred != chain:
            out.append((p, irred, chain))
    return out


def find_join_irred_not_d_irred(L, m: MetricTable):
    """Join-irreducible elements that fail d-irreducibility, with their
    witness pairs; nonempty only off the valuation-metric setting."""
    wit = kernels.d_irreducible_witnesses(L, m.values)
    return [
        (p, wit[p]) for p in sorted(L.join_irreducibles()) if wit[p] is not None
    ]


# -- the sorting-puzzle criterion -----------------------------------------------


def _natural_ground(S: SetLattice):
    if not all(isinstance(a, int) and not isinstance(a, bool) and a > 0 for a in S.ground):
        raise ValueError("puzzle criterion needs positive integer atoms")
    return S.ground


def puzzle_criterion(S: SetLattice, i: int) -> bool:
    """Caption rule for natural set lattices with atom weight = the number
    itself: member A is predicted d-irreducible unless the family has two
    distinct proper nonempty subsets B, C of A each containing a number
    larger than every number left in A \\ (B u C). (B = C is excluded:
    a repeated witness can never violate the pair inequality.)"""
    _natural_ground(S)
    a = S.members[i]
    proper = [
        mm for mm in S.members if mm and mm != a and mm & ~a == 0
    ]
    for bi, mb in enumerate(proper):
        for mc in proper[bi + 1:]:
            rest = a & ~(mb | mc)
            top = rest.bit_length()  # atoms sorted ascending: bit order is value order
            if mb.bit_length() > top and mc.bit_length() > top:
                return False
    return True


@dataclass(frozen=True)
class PuzzleReport:
    rows: tuple  # (member index, predicted, actual, witness pair or None)
    agree: int
    total: int

    @property
    def agreement(self) -> Fraction:
        return Fraction(self.agree, self.total)

    def disagreements(self):
        return tuple(r for r in self.rows if r[1] != r[2])


def puzzle_report(S: SetLattice) -> PuzzleReport:
    """Prediction vs brute force under the ultravaluation metric with
    kappa(x) = x. Disagreement witnesses are the first violating pair in
    element order (members are ordered by size then bit pattern, so the
    witness is minimal in that order)."""
    ground = _natural_ground(S)
    w = from_kappa(S, {x: Fraction(x) for x in ground})
    m = metric_from_ultravaluation(S.lattice, w)
    wit = kernels.d_irreducible_witnesses(S.lattice, m.values)
    rows = []
    agree = 0
    for i in range(S.lattice.n):
        predicted = puzzle_criterion(S, i)
        actual = wit[i] is None
        if predicted == actual:
            agree += 1
        rows.append((i, predicted, actual, wit[i]))
    return PuzzleReport(tuple(rows), agree, S.lattice.n)


# -- approximation bases ----------------------------------------------------------


@dataclass(frozen=True)
class BaseReport:
    base: frozenset
    radius: Fraction
    covered: bool
    mli_distances: dict  # p in mli -> min distance from p to the base itself
    uncovered: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        object.__setattr__(self, "uncovered", tuple(self.uncovered))


def r_base_check(L, m: MetricTable, base, radius) -> BaseReport:
    """Is every element within the radius of a join of base elements?

    Joins run over nonempty subfamilies (closure exploration). Distances
    compare in the table's power: the radius is raised to m.power. When
    the base covers, every completely d-irreducible element must lie
    within the radius of the base itself, not just of its join closure
    (min d(p, b_i) <= d(p, v b_i)); that consequence is asserted here and
    reported per element in mli_distances.
    """
    radius = Fraction(radius)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    rp = radius**m.power
    base = frozenset(base)
    for b in base:
        if not (0 <= b < L.n):
            raise ValueError(f"base element {b} out of range")
    closure = sorted(L.join_closure(base))
    v = m.values
    uncovered = []
    for f in range(L.n):
        if not any(v[f][c] <= rp for c in closure):
            uncovered.append(f)
    covered = not uncovered
    dists = {}
    for p in sorted(mli(L, m)):
        dists[p] = min((v[p][b] for b in base), default=None)
    if covered:
        for p, dist in dists.items():
            if dist is None or dist > rp:
                raise MetricLatticeError(
                    f"irreducible {L.labels[p]} exceeds the radius against "
                    f"the base; closure coverage should forbid this",
                    witness=(p, dist),
                )
    return BaseReport(base, radius, covered, dists, tuple(uncovered))


def minimal_zero_base(L, m: MetricTable) -> frozenset:
    """Greedy 0-base minimization: walk elements in descending index and
    drop any that stay within distance 0 of the join closure of the rest.
    The result is verified to cover at radius 0."""
    base = set(range(L.n))
    v = m.values
    for p in reversed(range(L.n)):
        rest = base - {p}
        closure = L.join_closure(rest)
        if any(v[p][c] == 0 for c in closure):
            base = rest
    report = r_base_check(L, m, base, 0)
    if not report.covered:
        raise MetricLatticeError(
            "greedy base lost coverage; metric is not join-compatible",
            witness=report.uncovered,
        )
    return frozenset(base)
