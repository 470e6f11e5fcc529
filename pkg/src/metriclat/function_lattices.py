"""Lattices of grid-quantized 1-Lipschitz functions on a finite metric
space, and the metrics that live on them.

Functions take values in {0, step, 2*step, ..., max_value} and satisfy
|f(x)-f(y)| <= dist(x,y) (pointwise min/max closed, so they form a
lattice). Distances must be integer multiples of the step: that keeps the
peak functions Lambda(x,r)(y) = (r - dist(x,y)) v 0 exactly on the grid.

Metrics: sup (pointwise-sup intervaluation with MAX), weighted l1
(valuation metric of v(f) = sum mu(x) f(x)), weighted lp in p-th powers
(LP intervaluation), and the hypograph family: peak (atom weight = level),
outer basepoint (weight = dist(x, x0), a pseudo-metric) and inner
basepoint (weight = 1/(1 + dist(x, x0)), decreasing in the distance, so a
true metric). Every constructor builds through the law-checked pipeline
and re-derives the table from the direct formula as a second route.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import GridMismatch, NoBasepoint, TooLarge
from .generators import set_lattice_from_members
from .intervaluation import LP, Intervaluation, metric_from_intervaluation, pointwise_sup_intervaluation
from .lattice import MAX_ELEMENTS, FiniteLattice
from .rational import rat_str
from .ultravaluation import from_kappa, metric_from_ultravaluation
from .valuation import MetricTable, metric_from_valuation

OUTER = "outer"
INNER = "inner"


@dataclass(frozen=True)
class FiniteMetricSpace:
    labels: tuple
    dist: tuple
    basepoint: int | None = None

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if not labels or len(set(labels)) != len(labels):
            raise ValueError("point labels must be nonempty and distinct")
        n = len(labels)
        d = tuple(tuple(Fraction(x) for x in row) for row in self.dist)
        if len(d) != n or any(len(r) != n for r in d):
            raise ValueError("distance table must be square over the points")
        for i in range(n):
            if d[i][i] != 0:
                raise ValueError(f"dist({labels[i]},{labels[i]}) != 0")
            for j in range(i + 1, n):
                if d[i][j] != d[j][i]:
                    raise ValueError("distance table must be symmetric")
                if d[i][j] <= 0:
                    raise ValueError("distinct points need positive distance")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if d[i][j] > d[i][k] + d[k][j]:
                        raise ValueError(
                            f"triangle fails at ({labels[i]},{labels[j]},{labels[k]})"
                        )
        if self.basepoint is not None and not (0 <= self.basepoint < n):
            raise ValueError("basepoint out of range")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dist", d)

    @property
    def n(self) -> int:
        return len(self.labels)

    def point(self, x) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if not (0 <= x < self.n):
                raise ValueError(f"point index {x} out of range")
            return x
        try:
            return self.labels.index(str(x))
        except ValueError:
            raise KeyError(f"no point labelled {x!r}") from None


@dataclass(frozen=True, eq=False)
class GridLipschitzLattice:
    space: FiniteMetricSpace
    step: Fraction
    max_value: Fraction
    weights: tuple
    levels: tuple
    functions: tuple
    lattice: FiniteLattice = field(repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {f: i for i, f in enumerate(self.functions)}
        )

    @property
    def n(self) -> int:
        return len(self.functions)

    def index_of(self, values) -> int:
        key = tuple(Fraction(v) for v in values)
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"no such function: {key}") from None


def _check_multiple(value, step, what):
    q = Fraction(value) / step
    if q.denominator != 1:
        raise GridMismatch(f"{what} {rat_str(Fraction(value))} is not a multiple "
                           f"of the step {rat_str(step)}")
    return q.numerator


def build_lipschitz_lattice(space: FiniteMetricSpace, step, max_value,
                            weights=None) -> GridLipschitzLattice:
    step = Fraction(step)
    max_value = Fraction(max_value)
    if step <= 0 or max_value <= 0:
        raise ValueError("step and max_value must be positive")
    k = _check_multiple(max_value, step, "max_value")
    for i in range(space.n):
        for j in range(i + 1, space.n):
            _check_multiple(space.dist[i][j], step, f"dist({space.labels[i]},{space.labels[j]})")
    if weights is None:
        weights = [Fraction(1)] * space.n
    weights = tuple(Fraction(x) for x in weights)
    if len(weights) != space.n:
        raise ValueError("one weight per point")
    if any(x <= 0 for x in weights):
        raise ValueError("weights must be positive")

    if (k + 1) ** space.n > MAX_ELEMENTS:
        raise TooLarge(
            f"{k + 1}^{space.n} grid functions exceed the cap of {MAX_ELEMENTS}"
        )
    levels = tuple(step * i for i in range(k + 1))
    dist = space.dist
    functions = []
    for cand in product(levels, repeat=space.n):
        ok = True
        for i in range(space.n):
            for j in range(i + 1, space.n):
                diff = cand[i] - cand[j]
                if diff < 0:
                    diff = -diff
                if diff > dist[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            functions.append(cand)
    index = {f: i for i, f in enumerate(functions)}
    n = len(functions)
    for a in range(n):
        for b in range(a + 1, n):
            fa, fb = functions[a], functions[b]
            hi = tuple(max(x, y) for x, y in zip(fa, fb))
            lo = tuple(min(x, y) for x, y in zip(fa, fb))
            assert hi in index and lo in index, "grid family not min/max closed"

    up = [0] * n
    for a in range(n):
        fa = functions[a]
        for b in range(n):
            if all(x <= y for x, y in zip(fa, functions[b])):
                up[a] |= 1 << b
    labels = ["(" + ",".join(rat_str(v) for v in f) + ")" for f in functions]
    lat = FiniteLattice(up, labels, point_values=functions)
    return GridLipschitzLattice(
        space, step, max_value, weights, levels, tuple(functions), lat
    )


def lambda_cone(FL: GridLipschitzLattice, x, r) -> int:
    """Element index of Lambda(x,r)(y) = (r - dist(x,y)) v 0."""
    xi = FL.space.point(x)
    r = Fraction(r)
    if not (0 <= r <= FL.max_value):
        raise ValueError("cone height must lie in [0, max_value]")
    _check_multiple(r, FL.step, "cone height")
    zero = Fraction(0)
    values = tuple(
        max(zero, r - FL.space.dist[xi][y]) for y in range(FL.space.n)
    )
    return FL.index_of(values)


def all_lambda_cones(FL: GridLipschitzLattice) -> frozenset:
    """Indices of every peak function Lambda(x, r), r running over the grid
    levels (r = 0 gives the bottom)."""
    return frozenset(
        lambda_cone(FL, x, r) for x in range(FL.space.n) for r in FL.levels
    )


# -- hypographs -------------------------------------------------------------


def _hypograph_atoms(FL: GridLipschitzLattice):
    """(atom label, point index, level) for every grid atom; levels include 0."""
    out = []
    for xi, lbl in enumerate(FL.space.labels):
        for lv in FL.levels:
            out.append((f"{lbl}@{rat_str(lv)}", xi, lv))
    return out


def hypograph(FL: GridLipschitzLattice, i: int) -> frozenset:
    """Atom set {(point label, level): level <= f(point)} of function i."""
    f = FL.functions[i]
    return frozenset(
        (lbl, lv) for lbl, xi, lv in _hypograph_atoms(FL) if lv <= f[xi]
    )


def hypograph_set_lattice(FL: GridLipschitzLattice):
    """The family of hypographs as a SetLattice whose member order matches
    FL.lattice element order, plus {atom label: (point index, level)}."""
    atoms = _hypograph_atoms(FL)
    ground = sorted(a[0] for a in atoms)
    pos = {a: i for i, a in enumerate(ground)}
    info = {lbl: (xi, lv) for lbl, xi, lv in atoms}
    members = []
    for f in FL.functions:
        m = 0
        for lbl, xi, lv in atoms:
            if lv <= f[xi]:
                m |= 1 << pos[lbl]
        members.append(m)
    S = set_lattice_from_members(ground, members)
    return S, info


def _hypograph_ultra_metric(FL, atom_weight, note: str) -> MetricTable:
    """Ultravaluation metric with per-atom weight, cross-checked against
    the direct formula d(f,g) = max{weight(x): f(x) != g(x)} when the
    weight only depends on the point (it does for all callers but peak,
    which passes the level and gets the peak formula check instead)."""
    S, info = hypograph_set_lattice(FL)
    kappa = {a: atom_weight(xi, lv) for a, (xi, lv) in info.items()}
    w = from_kappa(S, kappa)
    m = metric_from_ultravaluation(S.lattice, w)
    return dataclasses.replace(m, note=note)


def peak_metric(FL: GridLipschitzLattice) -> MetricTable:
    """Hypograph ultravaluation metric with atom weight = level:
    d(f,g) = 0 v max{f(x) v g(x): f(x) != g(x)}."""
    m = _hypograph_ultra_metric(FL, lambda xi, lv: lv, "peak: atom weight = level")
    zero = Fraction(0)
    for a in range(FL.n):
        for b in range(FL.n):
            fa, fb = FL.functions[a], FL.functions[b]
            direct = zero
            for x in range(FL.space.n):
                if fa[x] != fb[x]:
                    hi = fa[x] if fa[x] > fb[x] else fb[x]
                    if hi > direct:
                        direct = hi
            assert m.values[a][b] == direct, "peak table disagrees with direct formula"
    return m


def basepoint_metric(FL: GridLipschitzLattice, mode: str) -> MetricTable:
    """Hypograph ultravaluation metric weighted by distance to the
    basepoint. OUTER: weight dist(x,x0), degenerate at x0 (pseudo-metric).
    INNER: weight 1/(1 + dist(x,x0)), strictly positive and decreasing in
    the distance, hence a metric."""
    if mode not in (OUTER, INNER):
        raise ValueError(f"mode must be {OUTER!r} or {INNER!r}")
    x0 = FL.space.basepoint
    if x0 is None:
        raise NoBasepoint("the metric space has no designated basepoint")
    dist = FL.space.dist
    if mode == OUTER:
        weight = [dist[x][x0] for x in range(FL.space.n)]
        note = "basepoint-outer: atom weight = dist(x, x0)"
    else:
        weight = [1 / (1 + dist[x][x0]) for x in range(FL.space.n)]
        note = "basepoint-inner: atom weight = 1/(1 + dist(x, x0))"
    m = _hypograph_ultra_metric(FL, lambda xi, lv: weight[xi], note)
    zero = Fraction(0)
    for a in range(FL.n):
        for b in range(FL.n):
            fa, fb = FL.functions[a], FL.functions[b]
            direct = zero
            for x in range(FL.space.n):
                if fa[x] != fb[x] and weight[x] > direct:
                    direct = weight[x]
            assert m.values[a][b] == direct, "basepoint table disagrees with direct formula"
    return m


# -- pointwise metrics --------------------------------------------------------


def sup_metric(FL: GridLipschitzLattice) -> MetricTable:
    """d(f,g) = max_x |f(x)-g(x)|, built as the MAX intervaluation metric of
    the pointwise-sup table and cross-checked against the direct formula."""
    iv = pointwise_sup_intervaluation(FL.lattice)
    m = metric_from_intervaluation(FL.lattice, iv)
    for a in range(FL.n):
        for b in range(FL.n):
            direct = max(
                (abs(x - y) for x, y in zip(FL.functions[a], FL.functions[b])),
                default=Fraction(0),
            )
            assert m.values[a][b] == direct, "sup table disagrees with direct formula"
    return dataclasses.replace(m, note="sup")


def l1_metric(FL: GridLipschitzLattice) -> MetricTable:
    """d(f,g) = sum_x mu(x) |f(x)-g(x)|, built as the valuation metric of
    v(f) = sum_x mu(x) f(x) and cross-checked against the direct formula."""
    v = [
        sum((mu * x for mu, x in zip(FL.weights, f)), Fraction(0))
        for f in FL.functions
    ]
    m = metric_from_valuation(FL.lattice, v)
    for a in range(FL.n):
        for b in range(FL.n):
            direct = sum(
                (mu * abs(x - y) for mu, x, y in
                 zip(FL.weights, FL.functions[a], FL.functions[b])),
                Fraction(0),
            )
            assert m.values[a][b] == direct, "l1 table disagrees with direct formula"
    return dataclasses.replace(m, note="l1")


def lp_metric(FL: GridLipschitzLattice, p: int) -> MetricTable:
    """d(f,g) = (sum_x mu(x) |f(x)-g(x)|^p)^(1/p), held in p-th powers.
    Built as the LP(p) intervaluation metric of the one-sided table
    w(f,g)^p = sum_x mu(x) ((f(x)-g(x)) v 0)^p; p in {2, 3}."""
    if p not in (2, 3):
        raise ValueError("lp_metric supports p in {2, 3}; use l1_metric for p=1")
    zero = Fraction(0)
    w = []
    for a in range(FL.n):
        row = []
        fa = FL.functions[a]
        for b in range(FL.n):
            fb = FL.functions[b]
            row.append(sum(
                (mu * (x - y) ** p for mu, x, y in zip(FL.weights, fa, fb) if x > y),
                zero,
            ))
        w.append(row)
    m = metric_from_intervaluation(FL.lattice, Intervaluation(w, LP(p)))
    for a in range(FL.n):
        for b in range(FL.n):
            direct = sum(
                (mu * abs(x - y) ** p for mu, x, y in
                 zip(FL.weights, FL.functions[a], FL.functions[b])),
                zero,
            )
            assert m.values[a][b] == direct, "lp table disagrees with direct formula"
    return dataclasses.replace(m, note=f"lp{p} (entries are p-th powers)")
