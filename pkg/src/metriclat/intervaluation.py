"""Intervaluations: pair tables w with w(f,g) = 0 for f <= g, sandwiched by
a combine op:  w(f,gvh) o w(f^h,g)  <=  w(f,g)  <=  w(f,gvh) + w(f^h,g).

Supported ops: ADD (r+s), MAX (r v s), LP(p) ((r^p+s^p)^(1/p), p in 1..3).
LP tables are stored and compared in p-th powers, so every check is exact;
the only place roots meet sums (the sandwich upper bound and the triangle
inequality of d) goes through exactcmp.cmp_root_sum.

The op axioms

    (1) r o 0 = r
    (2) r o t <= (r+s) o (t+u) <= (r o t) + (s o u)
    (3) r v s <= r o s

are certified symbolically for ADD and MAX by a small linear-form engine
(all their branch cases are linear), and sampled exactly for LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .errors import IntervaluationAxiomViolated, MetricLatticeError
from .exactcmp import cmp_root_sum
from .valuation import (
    MetricTable,
    _verify_separation_flag,
    check_metric_axioms,
    freeze_table,
    w_nonnegative_violations,
    w_positive_violations,
)


@dataclass(frozen=True)
class CombineOp:
    kind: str
    p: int = 1

    def __post_init__(self):
        if self.kind not in ("add", "max", "lp"):
            raise ValueError(f"unknown combine op {self.kind!r}")
        if self.kind == "lp" and self.p not in (1, 2, 3):
            raise ValueError("LP supports integer p in {1, 2, 3} only")

    @property
    def power(self) -> int:
        """Exponent of the stored representation: LP tables hold p-th powers."""
        return self.p if self.kind == "lp" else 1

    @property
    def name(self) -> str:
        return f"lp{self.p}" if self.kind == "lp" else self.kind

    def combine_power(self, a, b):
        """(a o b) ** power for plain nonnegative values a, b."""
        a, b = Fraction(a), Fraction(b)
        if self.kind == "add":
            return a + b
        if self.kind == "max":
            return max(a, b)
        return a**self.p + b**self.p

    def __repr__(self):
        return f"CombineOp({self.name})"


ADD = CombineOp("add")
MAX = CombineOp("max")


def LP(p: int) -> CombineOp:
    return CombineOp("lp", p)


@dataclass(frozen=True)
class Intervaluation:
    """Pair table plus its combine op. For LP(p) ops the entries are the
    p-th powers of the w values; ADD/MAX tables are plain."""

    w: tuple
    op: CombineOp

    def __post_init__(self):
        object.__setattr__(self, "w", freeze_table(self.w))

    @property
    def n(self) -> int:
        return len(self.w)


# -- symbolic certificates for the op axioms (ADD / MAX) -------------------------
#
# Linear forms are dicts var -> Fraction with "" holding the constant.
# Expression trees: dict | ("add", a, b) | ("neg", a) | ("max", a, b).
# A max splits into two cases, each contributing the constraint that its
# branch dominates; certification eliminates one variable per constraint
# against a fresh nonnegative slack and accepts when every coefficient of
# the residual form is nonnegative (all variables range over [0, oo)).


def _ladd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
        if out[k] == 0:
            del out[k]
    return out


def _lneg(a):
    return {k: -v for k, v in a.items()}


def _cases(tree):
    if isinstance(tree, dict):
        return [(tree, [])]
    tag = tree[0]
    if tag == "neg":
        return [(_lneg(lin), cons) for lin, cons in _cases(tree[1])]
    if tag == "add":
        out = []
        for la, ca in _cases(tree[1]):
            for lb, cb in _cases(tree[2]):
                out.append((_ladd(la, lb), ca + cb))
        return out
    if tag == "max":
        out = []
        for la, ca in _cases(tree[1]):
            for lb, cb in _cases(tree[2]):
                out.append((la, ca + cb + [_ladd(la, _lneg(lb))]))
                out.append((lb, ca + cb + [_ladd(lb, _lneg(la))]))
        return out
    raise ValueError(f"bad expression node {tag!r}")


def _subst(form, var, replacement):
    if var not in form:
        return form
    k = form[var]
    out = {a: b for a, b in form.items() if a != var}
    return _ladd(out, {a: k * b for a, b in replacement.items()})


def _certify_case(goal, constraints, depth=0):
    constraints = [c for c in constraints if c]
    for c in constraints:
        coeffs = {k: v for k, v in c.items() if k != ""}
        if not coeffs and c.get("", Fraction(0)) < 0:
            return True  # contradictory constraint: empty case region
    if not constraints:
        return all(v >= 0 for v in goal.values())
    if depth > 8:
        return False
    for i, c in enumerate(constraints):
        rest = constraints[:i] + constraints[i + 1 :]
        moves = []
        coeffs = {k: v for k, v in c.items() if k != ""}
        for var, cv in coeffs.items():
            if cv > 0:
                slack = {f"_s{depth}": Fraction(1, 1)}
                repl = _ladd(slack, _lneg(_subst(c, var, {})))
                repl = {k: v / cv for k, v in repl.items()}
                moves.append((var, repl))
        neg_vars = [v for v, cv in coeffs.items() if cv < 0]
        if (
            len(coeffs) == 1
            and len(neg_vars) == 1
            and c.get("", Fraction(0)) == 0
        ):
            moves.append((neg_vars[0], {}))  # -c*x >= 0 with x >= 0 forces x = 0
        for var, repl in moves:
            g2 = _subst(goal, var, repl)
            r2 = [_subst(rc, var, repl) for rc in rest]
            if _certify_case(g2, r2, depth + 1):
                return True
        if _certify_case(goal, rest, depth + 1):  # constraints may be dropped
            return True
    return False


def _certify_nonneg(tree) -> bool:
    return all(_certify_case(goal, cons) for goal, cons in _cases(tree))


def _op_tree(op: CombineOp, a, b):
    return ("add", a, b) if op.kind == "add" else ("max", a, b)


def op_axiom_certificates(op: CombineOp):
    """Names of op axioms that fail symbolic certification; [] for ADD/MAX.
    LP ops are out of scope here (their axiom (2) is not piecewise linear)."""
    if op.kind == "lp":
        raise ValueError("symbolic certificates cover add/max only")
    r, s, t, u = ({v: Fraction(1)} for v in "rstu")
    zero = {}
    failed = []
    ident = ("add", _op_tree(op, r, zero), ("neg", r))
    if not (_certify_nonneg(ident) and _certify_nonneg(("neg", ident))):
        failed.append("identity")
    mono = ("add", _op_tree(op, _ladd(r, s), _ladd(t, u)), ("neg", _op_tree(op, r, t)))
    if not _certify_nonneg(mono):
        failed.append("monotone")
    subadd = (
        "add",
        ("add", _op_tree(op, r, t), _op_tree(op, s, u)),
        ("neg", _op_tree(op, _ladd(r, s), _ladd(t, u))),
    )
    if not _certify_nonneg(subadd):
        failed.append("subadditive")
    dom = ("add", _op_tree(op, r, s), ("neg", ("max", r, s)))
    if not _certify_nonneg(dom):
        failed.append("dominates-max")
    return failed


def check_op_axioms(op: CombineOp, samples, symbolic: bool = True):
    """Violations of the combine-op axioms.

    ADD/MAX get a symbolic proof over all nonnegative reals (entries
    ("symbolic", axiom) on failure); every op is additionally checked
    exactly on the given (r,s,t,u) quadruples."""
    out = []
    if symbolic and op.kind != "lp":
        out.extend(("symbolic", name) for name in op_axiom_certificates(op))
    p = op.power
    for quad in samples:
        r, s, t, u = (Fraction(x) for x in quad)
        if any(x < 0 for x in (r, s, t, u)):
            raise ValueError("op axiom samples must be nonnegative")
        if op.combine_power(r, 0) != r**p:
            out.append(("identity", quad))
        big = op.combine_power(r + s, t + u)
        if op.combine_power(r, t) > big:
            out.append(("monotone", quad))
        if op.kind == "lp":
            if cmp_root_sum(big, op.combine_power(r, t), op.combine_power(s, u), p) > 0:
                out.append(("subadditive", quad))
        else:
            if big > op.combine_power(r, t) + op.combine_power(s, u):
                out.append(("subadditive", quad))
        if max(r, s) ** p > op.combine_power(r, s):
            out.append(("dominates-max", quad))
    return out


# -- table checks ------------------------------------------------------------------


class IntervalCheck(NamedTuple):
    violations: tuple
    positive: bool


def check_intervaluation(L, iv: Intervaluation) -> IntervalCheck:
    """Axiom violations of the pair table, with positivity reported
    separately (a nonseparating table is legal, it just yields a
    pseudo-metric). Tags: "negative", "leq-zero", "cut-lower", "cut-upper"."""
    w = iv.w
    if len(w) != L.n:
        raise ValueError("pair table size mismatch")
    out = [("negative", f, g) for f, g in w_nonnegative_violations(w)]
    for f in range(L.n):
        for g in range(L.n):
            if w[f][g] != 0 and L.leq(f, g):
                out.append(("leq-zero", f, g))
    if not out:
        p = iv.op.power
        if p == 1:
            for f, g, h, side in kernels.sandwich_violations(L, w, iv.op.kind, iv.op.p):
                out.append(("cut-lower" if side == 0 else "cut-upper", f, g, h))
        else:
            # entries are p-th powers: the lower bound is plain addition on
            # powers, the upper bound compares p-th roots
            for f, g, h, side in kernels.sandwich_violations(L, w, "add", 1):
                if side == 0:
                    out.append(("cut-lower", f, g, h))
            jn, mn = L.join_np, L.meet_np
            for f in range(L.n):
                for g in range(L.n):
                    x = w[f][g]
                    for h in range(L.n):
                        a = w[f][int(jn[g, h])]
                        b = w[int(mn[f, h])][g]
                        if cmp_root_sum(x, a, b, p) > 0:
                            out.append(("cut-upper", f, g, h))
    positive = not w_positive_violations(L, w)
    return IntervalCheck(tuple(out), positive)


def metric_from_intervaluation(L, iv: Intervaluation) -> MetricTable:
    """d(f,g) = w(f,g) o w(g,f), stored to the op's power. Raises
    IntervaluationAxiomViolated on a bad table; pseudo-metric axioms on the
    result (p-th-root triangle for LP) are asserted exhaustively."""
    chk = check_intervaluation(L, iv)
    if chk.violations:
        raise IntervaluationAxiomViolated(
            f"intervaluation axioms fail for {iv.op.name}, first witness "
            f"{chk.violations[0]}",
            witness=chk.violations,
        )
    w = iv.w
    if iv.op.kind == "max":
        d = [[max(w[f][g], w[g][f]) for g in range(L.n)] for f in range(L.n)]
    else:  # add, or lp in powers: both are entry sums
        d = [[w[f][g] + w[g][f] for g in range(L.n)] for f in range(L.n)]
    m = MetricTable(
        d, kind="intervaluation", is_metric=chk.positive, power=iv.op.power
    )
    bad = check_metric_axioms(m)
    if bad:
        raise MetricLatticeError(
            f"intervaluation metric failed an axiom: {bad[0]}", witness=bad
        )
    _verify_separation_flag(L, m)
    return m


def check_prop_intervaluation(L, iv: Intervaluation):
    """Violations of the derived identities
    w(f,g) = w(fvg,g) = w(f,f^g) = d(fvg,g); empty on any valid table."""
    w = iv.w
    out = []
    for f in range(L.n):
        for g in range(L.n):
            a = w[f][g]
            j, mt = L.join(f, g), L.meet(f, g)
            if w[j][g] != a:
                out.append(("join-identity", f, g))
            if w[f][mt] != a:
                out.append(("meet-identity", f, g))
            if iv.op.kind == "max":
                dpow = max(w[j][g], w[g][j])
            else:
                dpow = w[j][g] + w[g][j]
            if dpow != a:
                out.append(("metric-identity", f, g))
    return out


def w_from_metric(L, d: MetricTable):
    """Candidate pair table w(f,g) = d(fvg, g) read off a plain metric."""
    if d.power != 1:
        raise ValueError("w_from_metric needs a plain (power-1) table")
    v = d.values
    return freeze_table(
        [[v[L.join(f, g)][g] for g in range(L.n)] for f in range(L.n)]
    )


@dataclass(frozen=True)
class OpFit:
    op: CombineOp
    ok: bool
    positive: bool
    violations: tuple


DEFAULT_OPS = (ADD, MAX, LP(2), LP(3))


def compatible_ops(L, d: MetricTable, ops=DEFAULT_OPS):
    """Which combine ops realize d as an intervaluation metric via
    w(f,g) = d(fvg,g)? One OpFit per candidate, in the given order; ok
    means the axioms hold AND d is recovered exactly."""
    base = w_from_metric(L, d)
    out = []
    for op in ops:
        p = op.power
        w = [[x**p for x in row] for row in base] if p != 1 else base
        iv = Intervaluation(w, op)
        chk = check_intervaluation(L, iv)
        violations = list(chk.violations)
        for f in range(L.n):
            for g in range(L.n):
                dpow = op.combine_power(base[f][g], base[g][f])
                if dpow != d.values[f][g] ** p:
                    violations.append(("recovery", f, g))
        out.append(OpFit(op, not violations, chk.positive, tuple(violations)))
    return out


def pointwise_sup_intervaluation(L, point_values=None) -> Intervaluation:
    """w(f,g) = max over coordinates of (f_i - g_i) v 0, with op MAX; the
    canonical intervaluation of a lattice whose join/meet are pointwise."""
    pv = point_values if point_values is not None else L.point_values
    if pv is None:
        raise ValueError("lattice carries no per-element value tuples")
    pv = [tuple(Fraction(x) for x in row) for row in pv]
    if len(pv) != L.n:
        raise ValueError("point_values length mismatch")
    zero = Fraction(0)
    w = []
    for f in range(L.n):
        row = []
        for g in range(L.n):
            best = zero
            for a, b in zip(pv[f], pv[g]):
                if a - b > best:
                    best = a - b
            row.append(best)
        w.append(row)
    iv = Intervaluation(w, MAX)
    chk = check_intervaluation(L, iv)
    if chk.violations:
        raise MetricLatticeError(
            f"pointwise table failed an intervaluation axiom: {chk.violations[0]}",
            witness=chk.violations,
        )
    return iv
