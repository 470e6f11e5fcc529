"""Ultravaluations: pair tables w with w(f,g) = 0 for f <= g and the max
cut law w(f,g) = w(f^h,g) v w(f,gvh). The induced d(f,g) = w(f,g) v w(g,f)
satisfies the strong triangle inequality (re-checked exhaustively) and is
an ultrametric exactly when w separates (w(f,g) = 0 implying f <= g).

On a family of sets, every atom weighting kappa >= 0 produces one via
w(A,B) = 0 v max{kappa(x): x in A \\ B}, and every ultravaluation of that
shape is recovered by the separating-pair minimum in extract_kappa.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .errors import MetricLatticeError, ReconstructionMismatch, UltraAxiomViolated
from .generators import SetLattice
from .valuation import (
    MetricTable,
    check_metric_axioms,
    freeze_table,
    w_nonnegative_violations,
    w_positive_violations,
)


def from_kappa(S: SetLattice, kappa):
    """Pair table w(A,B) = 0 v max{kappa(x): x in A \\ B}."""
    missing = [a for a in S.ground if a not in kappa]
    if missing:
        raise ValueError(f"kappa missing atoms: {missing}")
    extra = [a for a in kappa if a not in S.ground]
    if extra:
        raise ValueError(f"kappa has unknown atoms: {extra}")
    kv = {a: Fraction(kappa[a]) for a in S.ground}
    if any(x < 0 for x in kv.values()):
        raise ValueError("kappa must be nonnegative")

    # group atom bits by weight, heaviest first; w scans groups until one hits
    by_weight = {}
    for k, a in enumerate(S.ground):
        by_weight.setdefault(kv[a], 0)
        by_weight[kv[a]] |= 1 << k
    groups = sorted(by_weight.items(), key=lambda kv_: kv_[0], reverse=True)

    n = len(S.members)
    w = []
    for f in range(n):
        row = []
        for g in range(n):
            diff = S.members[f] & ~S.members[g]
            val = Fraction(0)
            for weight, mask in groups:
                if diff & mask:
                    val = weight
                    break
            row.append(val)
        w.append(row)
    w = freeze_table(w)
    bad = check_ultravaluation(S.lattice, w)
    if bad:
        raise MetricLatticeError(
            f"kappa table failed an ultravaluation axiom: {bad[0]}", witness=bad
        )
    return w


def check_ultravaluation(L, w):
    """Tagged violations: ("negative", f, g), ("leq-zero", f, g) for
    f <= g with w != 0, and ("cut", f, g, h) against the max cut law."""
    w = freeze_table(w)
    if len(w) != L.n or any(len(r) != L.n for r in w):
        raise ValueError("pair table size mismatch")
    out = [("negative", f, g) for f, g in w_nonnegative_violations(w)]
    for f in range(L.n):
        for g in range(L.n):
            if w[f][g] != 0 and L.leq(f, g):
                out.append(("leq-zero", f, g))
    if out:
        return out
    out.extend(("cut", f, g, h) for f, g, h in kernels.ultra_cut_violations(L, w))
    return out


def metric_from_ultravaluation(L, w) -> MetricTable:
    """d(f,g) = w(f,g) v w(g,f). Raises UltraAxiomViolated on a bad table;
    the strong triangle inequality on the result is asserted exhaustively."""
    w = freeze_table(w)
    bad = check_ultravaluation(L, w)
    if bad:
        raise UltraAxiomViolated(
            f"ultravaluation axioms fail, first witness {bad[0]}", witness=bad
        )
    n = L.n
    d = [[max(w[f][g], w[g][f]) for g in range(n)] for f in range(n)]
    positive = not w_positive_violations(L, w)
    m = MetricTable(d, kind="ultravaluation", is_metric=positive)
    bad = check_metric_axioms(m, strong=True)
    if bad:
        raise MetricLatticeError(
            f"ultravaluation metric failed an axiom: {bad[0]}", witness=bad
        )
    zero_off_diag = any(
        d[f][g] == 0 for f in range(n) for g in range(n) if f != g
    )
    if positive == zero_off_diag:
        raise MetricLatticeError(
            "separation flag disagrees with the zero pattern of d"
        )
    return m


def extract_kappa(S: SetLattice, w):
    """Recover an atom weighting from a pair table of the from_kappa shape:
    kappa(x) = min{w(C,D): x in C, x not in D}, 0 when nothing separates x.
    ReconstructionMismatch if the regenerated table differs anywhere."""
    w = freeze_table(w)
    n = len(S.members)
    if len(w) != n:
        raise ValueError("pair table size mismatch")
    kappa = {}
    for k, atom in enumerate(S.ground):
        bit = 1 << k
        best = None
        for c in range(n):
            if not S.members[c] & bit:
                continue
            for dd in range(n):
                if S.members[dd] & bit:
                    continue
                if best is None or w[c][dd] < best:
                    best = w[c][dd]
        kappa[atom] = Fraction(0) if best is None else best
    if any(x < 0 for x in kappa.values()):
        raise ReconstructionMismatch(
            "extracted weights are negative; table is not of kappa shape",
            witness=kappa,
        )
    regen = from_kappa(S, kappa)
    for f in range(n):
        for g in range(n):
            if regen[f][g] != w[f][g]:
                raise ReconstructionMismatch(
                    f"table is not generated by any atom weighting; first "
                    f"mismatch at ({S.lattice.labels[f]}, {S.lattice.labels[g]}): "
                    f"{regen[f][g]} != {w[f][g]}",
                    witness=(f, g, regen[f][g], w[f][g]),
                )
    return kappa
