"""Exact-arithmetic dispatch onto the law-scan kernels.

Rational tables are encoded as integers before any scan: comparison-only
laws get order-isomorphic rank codes, additive laws get common-denominator
scaled values. The compiled backend runs when it is importable, int64 has
room (checked with unbounded Python ints, including p-th powers for LP
sandwich scans), and METRICLAT_PURE_PYTHON is unset; otherwise the
pure-Python twin runs the identical scan.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # extension not built; pure fallback
    _kernels_c = None

_I64_LIMIT = 2**63 - 1


def compiled_available() -> bool:
    return _kernels_c is not None


def _pure_forced() -> bool:
    return os.environ.get("METRICLAT_PURE_PYTHON", "") not in ("", "0")


def active_backend() -> str:
    return "c" if compiled_available() and not _pure_forced() else "python"


def rank_encode(tables):
    """Joint order-isomorphic integer codes for one or more value tables."""
    vals = sorted({Fraction(x) for t in tables for row in t for x in row})
    code = {v: i for i, v in enumerate(vals)}
    return [[[code[Fraction(x)] for x in row] for row in t] for t in tables]


def scale_encode(tables):
    """Clear denominators jointly; returns (int tables, scale D)."""
    d = 1
    for t in tables:
        for row in t:
            for x in row:
                d = lcm(d, Fraction(x).denominator)
    out = []
    for t in tables:
        out.append([[int(Fraction(x) * d) for x in row] for row in t])
    return out, d


def _headroom_ok(tables, power: int = 1) -> bool:
    m = 0
    for t in tables:
        for row in t:
            for x in row:
                ax = -x if x < 0 else x
                if ax > m:
                    m = ax
    return 2 * m**power <= _I64_LIMIT


def _use_c(tables, power: int = 1) -> bool:
    return compiled_available() and not _pure_forced() and _headroom_ok(tables, power)


def _np64(table):
    return np.ascontiguousarray(np.array(table, dtype=np.int64))


def distributive_violation(L):
    """None, or the first (f,g,h) with f^(gvh) != (f^g)v(f^h)."""
    if compiled_available() and not _pure_forced():
        return _kernels_c.distributive_violation(L.join_np, L.meet_np)
    return _kernels_py.distributive_violation(L.join_np.tolist(), L.meet_np.tolist())


def modular_violations(L, values):
    """(f,g) index pairs (f <= g) where v(f)+v(g) != v(f^g)+v(fvg)."""
    (vi,), _ = scale_encode([[values]])
    vi = vi[0]
    if _use_c([[vi]]):
        return _kernels_c.modular_violations(
            np.ascontiguousarray(np.array(vi, dtype=np.int64)), L.join_np, L.meet_np
        )
    return _kernels_py.modular_violations(vi, L.join_np.tolist(), L.meet_np.tolist())


def additive_cut_violations(L, w):
    """(f,g,h) triples where w(f,g) != w(f,gvh) + w(f^h,g)."""
    (wi,), _ = scale_encode([w])
    if _use_c([wi]):
        return _kernels_c.additive_cut_violations(_np64(wi), L.join_np, L.meet_np)
    return _kernels_py.additive_cut_violations(wi, L.join_np.tolist(), L.meet_np.tolist())


def ultra_cut_violations(L, w):
    """(f,g,h) triples where w(f,g) != w(f^h,g) v w(f,gvh)."""
    (wi,) = rank_encode([w])
    if _use_c([wi]):
        return _kernels_c.ultra_cut_violations(_np64(wi), L.join_np, L.meet_np)
    return _kernels_py.ultra_cut_violations(wi, L.join_np.tolist(), L.meet_np.tolist())


_SANDWICH_KIND = {"add": 0, "max": 1, "lp": 2}


def sandwich_violations(L, w, kind: str, p: int = 1):
    """(f,g,h,side) with side 0 when combine(w(f,gvh), w(f^h,g)) > w(f,g)
    and side 1 when w(f,g) > w(f,gvh) + w(f^h,g)."""
    if kind == "lp" and p == 1:
        kind = "add"
    if kind not in _SANDWICH_KIND:
        raise ValueError(f"unknown combine kind {kind!r}")
    if kind == "lp" and p not in (2, 3):
        raise ValueError("lp sandwich scans support p in {2, 3} only")
    (wi,), _ = scale_encode([w])
    power = p if kind == "lp" else 1
    if _use_c([wi], power=power):
        return _kernels_c.sandwich_violations(
            _np64(wi), L.join_np, L.meet_np, _SANDWICH_KIND[kind], p
        )
    return _kernels_py.sandwich_violations(
        wi, L.join_np.tolist(), L.meet_np.tolist(), _SANDWICH_KIND[kind], p
    )


def triangle_violations(d):
    """(f,g,h) with d(f,g) > d(f,h) + d(h,g), scanning f < g."""
    (di,), _ = scale_encode([d])
    if _use_c([di]):
        return _kernels_c.triangle_violations(_np64(di))
    return _kernels_py.triangle_violations(di)


def strong_triangle_violations(d):
    """(f,g,h) with d(f,g) > d(f,h) v d(h,g), scanning f < g."""
    (di,) = rank_encode([d])
    if _use_c([di]):
        return _kernels_c.strong_triangle_violations(_np64(di))
    return _kernels_py.strong_triangle_violations(di)


def d_irreducible_witnesses(L, d):
    """Per element p: None when p is d-irreducible, else the first (f,g)
    with min(d(p,f), d(p,g)) > d(p, fvg)."""
    (di,) = rank_encode([d])
    if _use_c([di]):
        return _kernels_c.d_irreducible_witnesses(_np64(di), L.join_np)
    return _kernels_py.d_irreducible_witnesses(di, L.join_np.tolist())
