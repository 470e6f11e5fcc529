"""Finite lattices with fully materialized join/meet tables.

Elements are integer indices 0..n-1 with display labels. The order is held
as per-element bitmasks (bit j of ``_up[i]`` set means i <= j); join and
meet are derived at construction by the upper/lower-bound-set trick: k is
the least upper bound of {i, j} exactly when up(k) == up(i) & up(j).
Construction validates the poset axioms and lattice totality and refuses
more than 4096 elements rather than degrading.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import NotALattice, NotAPoset, TooLarge

MAX_ELEMENTS = 4096


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A finite lattice. Prefer build_from_leq or a generator over calling
    the constructor directly; the constructor expects reflexive+transitive
    up-masks and raises NotAPoset/NotALattice on anything else.

    point_values, when present, attaches a tuple of Fractions to every
    element (function values or grid coordinates); pointwise metrics use it.
    """

    def __init__(self, up_masks: Sequence[int], labels=None, point_values=None):
        n = len(up_masks)
        if n == 0:
            raise ValueError("lattice needs at least one element")
        if n > MAX_ELEMENTS:
            raise TooLarge(f"{n} elements exceeds the cap of {MAX_ELEMENTS}")
        self.n = n
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels length mismatch")
        if len(set(labels)) != n:
            raise ValueError("labels must be unique")
        self.labels = labels

        up = [int(m) for m in up_masks]
        full = (1 << n) - 1
        down = [0] * n
        for i in range(n):
            m = up[i]
            if m >> n:
                raise ValueError("up mask references element out of range")
            if not (m >> i) & 1:
                raise NotAPoset(f"order not reflexive at {labels[i]}", witness=i)
            for j in _bits(m):
                if j != i and (up[j] >> i) & 1:
                    raise NotAPoset(
                        f"antisymmetry fails: {labels[i]} <= {labels[j]} <= {labels[i]}",
                        witness=(i, j),
                    )
                if up[j] | m != m:
                    raise NotAPoset(
                        f"transitivity fails through {labels[i]} <= {labels[j]}",
                        witness=(i, j),
                    )
                down[j] |= 1 << i
        self._up = up
        self._down = down

        up_index = {m: i for i, m in enumerate(up)}
        down_index = {m: i for i, m in enumerate(down)}
        join = np.empty((n, n), dtype=np.int32)
        meet = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            join[i, i] = meet[i, i] = i
            for j in range(i + 1, n):
                k = up_index.get(up[i] & up[j])
                if k is None:
                    raise NotALattice(
                        f"{labels[i]} and {labels[j]} have no least upper bound",
                        witness=(i, j),
                    )
                join[i, j] = join[j, i] = k
                k = down_index.get(down[i] & down[j])
                if k is None:
                    raise NotALattice(
                        f"{labels[i]} and {labels[j]} have no greatest lower bound",
                        witness=(i, j),
                    )
                meet[i, j] = meet[j, i] = k
        join.setflags(write=False)
        meet.setflags(write=False)
        self.join_np = join
        self.meet_np = meet

        b = up_index.get(full)
        t = down_index.get(full)
        if b is None or t is None:
            raise NotALattice("no bottom/top element")  # unreachable when tables are total
        self.bottom = b
        self.top = t

        if point_values is not None:
            point_values = tuple(tuple(Fraction(v) for v in row) for row in point_values)
            if len(point_values) != n:
                raise ValueError("point_values length mismatch")
        self.point_values = point_values

        self._label_index = {s: i for i, s in enumerate(labels)}
        self._distributive: Optional[bool] = None
        self._distr_witness = None
        self._heights = None
        self._canonical = None

    # -- order primitives ---------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool((self._up[i] >> j) & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def join(self, i: int, j: int) -> int:
        return int(self.join_np[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_np[i, j])

    def join_of(self, elems: Iterable[int]) -> int:
        out = self.bottom
        for e in elems:
            out = int(self.join_np[out, e])
        return out

    def meet_of(self, elems: Iterable[int]) -> int:
        out = self.top
        for e in elems:
            out = int(self.meet_np[out, e])
        return out

    @property
    def leq_np(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=bool)
        for i, m in enumerate(self._up):
            for j in _bits(m):
                out[i, j] = True
        return out

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r}") from None

    def elements(self) -> range:
        return range(self.n)

    # -- derived structure ----------------------------------------------------

    def down_set(self, p: int) -> frozenset:
        """Strictly-below set of p."""
        return frozenset(j for j in _bits(self._down[p]) if j != p)

    def is_chain(self, elems: Iterable[int]) -> bool:
        """True when the given elements are pairwise comparable."""
        es = list(elems)
        for a in range(len(es)):
            for b in range(a + 1, len(es)):
                i, j = es[a], es[b]
                if not (self.leq(i, j) or self.leq(j, i)):
                    return False
        return True

    def lower_covers(self, p: int) -> tuple:
        strict = self._down[p] & ~(1 << p)
        return tuple(q for q in _bits(strict) if self._up[q] & strict == 1 << q)

    def join_irreducibles(self) -> frozenset:
        """Elements p with p = f v g implying p in {f, g}.

        Equivalent on a finite lattice to having at most one lower cover;
        the bottom is vacuously included.
        """
        return frozenset(p for p in range(self.n) if len(self.lower_covers(p)) <= 1)

    def join_closure(self, elems: Iterable[int]) -> frozenset:
        """All joins of nonempty subfamilies of elems."""
        seen = set(elems)
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(seen):
                    c = int(self.join_np[a, b])
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(seen)

    def distributivity_witness(self):
        """None, or a triple (f,g,h) with f^(gvh) != (f^g)v(f^h)."""
        if self._distributive is None:
            from . import kernels

            w = kernels.distributive_violation(self)
            self._distributive = w is None
            self._distr_witness = w
        return self._distr_witness

    def is_distributive(self) -> bool:
        self.distributivity_witness()
        return bool(self._distributive)

    # -- canonical form and equality ---------------------------------------

    def heights(self):
        """Longest-chain-from-bottom rank of every element."""
        if self._heights is None:
            h = [0] * self.n
            order = sorted(range(self.n), key=lambda i: bin(self._down[i]).count("1"))
            for p in order:
                covers = self.lower_covers(p)
                h[p] = 1 + max((h[q] for q in covers), default=-1)
            self._heights = h
        return self._heights

    def canonical(self) -> "FiniteLattice":
        """Same lattice renumbered bottom-first by (rank, label)."""
        if self._canonical is None:
            h = self.heights()
            perm = sorted(range(self.n), key=lambda i: (h[i], self.labels[i]))
            pos = {old: new for new, old in enumerate(perm)}
            masks = []
            for a in range(self.n):
                m = 0
                for j in _bits(self._up[perm[a]]):
                    m |= 1 << pos[j]
                masks.append(m)
            pv = None
            if self.point_values is not None:
                pv = [self.point_values[old] for old in perm]
            self._canonical = FiniteLattice(masks, [self.labels[old] for old in perm], pv)
            self._canonical._canonical = self._canonical
        return self._canonical

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.labels == b.labels and a._up == b._up

    def __hash__(self):
        c = self.canonical()
        return hash((c.labels, tuple(c._up)))

    def __repr__(self):
        return f"<FiniteLattice n={self.n} bottom={self.labels[self.bottom]!r} top={self.labels[self.top]!r}>"


def build_from_leq(n: int, pairs, labels=None) -> FiniteLattice:
    """Lattice from a size and a list of (i, j) meaning i <= j.

    The reflexive-transitive closure is taken first; antisymmetry failures
    raise NotAPoset and missing bounds raise NotALattice.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ELEMENTS:
        raise TooLarge(f"{n} elements exceeds the cap of {MAX_ELEMENTS}")
    up = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"pair ({i},{j}) out of range")
        up[i] |= 1 << j
    for k in range(n):
        mk = up[k]
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= mk
    return FiniteLattice(up, labels)
