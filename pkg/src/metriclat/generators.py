"""Lattice builders: subset-family closures, divisor lattices, products of
chains, sublattices, and subspace lattices over prime fields."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import ClosureTooLarge, NotClosed, TooLarge
from .lattice import MAX_ELEMENTS, FiniteLattice


# -- families of sets ---------------------------------------------------------


@dataclass(frozen=True)
class SetLattice:
    """A family of subsets of a finite ground set, closed under union and
    intersection. members[i] is the bitmask of lattice element i over the
    sorted atom tuple ``ground``; order/join/meet are subset/union/meet."""

    ground: tuple
    members: tuple
    lattice: FiniteLattice = field(compare=False)

    def atom_bit(self, atom) -> int:
        return self.ground.index(atom)

    def member_set(self, i: int) -> frozenset:
        m = self.members[i]
        return frozenset(a for k, a in enumerate(self.ground) if (m >> k) & 1)

    def index_of(self, subset) -> int:
        mask = 0
        for a in subset:
            mask |= 1 << self.atom_bit(a)
        try:
            return self.members.index(mask)
        except ValueError:
            raise KeyError(f"{set(subset)!r} is not a member of the family") from None


def _atom_key(ground):
    if all(isinstance(a, int) and not isinstance(a, bool) for a in ground):
        return sorted(ground)
    if all(isinstance(a, str) for a in ground):
        return sorted(ground)
    raise ValueError("ground atoms must be all ints or all strings")


def _set_label(ground, mask) -> str:
    return "{" + ",".join(str(a) for k, a in enumerate(ground) if (mask >> k) & 1) + "}"


def set_lattice_from_members(ground, member_masks, check_closed=True) -> SetLattice:
    """Wrap an explicit member family, preserving the given member order.

    The family must contain no duplicates and, unless check_closed is
    disabled by a caller that already knows, be union/intersection closed
    (NotClosed carries the offending pair).
    """
    ground = tuple(_atom_key(ground))
    members = tuple(int(m) for m in member_masks)
    if len(set(members)) != len(members):
        raise ValueError("duplicate members")
    if len(members) > MAX_ELEMENTS:
        raise TooLarge(f"{len(members)} members exceeds the cap of {MAX_ELEMENTS}")
    have = set(members)
    if check_closed:
        for a, b in combinations(members, 2):
            if a | b not in have:
                raise NotClosed(
                    f"family not closed under union: {_set_label(ground, a)} | {_set_label(ground, b)}",
                    witness=(a, b),
                )
            if a & b not in have:
                raise NotClosed(
                    f"family not closed under intersection: {_set_label(ground, a)} & {_set_label(ground, b)}",
                    witness=(a, b),
                )
    index = {m: i for i, m in enumerate(members)}
    up = [0] * len(members)
    for i, mi in enumerate(members):
        for j, mj in enumerate(members):
            if mi & mj == mi:
                up[i] |= 1 << j
    labels = [_set_label(ground, m) for m in members]
    return SetLattice(ground, members, FiniteLattice(up, labels))


def subset_lattice(ground, generators, include_ground: bool = True) -> SetLattice:
    """Union/intersection closure of the generator subsets.

    The empty set is always adjoined; the full ground set too when
    include_ground. Members are ordered by (size, bit pattern).
    """
    ground = tuple(_atom_key(ground))
    if len(set(ground)) != len(ground):
        raise ValueError("ground atoms must be distinct")
    pos = {a: k for k, a in enumerate(ground)}
    masks = {0}
    if include_ground:
        masks.add((1 << len(ground)) - 1)
    for gen in generators:
        m = 0
        for a in gen:
            if a not in pos:
                raise ValueError(f"generator atom {a!r} not in ground set")
            m |= 1 << pos[a]
        masks.add(m)
    frontier = list(masks)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(masks):
                for c in (a | b, a & b):
                    if c not in masks:
                        masks.add(c)
                        fresh.append(c)
            if len(masks) > MAX_ELEMENTS:
                raise ClosureTooLarge(
                    f"closure exceeds the cap of {MAX_ELEMENTS} members"
                )
        frontier = fresh
    members = sorted(masks, key=lambda m: (bin(m).count("1"), m))
    return set_lattice_from_members(ground, members, check_closed=False)


# -- divisors ------------------------------------------------------------------


@dataclass(frozen=True)
class DivisorLattice:
    """Divisors of n ordered by divisibility; join is lcm, meet is gcd."""

    n: int
    divisors: tuple
    lattice: FiniteLattice = field(compare=False)

    def omega(self):
        """Prime factors counted with multiplicity, per divisor; the
        canonical positive modular valuation on this lattice (up to the
        log-to-count rescaling)."""
        out = []
        for d in self.divisors:
            k, m = 0, d
            p = 2
            while p * p <= m:
                while m % p == 0:
                    m //= p
                    k += 1
                p += 1
            if m > 1:
                k += 1
            out.append(Fraction(k))
        return out


def divisor_lattice(n: int) -> DivisorLattice:
    if not (2 <= n <= 10**6):
        raise ValueError("n must be between 2 and 10**6")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    k = len(divs)
    if k > MAX_ELEMENTS:
        raise TooLarge(f"{k} divisors exceeds the cap of {MAX_ELEMENTS}")
    up = [0] * k
    for i, a in enumerate(divs):
        for j, b in enumerate(divs):
            if b % a == 0:
                up[i] |= 1 << j
    lat = FiniteLattice(up, [str(d) for d in divs])
    return DivisorLattice(n, tuple(divs), lat)


# -- products of chains ---------------------------------------------------------


def chain_grid_points(heights):
    """Coordinate tuples of product_chain_lattice in element-index order."""
    ranges = [range(h + 1) for h in heights]
    return [tuple(p) for p in product(*ranges)]


def product_chain_lattice(heights) -> FiniteLattice:
    """Product of chains 0..h_i under the componentwise order; element i
    carries its coordinate tuple in point_values."""
    heights = list(heights)
    if not heights or any(h < 1 for h in heights):
        raise ValueError("heights must be positive integers")
    count = 1
    for h in heights:
        count *= h + 1
        if count > MAX_ELEMENTS:
            raise TooLarge(f"grid exceeds the cap of {MAX_ELEMENTS} elements")
    coords = chain_grid_points(heights)
    up = [0] * count
    for i, a in enumerate(coords):
        for j, b in enumerate(coords):
            if all(x <= y for x, y in zip(a, b)):
                up[i] |= 1 << j
    labels = ["(" + ",".join(str(x) for x in c) + ")" for c in coords]
    return FiniteLattice(up, labels, point_values=coords)


# -- sublattices -----------------------------------------------------------------


def sublattice(L: FiniteLattice, element_ids) -> FiniteLattice:
    """Restriction of L to the given elements; they must be closed under
    L's join and meet (NotClosed carries the offending pair)."""
    ids = sorted(set(element_ids))
    if not ids:
        raise ValueError("sublattice needs at least one element")
    for i in ids:
        if not (0 <= i < L.n):
            raise ValueError(f"element {i} out of range")
    have = set(ids)
    for a, b in combinations(ids, 2):
        j = L.join(a, b)
        if j not in have:
            raise NotClosed(
                f"not join-closed: {L.labels[a]} v {L.labels[b]} = {L.labels[j]}",
                witness=(a, b),
            )
        m = L.meet(a, b)
        if m not in have:
            raise NotClosed(
                f"not meet-closed: {L.labels[a]} ^ {L.labels[b]} = {L.labels[m]}",
                witness=(a, b),
            )
    pos = {e: k for k, e in enumerate(ids)}
    up = [0] * len(ids)
    for k, e in enumerate(ids):
        for k2, e2 in enumerate(ids):
            if L.leq(e, e2):
                up[k] |= 1 << k2
    pv = None
    if L.point_values is not None:
        pv = [L.point_values[e] for e in ids]
    return FiniteLattice(up, [L.labels[e] for e in ids], pv)


# -- subspaces over prime fields ---------------------------------------------------


@dataclass(frozen=True)
class SubspaceLattice:
    """All subspaces of F_q^n ordered by inclusion; join is span of the
    union, meet is intersection. bases[i] is the canonical reduced
    row-echelon basis of subspace i."""

    q: int
    n: int
    bases: tuple
    dims: tuple
    lattice: FiniteLattice = field(compare=False)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            return False
        p += 1
    return True


def _gaussian_subspace_count(q: int, n: int) -> int:
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


def _rref_bases(q: int, n: int, k: int):
    """All k-row reduced row-echelon matrices over F_q with n columns."""
    for pivots in combinations(range(n), k):
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for assign in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r in range(k):
                rows[r][pivots[r]] = 1
            for (r, c), v in zip(free, assign):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def _basis_label(q: int, basis) -> str:
    sep = "" if q < 10 else ","
    return "[" + ";".join(sep.join(str(e) for e in row) for row in basis) + "]"


def subspace_lattice(q: int, n: int) -> SubspaceLattice:
    if not _is_prime(q):
        raise ValueError("q must be prime")
    if not (1 <= n <= 4):
        raise ValueError("n must be between 1 and 4")
    count = _gaussian_subspace_count(q, n)
    if count > MAX_ELEMENTS:
        raise TooLarge(f"{count} subspaces exceeds the cap of {MAX_ELEMENTS}")

    entries = []  # (dim, label, basis, vector frozenset)
    for k in range(n + 1):
        for basis in _rref_bases(q, n, k):
            vecs = set()
            for coeffs in product(range(q), repeat=k):
                v = [0] * n
                for c, row in zip(coeffs, basis):
                    for i in range(n):
                        v[i] = (v[i] + c * row[i]) % q
                vecs.add(tuple(v))
            entries.append((k, _basis_label(q, basis), basis, frozenset(vecs)))
    assert len(entries) == count
    entries.sort(key=lambda e: (e[0], e[1]))

    m = len(entries)
    up = [0] * m
    for i in range(m):
        vi = entries[i][3]
        for j in range(m):
            if vi <= entries[j][3]:
                up[i] |= 1 << j
    lat = FiniteLattice(up, [e[1] for e in entries])
    return SubspaceLattice(
        q, n, tuple(e[2] for e in entries), tuple(e[0] for e in entries), lat
    )
