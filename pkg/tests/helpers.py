"""Seeded random inputs shared across the test modules.

Everything takes an explicit random.Random so the corpus is reproducible;
tests freeze seeds, never reseed from time.
"""

import random
from fractions import Fraction

from metriclat import SetLattice, subset_lattice


def random_fraction(rng: random.Random, lo=0, hi=6, max_den=4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_subset_lattice(rng: random.Random, max_atoms=5, max_elements=None,
                          ground=None) -> SetLattice:
    """Union/intersection closure of a few random generator sets. Closed set
    families are distributive, so this doubles as the random distributive
    corpus. Retries while a member cap is exceeded."""
    while True:
        if ground is None:
            k = rng.randint(2, max_atoms)
            atoms = list(range(1, k + 1))
        else:
            atoms = list(ground)
            k = len(atoms)
        gens = [rng.sample(atoms, rng.randint(1, k))
                for _ in range(rng.randint(1, 4))]
        S = subset_lattice(atoms, gens, include_ground=bool(rng.getrandbits(1)))
        if max_elements is None or S.lattice.n <= max_elements:
            return S


def random_natural_set_lattice(rng: random.Random, max_atoms=5,
                               max_value=30) -> SetLattice:
    """Like random_subset_lattice but over distinct natural numbers, for the
    caption-rule experiments."""
    k = rng.randint(2, max_atoms)
    atoms = sorted(rng.sample(range(1, max_value + 1), k))
    gens = [rng.sample(atoms, rng.randint(1, k))
            for _ in range(rng.randint(1, 4))]
    return subset_lattice(atoms, gens, include_ground=bool(rng.getrandbits(1)))


def random_positive_valuation(rng: random.Random, S: SetLattice, max_den=4):
    """v(A) = c + sum of strictly positive atom weights. Strictly isotone and
    modular on any union/intersection-closed family."""
    mu = {a: random_fraction(rng, 1, 5, max_den) for a in S.ground}
    c = random_fraction(rng, 0, 3, max_den)
    return [c + sum((mu[a] for a in S.member_set(i)), Fraction(0))
            for i in range(len(S.members))]


def random_kappa(rng: random.Random, S: SetLattice, max_den=3):
    """Nonnegative atom weights with deliberate ties and zeros mixed in."""
    pool = [Fraction(0), Fraction(1), Fraction(1), Fraction(3, 2), Fraction(2)]
    return {a: rng.choice(pool) if rng.random() < 0.5
            else random_fraction(rng, 0, 4, max_den)
            for a in S.ground}


def random_positive_kappa(rng: random.Random, S: SetLattice, max_den=3):
    return {a: random_fraction(rng, 1, 4, max_den) for a in S.ground}


def random_quadruples(rng: random.Random, count, max_den=4):
    """Nonnegative rational (r,s,t,u) samples for combine-op axiom checks."""
    return [tuple(random_fraction(rng, 0, 5, max_den) for _ in range(4))
            for _ in range(count)]


def random_signed_triples(rng: random.Random, count, max_den=4):
    return [tuple(random_fraction(rng, -5, 5, max_den) for _ in range(3))
            for _ in range(count)]
