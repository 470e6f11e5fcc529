"""Shared fixtures: the small lattices most tests poke at."""

import pytest
from hypothesis import settings

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")

from metriclat import (
    FiniteMetricSpace,
    build_from_leq,
    build_lipschitz_lattice,
    divisor_lattice,
    product_chain_lattice,
    sublattice,
    subset_lattice,
    subspace_lattice,
)


@pytest.fixture(scope="session")
def chain5():
    return product_chain_lattice([4])


@pytest.fixture(scope="session")
def m3():
    # the diamond: five subspaces of F_2^2, three incomparable atoms
    return subspace_lattice(2, 2).lattice


@pytest.fixture(scope="session")
def n5():
    # the pentagon: 0 < 1 < 2 < 4 with side chain 0 < 3 < 4
    return build_from_leq(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


@pytest.fixture(scope="session")
def div12():
    return divisor_lattice(12)


@pytest.fixture(scope="session")
def div60():
    return divisor_lattice(60)


@pytest.fixture(scope="session")
def cube3():
    # all eight subsets of {1,2,3}
    return subset_lattice([1, 2, 3], [[1], [2], [3]])


@pytest.fixture(scope="session")
def family23():
    # {}, {2}, {3}, {2,3}, {1,2,3}: the smallest family whose top is
    # join-irreducible yet not d-irreducible under identity atom weights
    return subset_lattice([1, 2, 3], [[2], [3]])


@pytest.fixture(scope="session")
def grid32():
    return product_chain_lattice([3, 2])


@pytest.fixture(scope="session")
def square_plus_top(grid32):
    # {(0,0),(0,1),(1,0),(1,1),(2,2)}: join-closed, top two steps clear
    return sublattice(grid32, [0, 1, 3, 4, 8])


@pytest.fixture(scope="session")
def space2():
    return FiniteMetricSpace(("a", "b"), ((0, 1), (1, 0)), basepoint=0)


@pytest.fixture(scope="session")
def space3():
    d = ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    return FiniteMetricSpace(("a", "b", "c"), d, basepoint=0)


@pytest.fixture(scope="session")
def lip2(space2):
    return build_lipschitz_lattice(space2, 1, 2)


@pytest.fixture(scope="session")
def lip3(space3):
    return build_lipschitz_lattice(space3, 1, 2)


@pytest.fixture(scope="session")
def zoo(chain5, m3, n5, div12, div60, cube3, family23, grid32,
        square_plus_top, lip2, lip3):
    """Every small lattice in one dict, for corpus-wide law scans."""
    return {
        "chain5": chain5,
        "m3": m3,
        "n5": n5,
        "div12": div12.lattice,
        "div60": div60.lattice,
        "cube3": cube3.lattice,
        "family23": family23.lattice,
        "grid32": grid32,
        "square_plus_top": square_plus_top,
        "lip2": lip2.lattice,
        "lip3": lip3.lattice,
    }
