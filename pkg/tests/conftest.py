"""Shared helpers and independent oracles for the test suite.

The oracles here deliberately avoid the library's primary code paths:
root sets are rebuilt as Weyl orbits of the simple roots, rank-1 tensor
products come from the classical highest-weight ladder, and small products
are convolved by hand.
"""

import itertools
import random

from demkit.rootsystem import root_system


def dominant_box(rs, bound):
    """All dominant weights with every coordinate in 0..bound."""
    return [tuple(c) for c in itertools.product(range(bound + 1), repeat=rs.rank)]


def random_dominant(rng, rs, bound=4):
    return tuple(rng.randint(0, bound) for _ in range(rs.rank))


def roots_by_orbit(rs):
    """Independent reconstruction of the root set: the union of the Weyl
    orbits of the simple roots, filtered to positives via exact root-lattice
    coordinates."""
    allroots = set()
    for col in rs.simple_root_coords:
        allroots |= rs.weyl_orbit(col)
    positives = set()
    for w in allroots:
        coords = rs.root_lattice_coords(w)
        assert all(c.denominator == 1 for c in coords)
        ints = tuple(int(c) for c in coords)
        if all(c >= 0 for c in ints) and any(ints):
            positives.add(ints)
    return positives


def clebsch_gordan_sl2(a, b):
    """Classical rank-1 tensor decomposition: a (x) b = |a-b| + ... + (a+b)."""
    return {(m,): 1 for m in range(abs(a - b), a + b + 1, 2)}


def seeded(name):
    return random.Random(f"demkit-{name}")
