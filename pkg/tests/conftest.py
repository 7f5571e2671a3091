"""Shared corpus for the test suite.

The sweep corpus mirrors what the verification tools are meant to cover:
the five bundled fixture categories, the bundled synthetic matrices, a
seeded batch of 200 random posets on up to 6 objects, and one-object
deloopings of every monoid with at most 3 elements plus a hand-picked
shelf of 4-element monoids.
"""

from __future__ import annotations

import itertools
import json
import random
from pathlib import Path

import pytest
from hypothesis import settings

from catzeta import (
    FiniteCategory,
    IntMatrix,
    adjacency,
    category_from_dict,
    monoid_delooping,
    poset_category,
)

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
FIXTURE_NAMES = ("terminal", "p2", "s", "z2", "k2")
MATRIX_NAMES = ("shift2", "rot90", "pell", "block4", "nilpotent2", "jordan2")

POSET_SEED = 20260825
POSET_COUNT = 200


def load_fixture_category(name: str) -> FiniteCategory:
    with open(FIXTURE_DIR / f"{name}.json") as fh:
        return category_from_dict(json.load(fh))


def load_fixture_matrix(name: str) -> IntMatrix:
    with open(FIXTURE_DIR / "matrices" / f"{name}.json") as fh:
        return IntMatrix(json.load(fh))


def random_poset_relation(rng: random.Random) -> list[list[int]]:
    """Random poset on 1..6 points: sprinkle edges above the diagonal of a
    shuffled linear order, then close transitively.  Orientation along a
    fixed linear order keeps the relation antisymmetric by construction."""
    n = rng.randint(1, 6)
    p = rng.choice([0.15, 0.3, 0.5, 0.75])
    rel = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rel[i][j] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return [[int(x) for x in row] for row in rel]


def poset_relations() -> list[list[list[int]]]:
    rng = random.Random(POSET_SEED)
    return [random_poset_relation(rng) for _ in range(POSET_COUNT)]


def monoids_up_to_3() -> list[list[list[int]]]:
    """Every monoid with at most 3 elements, identity pinned as element 0.

    Order 3 is small enough to filter all 81 candidate tables by brute
    associativity; the count (11) is a known value, asserted here so a
    generator regression cannot silently shrink the corpus.
    """
    tables = [[[0]]]
    for x in range(2):
        t = [[0, 1], [1, x]]
        if _associative(t):
            tables.append(t)
    for vals in itertools.product(range(3), repeat=4):
        t = [[0, 1, 2], [1, vals[0], vals[1]], [2, vals[2], vals[3]]]
        if _associative(t):
            tables.append(t)
    assert len(tables) == 14
    return tables


def _associative(t: list[list[int]]) -> bool:
    n = len(t)
    return all(
        t[t[a][b]][c] == t[a][t[b][c]]
        for a in range(n) for b in range(n) for c in range(n)
    )


def monoids_of_4() -> list[list[list[int]]]:
    """A shelf of 4-element monoids: the two groups, the chain under max,
    saturating addition, and the 3-cycle with an absorbing zero."""
    cyclic = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    klein = [[i ^ j for j in range(4)] for i in range(4)]
    chain_max = [[max(i, j) for j in range(4)] for i in range(4)]
    sat_add = [[min(i + j, 3) for j in range(4)] for i in range(4)]
    z3_zero = [[(i + j) % 3 if i < 3 and j < 3 else 3 for j in range(4)]
               for i in range(4)]
    tables = [cyclic, klein, chain_max, sat_add, z3_zero]
    assert all(_associative(t) for t in tables)
    return tables


@pytest.fixture(scope="session")
def fixture_categories() -> dict[str, FiniteCategory]:
    return {name: load_fixture_category(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def fixture_matrices() -> dict[str, IntMatrix]:
    return {name: load_fixture_matrix(name) for name in MATRIX_NAMES}


@pytest.fixture(scope="session")
def random_posets() -> list[FiniteCategory]:
    return [poset_category(rel, name=f"poset{i}")
            for i, rel in enumerate(poset_relations())]


@pytest.fixture(scope="session")
def monoid_deloopings() -> list[FiniteCategory]:
    tables = monoids_up_to_3() + monoids_of_4()
    return [monoid_delooping(t, name=f"monoid{i}")
            for i, t in enumerate(tables)]


@pytest.fixture(scope="session")
def corpus_categories(fixture_categories, random_posets, monoid_deloopings):
    """Every category in the sweep corpus as (label, category) pairs,
    fixtures first."""
    pairs = list(fixture_categories.items())
    pairs += [(c.name, c) for c in random_posets]
    pairs += [(c.name, c) for c in monoid_deloopings]
    return pairs


@pytest.fixture(scope="session")
def corpus_matrices(corpus_categories, fixture_matrices):
    """Adjacency matrices of the corpus categories plus the synthetic
    matrix fixtures, as (label, matrix) pairs."""
    pairs = [(label, adjacency(c)) for label, c in corpus_categories]
    pairs += list(fixture_matrices.items())
    return pairs
