"""Shared fixtures: the reference 2x2 space and its ranking.

The reference ranking (used across modules and in the golden CLI model)
grades the four worlds 0, 2, 1, 3 in index order, so the belief core is
the single world (X=0, Y=0) and the X/Y fields are rank independent.
"""

import pathlib

import pytest

from rankcalc import build_space, ranking_from_world_ranks

DATA_DIR = pathlib.Path(__file__).parent / "data"
GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

REFERENCE_RANKS = (0, 2, 1, 3)


@pytest.fixture
def space2():
    return build_space([("X", ("0", "1")), ("Y", ("0", "1"))])


@pytest.fixture
def ranking2(space2):
    return ranking_from_world_ranks(space2, REFERENCE_RANKS)


@pytest.fixture
def space3():
    return build_space([("X", ("0", "1")), ("Y", ("0", "1")), ("Z", ("0", "1"))])


def brute_rank(world_ranks, members):
    """Oracle: minimum world rank by direct enumeration; None when empty."""
    values = [world_ranks[w] for w in members]
    return min(values) if values else None
