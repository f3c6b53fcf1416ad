import pathlib
import sys
from itertools import permutations

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))


def all_perms(n):
    """Every permutation of 1..n as a tuple."""
    return permutations(range(1, n + 1))


@pytest.fixture(scope="session")
def convex_by_size():
    """Interval-oracle listings of convex permutominoes, cached per size."""
    from permutomino import oracles

    cache = {}

    def get(n, bound=oracles.DEFAULT_BOUND):
        if n not in cache:
            cache[n] = oracles.enumerate_convex(n, bound=max(bound, n))
        return cache[n]

    return get
