import itertools

import pytest

from hilbqdim.fock import colored_partition_series, euler_series
from hilbqdim.oracle import MonoidPoint, count_staircases, euler_series_oracle
from hilbqdim.rootsys import build_root_system


def brute_force(k, n):
    """Downward-closed n-subsets of {a = b mod k}, by checking every subset of a box."""
    if n == 0:
        return 1
    step = max(2, k) if k > 1 else 1
    reach = step * (n - 1)
    pts = [(a, b) for a in range(reach + 1) for b in range(reach + 1 - a) if (a - b) % k == 0]
    gens = [(1, 1), (k, 0), (0, k)] if k > 1 else [(1, 0), (0, 1)]
    total = 0
    for subset in itertools.combinations(pts, n):
        s = set(subset)
        if all((p[0] - g[0] < 0 or p[1] - g[1] < 0 or (p[0] - g[0], p[1] - g[1]) in s)
               for p in s for g in gens):
            total += 1
    return total


@pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (3, 4), (4, 3), (5, 3)])
def test_dfs_matches_subset_brute_force(k, n):
    assert count_staircases(k, n) == brute_force(k, n)


def test_trivial_group_gives_partitions():
    assert euler_series_oracle(1, 12) == colored_partition_series(1, 12)


def test_small_values():
    assert count_staircases(2, 2) == 3
    assert euler_series_oracle(2, 4).tolist() == [1, 1, 3, 5, 9]
    assert count_staircases(7, 0) == 1


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6, 7])
def test_agrees_with_specialised_character(k):
    assert euler_series_oracle(k, 7) == euler_series(build_root_system(f"A{k - 1}"), 7)


def test_monoid_point_validation():
    assert MonoidPoint(4, 1, 3).a == 4
    with pytest.raises(ValueError):
        MonoidPoint(2, 1, 3)
    with pytest.raises(ValueError):
        MonoidPoint(-3, 0, 3)
    with pytest.raises(ValueError):
        count_staircases(0, 2)
