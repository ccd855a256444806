import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbqdim.errors import IntegralityError
from hilbqdim.fock import (QSeries, ThetaSlice, colored_partition_series, enumerate_lattice,
                           euler_series, lattice_norm, lattice_points, ldl_decomposition,
                           unspecialized_series, z_coefficient)
from hilbqdim.rootsys import AffineDimVector, build_root_system


def box_scan(rs, N):
    """Brute-force (norm, residue) counts over a box from |x_i|^2 <= 2N (C^-1)_ii."""
    bounds = [math.isqrt(int(2 * N * rs.inverse_cartan[i][i])) for i in range(rs.rank)]
    mod = rs.h_dual + 1
    out = Counter()
    for x in itertools.product(*(range(-b, b + 1) for b in bounds)):
        Q = lattice_norm(rs, x)
        if Q <= N:
            out[(Q, sum(x) % mod)] += 1
    return out


def slice_counter(theta):
    return Counter({(Q, s): c for Q, row in theta.by_norm.items() for s, c in row.items()})


@pytest.mark.parametrize("label,N", [("A1", 9), ("A2", 6), ("A3", 5), ("A4", 3), ("D4", 3), ("D5", 2),
                                     ("E6", 1)])
def test_enumeration_matches_box_scan(label, N):
    rs = build_root_system(label)
    assert slice_counter(enumerate_lattice(rs, N)) == box_scan(rs, N)


@pytest.mark.parametrize("label,theta", [
    ("A2", [1, 6, 0, 6, 6, 0, 0, 12]),
    ("D4", [1, 24, 24, 96, 24, 144]),
    ("E6", [1, 72, 270, 720, 936, 2160]),
    ("E7", [1, 126, 756, 2072, 4158, 7560]),
])
def test_known_theta_series(label, theta):
    t = enumerate_lattice(build_root_system(label), len(theta) - 1)
    assert [t.total(Q) for Q in range(len(theta))] == theta


def test_e8_theta_is_eisenstein():
    sigma3 = lambda n: sum(d ** 3 for d in range(1, n + 1) if n % d == 0)
    t = enumerate_lattice(build_root_system("E8"), 5)
    assert [t.total(Q) for Q in range(6)] == [1] + [240 * sigma3(n) for n in range(1, 6)]


@pytest.mark.parametrize("label", ["A3", "D5", "E7"])
def test_zero_norm_slice(label):
    assert enumerate_lattice(build_root_system(label), 2).by_norm[0] == {0: 1}


@pytest.mark.parametrize("label,N", [("A5", 5), ("D6", 4), ("E6", 4)])
def test_parallel_is_deterministic(label, N):
    rs = build_root_system(label)
    serial = enumerate_lattice(rs, N)
    for jobs in (2, 3):
        par = enumerate_lattice(rs, N, jobs=jobs)
        assert par.by_norm == serial.by_norm
        assert list(par.by_norm) == list(serial.by_norm)
    assert euler_series(rs, N, jobs=2) == euler_series(rs, N)


def test_lattice_points_yield_exact_norms():
    rs = build_root_system("D5")
    pts = list(lattice_points(rs.cartan, 3))
    assert len(pts) == len(set(x for x, _ in pts))
    assert all(lattice_norm(rs, x) == Q for x, Q in pts)
    assert all(Q <= 3 for _, Q in pts)
    restricted = [x for x, _ in lattice_points(rs.cartan, 3, outer=[0])]
    assert restricted == [x for x, _ in pts if x[-1] == 0]


def test_ldl_reconstructs_cartan():
    rs = build_root_system("E8")
    L, D = ldl_decomposition(rs.cartan)
    n = rs.rank
    for i in range(n):
        for j in range(n):
            assert sum(L[i][k] * D[k] * L[j][k] for k in range(n)) == rs.cartan[i][j]
    assert math.prod(D) == 1
    with pytest.raises(ValueError):
        ldl_decomposition([[1, 2], [2, 1]])


@pytest.mark.parametrize("colors", [1, 2, 5, 9])
def test_colored_partitions_match_product(colors):
    N = 14
    direct = QSeries([1], N)
    for k in range(1, N + 1):
        geometric = QSeries([1 if i % k == 0 else 0 for i in range(N + 1)])
        for _ in range(colors):
            direct = direct * geometric
    assert colored_partition_series(colors, N) == direct


def test_partition_numbers():
    assert colored_partition_series(1, 10).tolist() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    with pytest.raises(ValueError):
        colored_partition_series(0, 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8), st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_qseries_ring(a, b):
    A, B = QSeries(a), QSeries(b)
    n = min(len(a), len(b))
    assert (A * B).order == n - 1
    assert A * B == B * A
    assert (A + B).tolist() == [x + y for x, y in zip(a[:n], b[:n])]


def partitions(max_size):
    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest
    for size in range(max_size + 1):
        yield from gen(size, size)


@pytest.mark.parametrize("k,N", [(2, 4), (3, 3)])
def test_unspecialized_counts_partitions_by_zero_residue(k, N):
    # Z at e^-alpha = 1: partitions with exactly n cells of content = 0 mod k
    counts = Counter()
    for lam in partitions(2 * k * N):
        zeros = sum(1 for r, row in enumerate(lam) for c in range(row) if (c - r) % k == 0)
        counts[zeros] += 1
    rs = build_root_system(f"A{k - 1}")
    assert unspecialized_series(rs, N).tolist() == [counts[n] for n in range(N + 1)]


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"])
def test_series_start(label):
    # only the origin at n = 0, and the single fixed point of C^2/Gamma at n = 1
    assert euler_series(build_root_system(label), 2).tolist()[:2] == [1, 1]


def test_euler_series_small_values():
    assert euler_series(build_root_system("A1"), 10).tolist() == [1, 1, 3, 5, 9, 14, 24, 35, 55, 81, 120]
    assert euler_series(build_root_system("A1"), 0).tolist() == [1]


def test_bad_theta_is_caught():
    rs = build_root_system("A2")
    theta = ThetaSlice(rs.h_dual + 1, 1, {0: {0: 1}, 1: {1: 1}})
    with pytest.raises(IntegralityError):
        euler_series(rs, 1, theta=theta)


def test_z_coefficient():
    rs = build_root_system("A1")
    assert z_coefficient(rs, AffineDimVector(2, (0,))) == 5
    assert z_coefficient(rs, AffineDimVector(2, (-1,))) == 2
    assert z_coefficient(rs, AffineDimVector(1, (-2,))) == 0
