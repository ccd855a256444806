import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hilbqdim.charlab import (WeightMultiplicity, convolve, decompose, dominant_representative,
                              freudenthal, multiplicity, trivial_multiplicity, weyl_orbit)
from hilbqdim.errors import DimensionMismatchError, NotACharacterError, ResourceGuardError
from hilbqdim.qdim import weyl_dimension
from hilbqdim.rootsys import build_root_system


def ssyt_character(lam, n):
    """Weights of V(lam) for sl_n by brute-force semistandard tableaux."""
    shape = [sum(lam[i:]) for i in range(n - 1)] + [0]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = Counter()
    for filling in itertools.product(range(n), repeat=len(cells)):
        t = dict(zip(cells, filling))
        if any(c and t[(r, c - 1)] > t[(r, c)] for r, c in cells):
            continue
        if any(r and t[(r - 1, c)] >= t[(r, c)] for r, c in cells):
            continue
        content = Counter(filling)
        out[tuple(content[i] - content[i + 1] for i in range(n - 1))] += 1
    return out


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1), (2, 1), (3, 0), (0, 0, 2), (1, 0, 1), (0, 2, 0),
                                 (1, 1, 0), (1, 0, 0, 1)])
def test_type_a_matches_tableaux(lam):
    n = len(lam) + 1
    rs = build_root_system(f"A{n - 1}")
    assert dict(freudenthal(rs, lam).items()) == dict(ssyt_character(lam, n))


def test_e8_adjoint():
    rs = build_root_system("E8")
    wm = freudenthal(rs, rs.fundamental_weight(8))
    assert wm[(0,) * 8] == 8
    assert len(wm) == 241
    roots = {rs.root_to_weight(a) for a in rs.positive_roots}
    assert {mu for mu in wm if any(mu)} == roots | {tuple(-x for x in r) for r in roots}


@pytest.mark.parametrize("label,lam,size", [("D4", (0, 1, 0, 0), 24), ("E6", (1, 0, 0, 0, 0, 0), 27),
                                            ("E7", (0,) * 6 + (1,), 56), ("A3", (1, 0, 1), 12)])
def test_orbit_sizes(label, lam, size):
    assert len(weyl_orbit(build_root_system(label), lam)) == size


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A2", "A3", "D4", "D5", "E6"]), st.data())
def test_weight_system_properties(label, data):
    rs = build_root_system(label)
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    if weyl_dimension(rs, lam) > 5000:
        return
    wm = freudenthal(rs, lam)
    assert wm.dimension == weyl_dimension(rs, lam)
    assert wm.is_weyl_invariant()
    assert wm[lam] == 1
    assert all(rs.in_root_lattice(tuple(a - b for a, b in zip(lam, mu))) for mu in wm)
    mu = data.draw(st.sampled_from(sorted(wm)))
    assert multiplicity(rs, lam, mu) == wm[mu]
    assert dominant_representative(rs, mu) in wm.dominant_part()


def test_tensor_products():
    A2 = build_root_system("A2")
    sq = convolve(freudenthal(A2, (1, 0)), freudenthal(A2, (1, 0)))
    assert decompose(sq).constituents == {(2, 0): 1, (0, 1): 1}
    E6 = build_root_system("E6")
    prod = convolve(freudenthal(E6, E6.fundamental_weight(1)), freudenthal(E6, E6.fundamental_weight(6)))
    assert decompose(prod).constituents == {(0,) * 6: 1, E6.fundamental_weight(2): 1, (1, 0, 0, 0, 0, 1): 1}
    assert decompose(prod).reconstruct() == prod


def test_sl2_clebsch_gordan():
    A1 = build_root_system("A1")
    power = WeightMultiplicity.delta(A1)
    for _ in range(6):
        power = convolve(power, freudenthal(A1, (1,)))
    # V(1)^6 = 5 V(0) + 9 V(2) + 5 V(4) + V(6)
    assert decompose(power).constituents == {(6,): 1, (4,): 5, (2,): 9, (0,): 5}
    assert trivial_multiplicity(power) == 5


def test_decompose_rejects_non_characters():
    A2 = build_root_system("A2")
    with pytest.raises(NotACharacterError):
        decompose(WeightMultiplicity(A2, {(1, 0): 1}))
    with pytest.raises(NotACharacterError):
        decompose(WeightMultiplicity(A2, {(0, 0): -1}))
    half = freudenthal(A2, (1, 1)).entries.copy()
    half[(0, 0)] = 1
    with pytest.raises(NotACharacterError):
        decompose(WeightMultiplicity(A2, half))


def test_mismatch_and_guards():
    with pytest.raises(DimensionMismatchError):
        convolve(freudenthal(build_root_system("A2"), (1, 0)), freudenthal(build_root_system("A3"), (1, 0, 0)))
    with pytest.raises(DimensionMismatchError):
        WeightMultiplicity(build_root_system("A2"), {(1,): 1})
    E8 = build_root_system("E8")
    with pytest.raises(ResourceGuardError):
        freudenthal(E8, E8.fundamental_weight(4), dim_guard=10**6)
    a = freudenthal(E8, E8.fundamental_weight(8))
    with pytest.raises(ResourceGuardError):
        convolve(a, a, mass_guard=1000)
