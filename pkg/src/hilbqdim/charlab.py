"""Weight multiplicities of finite-dimensional representations.

Freudenthal's recursion on dominant weights, Weyl orbits, tensor products as
convolutions of weight systems, and decomposition of a Weyl-invariant weight
system into irreducible characters by highest-weight stripping.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from operator import add
from typing import Iterable, Mapping, Optional

from . import config
from .errors import (DimensionMismatchError, NotACharacterError, NotDominantError,
                     ResourceGuardError)
from .qdim import weyl_dimension
from .rootsys import RootSystem, Weight, simple_reflection


class WeightMultiplicity:
    """Finitely supported map from weights to positive integers."""

    __slots__ = ("rs", "entries")

    def __init__(self, rs: RootSystem, entries: Optional[Mapping[Weight, int]] = None):
        self.rs = rs
        self.entries: dict[Weight, int] = {}
        for mu, c in (entries or {}).items():
            if len(mu) != rs.rank:
                raise DimensionMismatchError(f"weight {mu} does not belong to {rs.label}")
            if c:
                self.entries[tuple(mu)] = c

    def __getitem__(self, mu) -> int:
        return self.entries.get(tuple(mu), 0)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def items(self):
        return self.entries.items()

    def __eq__(self, other):
        if not isinstance(other, WeightMultiplicity):
            return NotImplemented
        return self.rs.label == other.rs.label and self.entries == other.entries

    def __repr__(self):
        return f"WeightMultiplicity({self.rs.label}, {len(self.entries)} weights, mass {self.dimension})"

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def dominant_part(self) -> dict[Weight, int]:
        return {mu: c for mu, c in self.entries.items() if min(mu) >= 0}

    def is_weyl_invariant(self) -> bool:
        for mu, c in self.entries.items():
            for i in range(self.rs.rank):
                if self[simple_reflection(self.rs, mu, i)] != c:
                    return False
        return True

    @classmethod
    def delta(cls, rs: RootSystem, mu: Optional[Weight] = None) -> "WeightMultiplicity":
        """The weight system with a single weight (the trivial character by default)."""
        return cls(rs, {tuple(mu) if mu is not None else (0,) * rs.rank: 1})


@dataclass
class IsoDecomposition:
    """Isotypic decomposition: dominant highest weight -> multiplicity."""

    rs: RootSystem
    constituents: dict[Weight, int] = field(default_factory=dict)

    def reconstruct(self) -> WeightMultiplicity:
        total: Counter = Counter()
        for lam, c in self.constituents.items():
            for mu, k in freudenthal(self.rs, lam).items():
                total[mu] += c * k
        return WeightMultiplicity(self.rs, total)


def dominant_representative(rs: RootSystem, mu: Iterable[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of mu."""
    mu = list(mu)
    cartan = rs.cartan
    n = rs.rank
    while True:
        for i in range(n):
            k = mu[i]
            if k < 0:
                row = cartan[i]
                for j in range(n):
                    mu[j] -= k * row[j]
                break
        else:
            return tuple(mu)


def weyl_orbit(rs: RootSystem, mu: Iterable[int]) -> set[Weight]:
    """Closure of {mu} under simple reflections."""
    start = tuple(mu)
    rs._check(start)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for nu in frontier:
            for i in range(rs.rank):
                if nu[i]:
                    r = simple_reflection(rs, nu, i)
                    if r not in orbit:
                        orbit.add(r)
                        nxt.append(r)
        frontier = nxt
    return orbit


def _check_dominant(lam) -> None:
    if min(lam, default=0) < 0:
        raise NotDominantError(f"highest weight {tuple(lam)} is not dominant")


def _dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights of V(lam), sorted by height of lam - mu (then lexicographically)."""
    root_weights = [rs.root_to_weight(a) for a in rs.positive_roots]
    heights = [sum(a) for a in rs.positive_roots]
    level = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for aw, h in zip(root_weights, heights):
                nu = tuple(x - y for x, y in zip(mu, aw))
                if min(nu) >= 0 and nu not in level:
                    level[nu] = level[mu] + h
                    nxt.append(nu)
        frontier = nxt
    return sorted(level, key=lambda mu: (level[mu], tuple(-x for x in mu)))


@lru_cache(maxsize=None)
def _scaled_form(rs: RootSystem) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """(det, det * C^-1): an integer matrix for det times the form on weights."""
    det = math.lcm(*(x.denominator for row in rs.inverse_cartan for x in row))
    return det, tuple(tuple(int(x * det) for x in row) for row in rs.inverse_cartan)


@lru_cache(maxsize=512)
def dominant_character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam) by Freudenthal's recursion."""
    _check_dominant(lam)
    rs._check(lam)
    lam = tuple(lam)
    order = _dominant_weights(rs, lam)
    dom = set(order)
    det, form = _scaled_form(rs)
    n = rs.rank

    def scaled_norm(mu) -> int:
        # det * (mu + rho, mu + rho), exact
        s = [x + 1 for x in mu]
        return sum(s[i] * sum(form[i][j] * s[j] for j in range(n)) for i in range(n))

    top = scaled_norm(lam)
    roots = [(a, rs.root_to_weight(a)) for a in rs.positive_roots]
    reps: dict[Weight, Weight] = {}
    mult = {lam: 1}
    for mu in order[1:]:
        denom = top - scaled_norm(mu)
        total = 0
        for a, aw in roots:
            base = sum(x * y for x, y in zip(mu, a))
            nu = mu
            j = 1
            while True:
                nu = tuple(map(add, nu, aw))
                d = reps.get(nu)
                if d is None:
                    d = reps[nu] = dominant_representative(rs, nu)
                if d not in dom:
                    break
                # (mu + j alpha, alpha) = <mu, alpha> + 2j
                total += (base + 2 * j) * mult[d]
                j += 1
        value, rem = divmod(2 * total * det, denom)
        if rem or value < 0:
            raise ArithmeticError(f"Freudenthal produced {Fraction(2 * total * det, denom)} at {mu} for V({lam})")
        if value:
            mult[mu] = value
    return mult


def freudenthal(rs: RootSystem, lam: Weight, dim_guard: Optional[int] = None) -> WeightMultiplicity:
    """Full weight system of the irreducible module V(lam)."""
    _check_dominant(lam)
    guard = config.guard(config.FREUDENTHAL_GUARD) if dim_guard is None else dim_guard
    dim = weyl_dimension(rs, lam)
    if dim > guard:
        raise ResourceGuardError(f"dim V({tuple(lam)}) = {dim} exceeds guard {guard}")
    return _full_character(rs, tuple(lam))


@lru_cache(maxsize=256)
def _full_character(rs: RootSystem, lam: Weight) -> WeightMultiplicity:
    entries = {}
    for mu, c in dominant_character(rs, lam).items():
        for nu in _orbit(rs, mu):
            entries[nu] = c
    return WeightMultiplicity(rs, entries)


@lru_cache(maxsize=4096)
def _orbit(rs: RootSystem, mu: Weight) -> frozenset:
    return frozenset(weyl_orbit(rs, mu))


def multiplicity(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Multiplicity of a single weight mu in V(lam), without expanding orbits."""
    return dominant_character(rs, tuple(lam)).get(dominant_representative(rs, mu), 0)


def convolve(a: WeightMultiplicity, b: WeightMultiplicity,
             mass_guard: Optional[int] = None) -> WeightMultiplicity:
    """Weight system of the tensor product: (a * b)(nu) = sum_mu a(mu) b(nu - mu)."""
    if a.rs.label != b.rs.label:
        raise DimensionMismatchError(f"cannot convolve {a.rs.label} with {b.rs.label}")
    guard = config.guard(config.CONVOLUTION_GUARD) if mass_guard is None else mass_guard
    if a.dimension * b.dimension > guard:
        raise ResourceGuardError(
            f"convolution mass {a.dimension * b.dimension} exceeds guard {guard}")
    out: Counter = Counter()
    for mu, x in a.items():
        for nu, y in b.items():
            out[tuple(p + q for p, q in zip(mu, nu))] += x * y
    return WeightMultiplicity(a.rs, out)


def _dominance_key(rs: RootSystem, mu: Weight):
    # (2 rho, mu) = sum over positive roots of <mu, alpha>; larger means higher
    return (sum(sum(x * y for x, y in zip(mu, a)) for a in rs.positive_roots), mu)


def decompose(wm: WeightMultiplicity) -> IsoDecomposition:
    """Split a Weyl-invariant weight system into irreducible characters."""
    rs = wm.rs
    if any(c < 0 for c in wm.entries.values()):
        raise NotACharacterError("weight system has negative masses")
    if not wm.is_weyl_invariant():
        raise NotACharacterError("weight system is not Weyl-invariant")
    residual = Counter(wm.dominant_part())
    result = IsoDecomposition(rs)
    while residual:
        lam = max(residual, key=lambda mu: _dominance_key(rs, mu))
        c = residual[lam]
        result.constituents[lam] = c
        for mu, k in dominant_character(rs, lam).items():
            left = residual.get(mu, 0) - c * k
            if left < 0:
                raise NotACharacterError(
                    f"negative residual {left} at {mu} after removing {c} x V({lam})")
            if left:
                residual[mu] = left
            else:
                residual.pop(mu, None)
    return result


def trivial_multiplicity(wm: WeightMultiplicity) -> int:
    """Multiplicity of the trivial representation in a character."""
    return decompose(wm).constituents.get((0,) * wm.rs.rank, 0)
