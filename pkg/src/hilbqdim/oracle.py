"""Torus-fixed-point count for Hilb^n(C^2 / (Z/k)).

Fixed points are monomial ideals of the invariant ring C[x, y]^(Z/k), whose
monomials are x^a y^b with a = b (mod k).  An ideal of colength n corresponds
to its complement: an n-element subset of the exponent monoid that is closed
under subtracting monoid elements.  Since every such subtraction is a sum of
the generators (1, 1), (k, 0), (0, k), closure under those three suffices.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fock import QSeries


@dataclass(frozen=True, order=True)
class MonoidPoint:
    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"group order must be positive, got {self.k}")
        if self.a < 0 or self.b < 0 or (self.a - self.b) % self.k:
            raise ValueError(f"({self.a}, {self.b}) is not in the invariant monoid for k={self.k}")


def _generators(k: int) -> tuple[tuple[int, int], ...]:
    return ((1, 1), (k, 0), (0, k)) if k > 1 else ((1, 0), (0, 1))


def _key(p):
    # graded order: a linear extension of the divisibility order
    return (p[0] + p[1], p[0])


def count_staircases(k: int, n: int) -> int:
    """Number of downward-closed n-element subsets of {(a, b) in N^2 : a = b mod k}."""
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    gens = _generators(k)

    def addable(p, members) -> bool:
        for g in gens:
            q = (p[0] - g[0], p[1] - g[1])
            if q[0] >= 0 and q[1] >= 0 and q not in members:
                return False
        return True

    def extend(members: set, last, remaining: int) -> int:
        if remaining == 0:
            return 1
        # candidates lie one generator above a member; only ones after `last`
        cands = {(p[0] + g[0], p[1] + g[1]) for p in members for g in gens}
        total = 0
        for c in sorted(cands, key=_key):
            if _key(c) <= _key(last) or c in members or not addable(c, members):
                continue
            members.add(c)
            total += extend(members, c, remaining - 1)
            members.remove(c)
        return total

    if n == 0:
        return 1
    return extend({(0, 0)}, (0, 0), n - 1)


def euler_series_oracle(k: int, N: int) -> QSeries:
    """count_staircases(k, n) for n = 0..N."""
    return QSeries([count_staircases(k, n) for n in range(N + 1)])
