"""Quantum dimensions at zeta = exp(2 pi i / 2(h^vee + 1)).

The product formula over positive roots is evaluated cancellation-first:
every zeta-integer index is folded to a canonical residue in 0..(h^vee+1)/2
using

    [k + m] = [k],   [-k] = -[k],   [h^vee + 1 - k] = [k],   [h^vee + 1] = 0,

so common numerator and denominator factors cancel as integers before any
field arithmetic happens.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from . import config
from .cyclo import CycloField, CycloNum, cyclo_field, q_integer
from .errors import NotDominantError, ResourceGuardError
from .rootsys import RootSystem, Weight, pairing


@dataclass(frozen=True)
class QuantumDimension:
    value: CycloNum
    as_int: Optional[int]

    @classmethod
    def of(cls, value: CycloNum) -> "QuantumDimension":
        return cls(value, value.as_integer())

    def __str__(self):
        return str(self.as_int) if self.as_int is not None else repr(self.value)


def field_for(rs: RootSystem) -> CycloField:
    return cyclo_field(rs.m)


def _require_dominant(lam) -> None:
    if min(lam, default=0) < 0:
        raise NotDominantError(f"highest weight {tuple(lam)} is not dominant")


def fold_index(k: int, h_dual: int) -> tuple[int, int]:
    """Return (sign, r) with [k] = sign * [r] and 0 <= r <= (h_dual + 1) // 2."""
    half = h_dual + 1
    m = 2 * half
    r = k % m
    sign = 1
    if r > half:
        r, sign = m - r, -1
    r = min(r, half - r)
    return sign, r


def reduced_ratio(rs: RootSystem, lam: Weight) -> tuple[int, Counter, Counter]:
    """Sign and uncancelled numerator/denominator residues of the product formula.

    The numerator counter holds residue 0 iff the quantum dimension vanishes.
    """
    sign = 1
    num: Counter = Counter()
    den: Counter = Counter()
    shifted = tuple(x + 1 for x in lam)
    for alpha in rs.positive_roots:
        s, r = fold_index(pairing(shifted, alpha), rs.h_dual)
        sign *= s
        num[r] += 1
        s, r = fold_index(sum(alpha), rs.h_dual)
        assert r != 0, "denominator zeta-integer vanished"
        sign *= s
        den[r] += 1
    common = num & den
    return sign, num - common, den - common


def quantum_dimension(rs: RootSystem, lam: Weight) -> QuantumDimension:
    """dim_q V(lam) from the product formula over positive roots."""
    _require_dominant(lam)
    rs._check(lam)
    F = field_for(rs)
    sign, num, den = reduced_ratio(rs, lam)
    if num[0]:
        return QuantumDimension.of(F.zero())
    if not num and not den:
        return QuantumDimension.of(F.from_int(sign))
    value = F.from_int(sign)
    for r, e in num.items():
        value = value * q_integer(F, r) ** e
    denominator = F.one()
    for r, e in den.items():
        denominator = denominator * q_integer(F, r) ** e
    return QuantumDimension.of(value / denominator)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Classical dimension of V(lam) by the Weyl dimension formula."""
    _require_dominant(lam)
    rs._check(lam)
    shifted = tuple(x + 1 for x in lam)
    num = den = 1
    for alpha in rs.positive_roots:
        num *= pairing(shifted, alpha)
        den *= sum(alpha)
    q, r = divmod(num, den)
    assert r == 0
    return q


def quantum_dimension_via_character(rs: RootSystem, lam: Weight,
                                    dim_guard: Optional[int] = None) -> QuantumDimension:
    """sum over weights mu of mult(mu) * zeta^(2 rho, mu), from the full weight system."""
    from .charlab import _orbit, dominant_character

    _require_dominant(lam)
    guard = config.guard(config.QDIM_GUARD) if dim_guard is None else dim_guard
    dim = weyl_dimension(rs, lam)
    if dim > guard:
        raise ResourceGuardError(f"dim V({tuple(lam)}) = {dim} exceeds guard {guard}")
    F = field_for(rs)
    two_rho = [sum(a[i] for a in rs.positive_roots) for i in range(rs.rank)]
    exponents: Counter = Counter()
    for mu, c in dominant_character(rs, tuple(lam)).items():
        for nu in _orbit(rs, mu):
            # (2 rho, nu) = sum_alpha>0 <nu, alpha^vee>
            exponents[sum(x * y for x, y in zip(nu, two_rho)) % F.m] += c
    return QuantumDimension.of(F.from_exponents(exponents))


def q_binomial(n: int, k: int, field: CycloField) -> CycloNum:
    """[n choose k]_zeta = [n][n-1]...[n-k+1] / [k][k-1]...[1]."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    num = field.one()
    den = field.one()
    for i in range(k):
        num = num * q_integer(field, n - i)
        den = den * q_integer(field, i + 1)
    return num / den
