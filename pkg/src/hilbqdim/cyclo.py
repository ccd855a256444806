"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are residues of Q[x] modulo the m-th cyclotomic polynomial, stored
as a tuple of ``Fraction`` coefficients of length ``deg Phi_m`` (constant term
first).  That representation is canonical, so equality is tuple equality.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DimensionMismatchError

Poly = list  # dense coefficient list, constant term first


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence, b: Sequence) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(x) for x in a]
    for k in range(len(a) - len(b), -1, -1):
        coef = r[k + len(b) - 1] / lead
        q[k] = coef
        if coef:
            for j, y in enumerate(b):
                r[k + j] -= coef * y
    return _trim(q), _trim(r[: len(b) - 1])


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first."""
    if m < 1:
        raise ValueError(f"cyclotomic_polynomial needs m >= 1, got {m}")
    num: Poly = [1]
    den: Poly = [1]
    for d in range(1, m + 1):
        if m % d:
            continue
        mu = _mobius(m // d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _poly_mul(num, factor)
        else:
            den = _poly_mul(den, factor)
    q, r = _poly_divmod(num, den)
    assert not r, "exact division failed"
    assert all(x.denominator == 1 for x in q)
    return tuple(int(x) for x in q)


class CycloField:
    """Q(zeta_m) presented as Q[x] / Phi_m(x), with zeta the class of x."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"conductor must be positive, got {m}")
        self.m = m
        self.phi_poly = cyclotomic_polynomial(m)
        self.degree = len(self.phi_poly) - 1
        d = self.degree
        # x^k mod Phi_m for k = 0 .. max(m, 2d) - 1, as integer vectors
        powers = []
        cur = [1] + [0] * (d - 1) if d else []
        for _ in range(max(m, 2 * d)):
            powers.append(tuple(cur))
            top = cur[-1] if d else 0
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * p for c, p in zip(cur, self.phi_poly)]
        self._powers = powers

    def __repr__(self):
        return f"CycloField({self.m})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.m == self.m

    def __hash__(self):
        return hash(("CycloField", self.m))

    def __reduce__(self):
        return (cyclo_field, (self.m,))

    def element(self, coeffs: Iterable) -> "CycloNum":
        """Reduce an arbitrary polynomial in zeta into canonical form."""
        coeffs = list(coeffs)
        d = self.degree
        out = [Fraction(0)] * d
        for k, c in enumerate(coeffs):
            if not c:
                continue
            if k < len(self._powers):
                vec = self._powers[k]
            else:
                vec = _reduce_power(self, k)
            for j, v in enumerate(vec):
                if v:
                    out[j] += c * v
        return CycloNum(self, tuple(out), _canonical=True)

    def from_int(self, n) -> "CycloNum":
        return CycloNum(self, (Fraction(n),) + (Fraction(0),) * (self.degree - 1), _canonical=True)

    def zero(self) -> "CycloNum":
        return self.from_int(0)

    def one(self) -> "CycloNum":
        return self.from_int(1)

    def from_exponents(self, counts: Mapping[int, int]) -> "CycloNum":
        """sum_k counts[k] * zeta**k, with exponents taken mod m."""
        folded = [0] * self.m
        for k, c in counts.items():
            folded[k % self.m] += c
        return self.element(folded)


def _reduce_power(field: CycloField, k: int) -> tuple:
    return field._powers[k % field.m]


@lru_cache(maxsize=None)
def cyclo_field(m: int) -> CycloField:
    return CycloField(m)


Scalar = Union[int, Fraction]


class CycloNum:
    """Immutable element of a :class:`CycloField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: Sequence, _canonical: bool = False):
        if _canonical:
            object.__setattr__(self, "field", field)
            object.__setattr__(self, "coeffs", tuple(coeffs))
        else:
            reduced = field.element(coeffs)
            object.__setattr__(self, "field", field)
            object.__setattr__(self, "coeffs", reduced.coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    def _coerce(self, other) -> Optional["CycloNum"]:
        if isinstance(other, CycloNum):
            if other.field != self.field:
                raise DimensionMismatchError(
                    f"cannot combine elements of Q(zeta_{self.field.m}) and Q(zeta_{other.field.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.coeffs), _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.field, tuple(a * other for a in self.coeffs), _canonical=True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.element(_poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_m."""
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # invariant: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi)
        r0, r1 = [Fraction(x) for x in self.field.phi_poly], [Fraction(x) for x in a]
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        c = r1[0]
        return self.field.element([x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except DimensionMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def as_integer(self) -> Optional[int]:
        """The rational integer this element equals, or None."""
        if any(self.coeffs[1:]):
            return None
        c = self.coeffs[0] if self.coeffs else Fraction(0)
        return int(c) if c.denominator == 1 else None

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                coef = str(c)
                if mono and c == 1:
                    coef = ""
                elif mono and c == -1:
                    coef = "-"
                elif mono:
                    coef = f"({c})*" if c.denominator != 1 or c < 0 else f"{c}*"
                terms.append(coef + mono if mono else coef)
        return " + ".join(terms) if terms else "0"


def _poly_sub(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def zeta_pow(field: CycloField, k: int) -> CycloNum:
    """zeta**k for any integer k."""
    return CycloNum(field, tuple(Fraction(x) for x in field._powers[k % field.m]), _canonical=True)


def q_integer(field: CycloField, k: int) -> CycloNum:
    """[k]_zeta = (zeta^k - zeta^-k) / (zeta - zeta^-1), evaluated as a sum of powers."""
    if k < 0:
        return -q_integer(field, -k)
    # [k] = zeta^(k-1) + zeta^(k-3) + ... + zeta^(1-k)
    return field.from_exponents({k - 1 - 2 * j: 1 for j in range(k)})


def as_integer(a: CycloNum) -> Optional[int]:
    return a.as_integer()
