import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbqdim.cyclo import (CycloNum, as_integer, cyclo_field, cyclotomic_polynomial, q_integer,
                            zeta_pow)
from hilbqdim.errors import DimensionMismatchError


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def embed(z: CycloNum) -> complex:
    zeta = cmath.exp(2j * math.pi / z.field.m)
    return sum(float(c) * zeta ** k for k, c in enumerate(z.coeffs))


@pytest.mark.parametrize("m", list(range(1, 41)) + [60, 62])
def test_divisor_product_is_x_to_m_minus_one(m):
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = poly_mul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (m - 1) + [1]


@pytest.mark.parametrize("m,phi", [(6, 2), (14, 6), (26, 12), (38, 18), (62, 30), (12, 4)])
def test_degree_is_totient(m, phi):
    assert cyclo_field(m).degree == phi == len(cyclotomic_polynomial(m)) - 1


def test_known_small_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", [6, 8, 14, 26, 62])
def test_zeta_has_order_m(m):
    F = cyclo_field(m)
    z = zeta_pow(F, 1)
    assert z ** m == F.one()
    assert all(z ** k != F.one() for k in range(1, m))
    assert zeta_pow(F, m // 2) == -F.one()
    assert zeta_pow(F, -3) * zeta_pow(F, 3) == F.one()


@pytest.mark.parametrize("m", [6, 14, 26, 62])
def test_q_integers_match_complex_embedding(m):
    F = cyclo_field(m)
    for k in range(-m, 2 * m):
        expected = math.sin(2 * math.pi * k / m) / math.sin(2 * math.pi / m)
        assert abs(embed(q_integer(F, k)) - expected) < 1e-9


@pytest.mark.parametrize("m", [6, 14, 62])
def test_inverse_of_zeta_minus_inverse(m):
    F = cyclo_field(m)
    d = zeta_pow(F, 1) - zeta_pow(F, -1)
    assert d.inverse() * d == F.one()
    assert F.one() / d == d.inverse()


def test_zero_inverse_raises():
    F = cyclo_field(14)
    with pytest.raises(ZeroDivisionError):
        F.zero().inverse()


def test_integer_cast():
    F = cyclo_field(14)
    assert as_integer(F.from_int(-7)) == -7
    assert F.from_int(3).as_integer() == 3
    assert zeta_pow(F, 1).as_integer() is None
    assert F.element([Fraction(1, 2)]).as_integer() is None
    # [2]_zeta = zeta + zeta^-1 = 1 when m = 6
    assert q_integer(cyclo_field(6), 2).as_integer() == 1


def test_fields_do_not_mix():
    with pytest.raises(DimensionMismatchError):
        cyclo_field(14).one() + cyclo_field(26).one()


coeff = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def elements(m):
    d = cyclo_field(m).degree
    return st.lists(coeff, min_size=1, max_size=2 * d).map(cyclo_field(m).element)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([14, 26]).flatmap(lambda m: st.tuples(elements(m), elements(m), elements(m))))
def test_field_axioms(triple):
    a, b, c = triple
    F = a.field
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero()
    assert a * F.one() == a
    if a:
        assert a * a.inverse() == F.one()
        assert (b / a) * a == b
    assert hash(a + F.zero()) == hash(a)


@settings(max_examples=40, deadline=None)
@given(elements(26), elements(26))
def test_embedding_is_a_ring_map(a, b):
    assert abs(embed(a * b) - embed(a) * embed(b)) < 1e-6 * (1 + abs(embed(a)) * abs(embed(b)))
