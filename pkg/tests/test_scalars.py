from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from extalg.scalars import GF, QQ, Field, FieldError, Scalar, field_from_text


def test_rational_addition():
    assert Scalar.of(QQ, Fraction(1, 2)) + Scalar.of(QQ, Fraction(1, 3)) == Scalar.of(QQ, Fraction(5, 6))


def test_gf3_product():
    assert Scalar.of(GF(3), 2) * Scalar.of(GF(3), 2) == Scalar.of(GF(3), 1)


def test_gf5_inverse():
    assert Scalar.of(GF(5), 2).inverse() == Scalar.of(GF(5), 3)


def test_characteristic_two_rejected():
    with pytest.raises(FieldError):
        GF(2)
    with pytest.raises(FieldError):
        Field(9)


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        Scalar.of(GF(3), 1) + Scalar.of(GF(5), 1)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Scalar.of(GF(7), 0).inverse()


def test_fraction_coerces_into_prime_field():
    assert GF(5).coerce(Fraction(1, 2)) == 3
    with pytest.raises(FieldError):
        GF(3).coerce(Fraction(1, 3))


@pytest.mark.parametrize("text,field", [("Q", QQ), ("gf 3", GF(3)), ("GF(7)", GF(7)), ("gf5", GF(5))])
def test_field_from_text(text, field):
    assert field_from_text(text) == field


@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 10**6))
def test_inverse_roundtrip(p, a):
    F = GF(p)
    a = F.coerce(a)
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_distributivity(a, b, c):
    x, y, z = (Scalar.of(QQ, t) for t in (a, b, c))
    assert x * (y + z) == x * y + x * z
