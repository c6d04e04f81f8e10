from fractions import Fraction

import pytest

from polydirichlet.errors import NotPrime
from polydirichlet.fields import GF, QQ, PrimeField, Rationals, is_prime


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 101, 257, 2**61 - 1}
    for n in primes:
        assert is_prime(n)
    for n in (0, 1, 4, 9, 91, 561, 2**61 - 3):
        assert not is_prime(n)


def test_prime_field_rejects_composite():
    with pytest.raises(NotPrime):
        PrimeField(91)
    with pytest.raises(NotPrime):
        PrimeField(2**61 + 9)  # out of range even if prime


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.add(5, 4) == 2
    assert F.sub(2, 5) == 4
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.div(1, 3) == 5
    assert F.neg(2) == 5
    assert F.coerce(-1) == 6
    assert F.coerce(Fraction(1, 3)) == 5


def test_prime_field_enumeration_order():
    assert list(GF(5).elements()) == [0, 1, 2, 3, 4]


def test_rationals_enumeration_order():
    it = QQ.elements()
    got = [next(it) for _ in range(5)]
    assert got == [0, 1, -1, 2, -2]


def test_rationals_arithmetic_lowest_terms():
    a = QQ.coerce(Fraction(2, 4))
    assert a == Fraction(1, 2)
    assert QQ.inv(Fraction(3, 7)) == Fraction(7, 3)
    assert QQ.fmt(Fraction(-3, 6)) == "-1/2"
    assert QQ.parse("4/6") == Fraction(2, 3)


def test_field_equality_and_hash():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ == Rationals()
    assert hash(GF(5)) == hash(GF(5))
