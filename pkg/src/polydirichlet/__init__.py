"""polydirichlet: constructive Dirichlet theorem for polynomial rings.

Given coprime a, b over a field, build c so that a + b*c*Y is irreducible of
prescribed X-degree n with certified symmetric Galois group over the
algebraic closure of the constants, together with the finite group machinery
(twisted wreath products, embedding problems, primitivity certificates) the
certification rests on.
"""

from .fields import GF, QQ, PrimeField, Rationals, is_prime
from .polynomials import (
    Polynomial,
    discriminant,
    extended_gcd,
    is_separable,
    poly_gcd,
    resultant,
    roots_in_field,
)
from .factorization import FactorMultiset, factor, is_irreducible

__all__ = [
    "GF",
    "QQ",
    "PrimeField",
    "Rationals",
    "is_prime",
    "Polynomial",
    "poly_gcd",
    "extended_gcd",
    "discriminant",
    "resultant",
    "is_separable",
    "roots_in_field",
    "FactorMultiset",
    "factor",
    "is_irreducible",
]
