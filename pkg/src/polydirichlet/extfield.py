"""Explicit extension fields F_{p^k} and Frobenius orbits on polynomial roots.

This is the certifier's splitting-field oracle: it locates all roots of a
squarefree polynomial inside an explicitly constructed F_{p^k} by exhaustive
(vectorized) evaluation and reads off the orbit sizes of x -> x^p. It never
touches the factorization pipeline, so the two routes check each other.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

import numpy as np

from .errors import BudgetExceeded, NotSeparable, PolynomialDomainError
from .factorization import is_irreducible
from .fields import PrimeField
from .polynomials import Polynomial, is_separable

ROOT_SEARCH_GUARD = 2_000_000


@lru_cache(maxsize=None)
def max_partition_lcm(n: int) -> int:
    """Largest lcm of any multiset of positive integers summing to n.

    Walks all partitions (carrying the running lcm; lcm-maximality is not
    compositional over sub-partitions, so no shortcut recursion).
    """

    def rec(remaining: int, min_part: int, cur: int) -> int:
        best = cur
        for part in range(min_part, remaining + 1):
            best = max(best, rec(remaining - part, part, lcm(cur, part)))
        return best

    return rec(n, 1, 1)


def find_irreducible_modulus(p: int, k: int) -> Polynomial:
    """Canonical monic irreducible of degree k over F_p (lexicographically first)."""
    field = PrimeField(p)
    if k == 1:
        return Polynomial.x(field)
    for code in range(p**k):
        tail, c = [], code
        for _ in range(k):
            tail.append(c % p)
            c //= p
        f = Polynomial(tail + [1], field)
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles of every degree exist")


class ExtensionField:
    """F_{p^k} as F_p[T]/(modulus); elements are coefficient tuples of length k."""

    def __init__(self, p: int, k: int, modulus: Polynomial | None = None):
        self.p = p
        self.k = k
        self.order = p**k
        self.base = PrimeField(p)
        if modulus is None:
            modulus = find_irreducible_modulus(p, k)
        if modulus.degree != k or not modulus.is_monic or not is_irreducible(modulus):
            raise ValueError("modulus must be monic irreducible of degree k")
        self.modulus = modulus
        self._mod_low = [int(c) for c in modulus.coeffs[:-1]]

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def embed(self, c) -> tuple:
        return (int(self.base.coerce(c)),) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k = self.p, self.k
        out = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        for t in range(2 * k - 2, k - 1, -1):
            c = out[t] % p
            if c:
                for j, mc in enumerate(self._mod_low):
                    out[t - k + j] -= c * mc
        return tuple(x % p for x in out[:k])

    def pow(self, a, e: int):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def eval_poly(self, f: Polynomial, x):
        acc = self.zero
        for c in reversed(f.coeffs):
            acc = self.add(self.mul(acc, x), self.embed(c))
        return acc

    def roots_of(self, f: Polynomial) -> list[tuple]:
        """All roots of f in this field, by vectorized exhaustive evaluation."""
        p, k, q = self.p, self.k, self.order
        if q > ROOT_SEARCH_GUARD:
            raise BudgetExceeded(f"field size {q} beyond root-search guard", ROOT_SEARCH_GUARD)
        # all elements as rows of a (q, k) digit array
        codes = np.arange(q, dtype=np.int64)
        elems = np.empty((q, k), dtype=np.int64)
        for j in range(k):
            elems[:, j] = codes % p
            codes //= p
        mod_low = np.array(self._mod_low, dtype=np.int64)
        acc = np.zeros((q, k), dtype=np.int64)
        for c in reversed(f.coeffs):
            # acc = acc * x + c, coordinatewise over all q elements
            conv = np.zeros((q, 2 * k - 1), dtype=np.int64)
            for i in range(k):
                col = acc[:, i]
                for j in range(k):
                    conv[:, i + j] += col * elems[:, j]
            conv %= p
            for t in range(2 * k - 2, k - 1, -1):
                coef = conv[:, t]
                conv[:, t - k : t] = (conv[:, t - k : t] - coef[:, None] * mod_low) % p
            acc = conv[:, :k]
            acc[:, 0] = (acc[:, 0] + int(c)) % p
        hits = np.nonzero((acc == 0).all(axis=1))[0]
        return [tuple(int(v) for v in elems[i]) for i in hits]


def frobenius_orbit_sizes(f: Polynomial, max_degree_bound: int | None = None) -> list[int]:
    """Orbit sizes of x -> x^p on the roots of squarefree f, descending.

    Builds F_{p^k} for k = 1, 2, ... until all deg(f) roots appear, then walks
    the Frobenius orbits directly.
    """
    F = f.field
    if not isinstance(F, PrimeField):
        raise PolynomialDomainError("Frobenius orbits need a prime base field")
    if f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if not is_separable(f):
        raise NotSeparable(f"{f} has a repeated root")
    n = int(f.degree)
    bound = max_degree_bound if max_degree_bound is not None else max_partition_lcm(n)
    for k in range(1, bound + 1):
        E = ExtensionField(F.p, k)
        roots = E.roots_of(f)
        if len(roots) == n:
            return _orbit_sizes(E, roots)
    raise AssertionError("splitting field not found below the partition-lcm bound")


def _orbit_sizes(E: ExtensionField, roots: list[tuple]) -> list[int]:
    todo = set(roots)
    sizes = []
    while todo:
        start = todo.pop()
        size = 1
        x = E.frobenius(start)
        while x != start:
            todo.remove(x)
            x = E.frobenius(x)
            size += 1
        sizes.append(size)
    return sorted(sizes, reverse=True)
