"""Polynomial factorization over prime fields.

Pipeline: squarefree decomposition, distinct-degree splitting via Frobenius
powers, then seeded Cantor-Zassenhaus equal-degree splitting. Inner loops
run on raw coefficient lists; when p is small enough for int64 products a
numpy kernel (convolution + precomputed reduction matrix) takes over.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_SEED
from .errors import PolynomialDomainError
from .fields import PrimeField
from .polynomials import Polynomial

# -- raw coefficient-list helpers (ascending order, reduced mod p) -------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic(a: list[int], p: int) -> list[int]:
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % p for c in out])


def _divmod(a: list[int], b: list[int], p: int):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    d = len(b) - 1
    inv = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - d)
    for i in range(len(rem) - d - 1, -1, -1):
        c = rem[i + d] * inv % p
        if c:
            quot[i] = c
            for j, bc in enumerate(b):
                if bc:
                    rem[i + j] = (rem[i + j] - c * bc) % p
    return _trim(quot), _trim(rem[:d])


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p)


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _deriv(a: list[int], p: int) -> list[int]:
    return _trim([k * c % p for k, c in enumerate(a)][1:])


class _ModArith:
    """Arithmetic in F_p[X]/(f) for monic f of degree m >= 1."""

    def __init__(self, p: int, f: list[int]):
        self.p = p
        self.f = f
        self.m = len(f) - 1
        # int64 is safe when a dot product of m coefficient products fits
        self.fast = p * p * (2 * self.m + 1) < 2**62
        if self.fast:
            self._flow = np.array(f[:-1], dtype=np.int64)
            self._red = self._reduction_matrix()

    def _reduction_matrix(self) -> np.ndarray:
        # row j = X^(m+j) mod f, for j = 0..m-2
        p, m = self.p, self.m
        rows = np.zeros((max(m - 1, 0), m), dtype=np.int64)
        cur = (-self._flow) % p  # X^m mod f
        for j in range(m - 1):
            rows[j] = cur
            top = cur[m - 1]
            cur = np.roll(cur, 1)
            cur[0] = 0
            if top:
                cur = (cur - top * self._flow) % p
        return rows

    def reduce(self, a: list[int]) -> list[int]:
        if len(a) <= self.m:
            return list(a)
        return _divmod(list(a), self.f, self.p)[1]

    def mulmod(self, a: list[int], b: list[int]) -> list[int]:
        p, m = self.p, self.m
        if not a or not b:
            return []
        if self.fast:
            conv = np.convolve(
                np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)
            ) % p
            if conv.shape[0] > m:
                low = np.zeros(m, dtype=np.int64)
                low[: min(m, conv.shape[0])] = conv[:m]
                high = conv[m:]
                low = (low + high @ self._red[: high.shape[0]]) % p
                conv = low
            return _trim([int(c) for c in conv])
        return _divmod(_mul(a, b, p), self.f, p)[1]

    def powmod(self, a: list[int], e: int) -> list[int]:
        result = [1]
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return result

    def frobenius(self, a: list[int]) -> list[int]:
        """a^p mod f."""
        return self.powmod(a, self.p)

    def x(self) -> list[int]:
        if self.m == 1:
            return self.reduce([0, 1])
        return [0, 1]


def _has_root_screen(f: list[int], p: int):
    """Exhaustive root check for small p; None means 'not screened'."""
    if p > 8192:
        return None
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(f):
        acc = (acc * xs + c) % p
    return bool((acc == 0).any())


def _pth_root(a: list[int], p: int) -> list[int]:
    # Frobenius is the identity on F_p, so the root just re-indexes coefficients.
    return [a[i] for i in range(0, len(a), p)]


# -- factorization proper -------------------------------------------------


def _squarefree_parts(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """[(g, m)] with f = prod g^m, each g monic squarefree, g's pairwise coprime."""
    out: list[tuple[list[int], int]] = []
    df = _deriv(f, p)
    if not df:
        if len(f) == 1:
            return []
        for g, m in _squarefree_parts(_pth_root(f, p), p):
            out.append((g, m * p))
        return out
    c = _gcd(f, df, p)
    w = _divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        z = _divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        w = y
        c = _divmod(c, y, p)[0]
        i += 1
    if len(c) > 1:
        for g, m in _squarefree_parts(_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def _distinct_degree(g: list[int], p: int) -> list[tuple[list[int], int]]:
    """[(h, d)] with h the product of the irreducible degree-d factors of squarefree g."""
    out = []
    arith = _ModArith(p, g)
    h = arith.x()
    d = 0
    while len(g) - 1 > 2 * d:
        d += 1
        h = arith.frobenius(h)
        part = _gcd(_sub(h, [0, 1], p), g, p)
        if len(part) > 1:
            out.append((part, d))
            g = _divmod(g, part, p)[0]
            if len(g) == 1:
                return out
            arith = _ModArith(p, g)
            h = arith.reduce(h)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _equal_degree_split(g: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Split squarefree g, all of whose irreducible factors have degree d."""
    n = len(g) - 1
    if n == d:
        return [g]
    arith = _ModArith(p, g)
    while True:
        u = [rng.randrange(p) for _ in range(n - 1)] + [rng.randrange(1, p)]
        if p == 2:
            # trace map over F_{2^d}; subtraction is addition in char 2
            w = _trim(list(u))
            acc = _trim(list(u))
            for _ in range(d - 1):
                acc = arith.mulmod(acc, acc)
                w = _sub(w, acc, p)
        else:
            w = _sub(arith.powmod(u, (p**d - 1) // 2), [1], p)
        cand = _gcd(w, g, p)
        deg_cand = len(cand) - 1
        if 0 < deg_cand < n:
            other = _divmod(g, cand, p)[0]
            return _equal_degree_split(cand, d, p, rng) + _equal_degree_split(other, d, p, rng)


@dataclass(frozen=True)
class FactorMultiset:
    """unit * prod(factors[i]^mult[i]) == the factored polynomial."""

    factors: tuple[tuple[Polynomial, int], ...]
    unit: object
    field: PrimeField

    def product(self) -> Polynomial:
        out = Polynomial.constant(self.unit, self.field)
        for g, m in self.factors:
            out = out * g**m
        return out

    def degrees(self) -> list[int]:
        """Irreducible factor degrees, with multiplicity, sorted descending."""
        out: list[int] = []
        for g, m in self.factors:
            out.extend([int(g.degree)] * m)
        return sorted(out, reverse=True)

    def __str__(self):
        if not self.factors:
            return self.field.fmt(self.unit)
        parts = [] if self.unit == self.field.one else [self.field.fmt(self.unit)]
        for g, m in self.factors:
            parts.append(f"({g})" + (f"^{m}" if m > 1 else ""))
        return " * ".join(parts)


def factor(f: Polynomial, seed: int = DEFAULT_SEED) -> FactorMultiset:
    """Full factorization of a nonzero polynomial over a prime field."""
    F = f.field
    if not isinstance(F, PrimeField):
        raise PolynomialDomainError("factorization implemented over prime fields only")
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    p = F.p
    unit = f.lc
    if f.degree == 0:
        return FactorMultiset((), unit, F)
    rng = random.Random(seed)
    work = [int(c) for c in f.monic().coeffs]
    found: list[tuple[list[int], int]] = []
    for part, mult in _squarefree_parts(work, p):
        for byd, d in _distinct_degree(part, p):
            for irr in _equal_degree_split(byd, d, p, rng):
                found.append((irr, mult))
    polys = [(Polynomial(g, F), m) for g, m in found]
    polys.sort(key=lambda t: (int(t[0].degree), t[0].coeffs))
    return FactorMultiset(tuple(polys), unit, F)


def is_irreducible(f: Polynomial) -> bool:
    """True iff f is irreducible over its prime field (so deg f >= 1)."""
    F = f.field
    if not isinstance(F, PrimeField):
        raise PolynomialDomainError("irreducibility test implemented over prime fields only")
    p = F.p
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    g = [int(c) for c in f.monic().coeffs]
    if not _deriv(g, p):
        return False  # p-th power
    rooted = _has_root_screen(g, p)
    if rooted:
        return False
    arith = _ModArith(p, g)
    h = arith.x()
    for d in range(1, int(n) // 2 + 1):
        h = arith.frobenius(h)
        if d == 1 and rooted is False:
            continue  # linear factors already ruled out by the screen
        if len(_gcd(_sub(h, [0, 1], p), g, p)) > 1:
            return False
    return True
