"""Dense univariate polynomials with exact coefficients over F_p or Q.

The zero polynomial has an empty coefficient vector and degree -inf
(``float("-inf")``), so degree comparisons against integers just work.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import FieldMismatch, ParseError, PolynomialDomainError
from .fields import Field, PrimeField, QQ, Rationals

NEG_INF = float("-inf")

Degree = Union[int, float]


class Polynomial:
    """Immutable polynomial; coefficients ascending, leading coefficient nonzero."""

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs, field: Field, _normalized: bool = False):
        if not _normalized:
            coeffs = [field.coerce(c) for c in coeffs]
            while coeffs and coeffs[-1] == field.zero:
                coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls((), field, _normalized=True)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls((field.one,), field, _normalized=True)

    @classmethod
    def constant(cls, value, field: Field) -> "Polynomial":
        return cls((value,), field)

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls((field.zero, field.one), field, _normalized=True)

    @classmethod
    def monomial(cls, coeff, k: int, field: Field) -> "Polynomial":
        return cls((field.zero,) * k + (coeff,), field)

    @classmethod
    def linear_root(cls, gamma, field: Field) -> "Polynomial":
        """X - gamma."""
        return cls((field.neg(field.coerce(gamma)), field.one), field)

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.coeffs, self.field))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, {self.field})"

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.field)
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(out, F)

    def __neg__(self):
        F = self.field
        return Polynomial(tuple(F.neg(c) for c in self.coeffs), F, _normalized=True)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.field)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(F)
        if isinstance(F, PrimeField):
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return Polynomial([c % p for c in out], F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Polynomial(out, F)

    __rmul__ = __mul__

    def scale(self, scalar) -> "Polynomial":
        F = self.field
        s = F.coerce(scalar)
        return Polynomial(tuple(F.mul(c, s) for c in self.coeffs), F)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        self._check(other)
        F = self.field
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial.zero(F), self
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        inv_lc = F.inv(other.lc)
        quot = [F.zero] * (len(rem) - d)
        for i in range(len(rem) - d - 1, -1, -1):
            c = F.mul(rem[i + d], inv_lc)
            if c != F.zero:
                quot[i] = c
                for j, bc in enumerate(other.coeffs):
                    rem[i + j] = F.sub(rem[i + j], F.mul(c, bc))
        return Polynomial(quot, F), Polynomial(rem[:d], F)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> "Polynomial":
        F = self.field
        return Polynomial(
            [F.mul(F.coerce(k), c) for k, c in enumerate(self.coeffs) if k >= 1],
            F,
        )

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        F = self.field
        x = F.coerce(x)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def shift_arg(self, gamma) -> "Polynomial":
        """self(X + gamma), via Horner on (X + gamma)."""
        F = self.field
        xg = Polynomial((F.coerce(gamma), F.one), F)
        acc = Polynomial.zero(F)
        for c in reversed(self.coeffs):
            acc = acc * xg + c
        return acc

    # -- text grammar ---------------------------------------------------
    #
    # term := coeff '*' 'X' ['^' k] | 'X' ['^' k] | coeff
    # poly := ['-'] term (('+'|'-') term)*
    # coeff := decimal integer, or num/den in rational mode

    def to_string(self) -> str:
        F = self.field
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == F.zero:
                continue
            neg = isinstance(F, Rationals) and c < 0
            mag = -c if neg else c
            if k == 0:
                body = F.fmt(mag)
            elif mag == F.one:
                body = "X" if k == 1 else f"X^{k}"
            else:
                body = f"{F.fmt(mag)}*X" if k == 1 else f"{F.fmt(mag)}*X^{k}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    @classmethod
    def from_string(cls, text: str, field: Field) -> "Polynomial":
        return _parse_polynomial(text, field)

    def __str__(self):
        return self.to_string()


_TERM_RE = re.compile(
    r"""
    (?P<coeff>\d+(?:/\d+)?)\*X(?:\^(?P<k1>\d+))?
    | X(?:\^(?P<k2>\d+))?
    | (?P<const>\d+(?:/\d+)?)
    """,
    re.VERBOSE,
)


def _parse_polynomial(text: str, field: Field) -> Polynomial:
    if "/" in text and not isinstance(field, Rationals):
        raise ParseError("num/den coefficients only allowed in rational mode")
    s = re.sub(r"\s+", "", text)  # whitespace is never meaningful in this grammar
    if not s:
        raise ParseError("empty polynomial text")
    coeffs: dict[int, object] = {}
    pos = 0
    sign = 1
    first = True
    n = len(s)
    while pos < n:
        ch = s[pos]
        if ch in "+-":
            if first and ch == "+":
                raise ParseError(f"unexpected leading '+' in {text!r}")
            sign = -1 if ch == "-" else 1
            pos += 1
            if pos >= n:
                raise ParseError(f"dangling sign at end of {text!r}")
        elif not first:
            raise ParseError(f"missing '+'/'-' before position {pos} in {text!r}")
        m = _TERM_RE.match(s, pos)
        if m is None or m.start() != pos:
            raise ParseError(f"cannot parse term at position {pos} in {text!r}")
        pos = m.end()
        if m.group("const") is not None:
            k = 0
            c = field.parse(m.group("const"))
        elif m.group("coeff") is not None:
            k = int(m.group("k1")) if m.group("k1") else 1
            c = field.parse(m.group("coeff"))
        else:
            k = int(m.group("k2")) if m.group("k2") else 1
            c = field.one
        if sign < 0:
            c = field.neg(c)
        coeffs[k] = field.add(coeffs.get(k, field.zero), c)
        sign = 1
        first = False
    if not coeffs:
        raise ParseError(f"no terms found in {text!r}")
    deg = max(coeffs)
    return Polynomial([coeffs.get(k, field.zero) for k in range(deg + 1)], field)


# -- gcd family ---------------------------------------------------------


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0."""
    f._check(g)
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def extended_gcd(f: Polynomial, g: Polynomial):
    """(d, u, v) with u*f + v*g = d = poly_gcd(f, g), minimal-degree cofactors."""
    f._check(g)
    if f.is_zero and g.is_zero:
        raise ZeroDivisionError("extended_gcd(0, 0) is undefined")
    F = f.field
    r0, r1 = f, g
    u0, u1 = Polynomial.one(F), Polynomial.zero(F)
    v0, v1 = Polynomial.zero(F), Polynomial.one(F)
    while not r1.is_zero:
        q, r2 = divmod(r0, r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        return r0, u0, v0
    s = F.inv(r0.lc)
    return r0.monic(), u0.scale(s), v0.scale(s)


def is_coprime(f: Polynomial, g: Polynomial) -> bool:
    d = poly_gcd(f, g)
    return d.degree == 0


# -- resultant / discriminant / separability ----------------------------


def resultant(f: Polynomial, g: Polynomial):
    """Res(f, g) over the coefficient field; Res(f, 0) = 0 for deg f >= 1."""
    f._check(g)
    F = f.field
    if f.is_zero or g.is_zero:
        if f.degree == 0:
            return f.lc  # Res(c, 0) by the empty-product convention
        if g.degree == 0:
            return g.lc
        return F.zero
    sign = F.one
    res = F.one
    a, b = f, g
    while True:
        if b.degree == 0:
            res = F.mul(res, _pow_elt(F, b.lc, int(a.degree)))
            break
        if a.degree < b.degree:
            if (a.degree % 2) and (b.degree % 2):
                sign = F.neg(sign)
            a, b = b, a
            continue
        r = a % b
        if r.is_zero:
            return F.zero
        res = F.mul(res, _pow_elt(F, b.lc, int(a.degree) - int(r.degree)))
        if (a.degree % 2) and (b.degree % 2):
            sign = F.neg(sign)
        a, b = b, r
    return F.mul(sign, res)


def _pow_elt(F: Field, a, n: int):
    out = F.one
    for _ in range(n):
        out = F.mul(out, a)
    return out


def discriminant(f: Polynomial):
    """disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires deg f >= 1."""
    if f.degree < 1:
        raise ValueError("discriminant needs deg f >= 1")
    F = f.field
    n = int(f.degree)
    res = resultant(f, f.derivative())
    d = F.div(res, f.lc)
    if (n * (n - 1) // 2) % 2:
        d = F.neg(d)
    return d


def is_separable(f: Polynomial) -> bool:
    """gcd(f, f') = 1; false for the zero polynomial and whenever f' = 0 (deg f >= 1)."""
    if f.is_zero:
        return False
    return poly_gcd(f, f.derivative()).degree == 0


def eval_poly(f: Polynomial, x):
    return f.eval(x)


def roots_in_field(f: Polynomial) -> list:
    """All x in the base field with f(x) = 0 (no multiplicity)."""
    if f.is_zero:
        raise ValueError("zero polynomial vanishes everywhere")
    F = f.field
    if f.degree < 1:
        return []
    if isinstance(F, PrimeField):
        if F.p <= 4096:
            return [x for x in range(F.p) if f.eval(x) == 0]
        from .factorization import factor  # deferred: factor depends on this module

        return sorted(F.neg(g.coeffs[0]) for g, _ in factor(f).factors if g.degree == 1)
    return _rational_roots(f)


def _rational_roots(f: Polynomial) -> list:
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    k = 0
    while ints[k] == 0:
        k += 1
    roots = set()
    if k > 0:
        roots.add(Fraction(0))
    a0, an = abs(ints[k]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if f.eval(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
