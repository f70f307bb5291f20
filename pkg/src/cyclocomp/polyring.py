"""Dense exact univariate polynomial arithmetic over Z and Q.

A polynomial is a tuple of coefficients indexed by the power of q, with no
trailing zeros; the zero polynomial is the empty tuple.  The degree of the
zero polynomial is the sentinel NEG_INFINITY, which compares smaller than
every integer, so degree inequalities can be written without special cases.

Over Z, division is only defined when the divisor's leading coefficient is
a unit (+-1); exact divisibility by such divisors is tested with
`divides`.  Over Q any nonzero divisor works.

Serialization: a polynomial is a JSON array of decimal coefficient
strings, little-endian, e.g. 1 - q^3  <->  ["1", "0", "0", "-1"].
Rational coefficients serialize as "num/den".
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BothZero,
    DivisionByZeroPolynomial,
    NonUnitLeadingCoefficient,
    NotPrime,
)

NEG_INFINITY = float("-inf")


def _strip(coeffs: list) -> tuple:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class _Polynomial:
    """Shared dense-representation machinery for both coefficient domains."""

    __slots__ = ("coeffs",)

    # subclasses fill these in
    _coeff_type: type
    _coerce = staticmethod(lambda c: c)

    def __init__(self, coeffs: Iterable = ()):
        coerce = self._coerce
        self.coeffs = _strip([coerce(c) for c in coeffs])

    @classmethod
    def _wrap(cls, coeffs: list):
        """Build from already-coerced coefficients (trailing zeros allowed)."""
        p = object.__new__(cls)
        p.coeffs = _strip(coeffs)
        return p

    @classmethod
    def zero(cls):
        return cls._wrap([])

    @classmethod
    def one(cls):
        return cls._wrap([cls._coerce(1)])

    @classmethod
    def constant(cls, c):
        return cls._wrap([cls._coerce(c)])

    @classmethod
    def monomial(cls, c, power: int):
        """c * q^power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls._wrap([cls._coerce(0)] * power + [cls._coerce(c)])

    @property
    def degree(self) -> int | float:
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int):
        """Coefficient of q^i (zero beyond the stored length)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self._coerce(0)

    # -- ring operations ------------------------------------------------

    def _same_domain(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"mixed coefficient domains: {type(self).__name__} and {type(other).__name__}"
            )

    def __add__(self, other):
        self._same_domain(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._wrap(out)

    def __sub__(self, other):
        self._same_domain(other)
        a, b = self.coeffs, other.coeffs
        out = list(a) + [self._coerce(0)] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return self._wrap(out)

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = self._coerce(other)
            return self._wrap([c * x for x in self.coeffs])
        self._same_domain(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.zero()
        out = [self._coerce(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, g):
        self._same_domain(g)
        return self._divmod(g)

    def __floordiv__(self, g):
        return divmod(self, g)[0]

    def __mod__(self, g):
        return divmod(self, g)[1]

    def _divmod(self, g):
        if g.is_zero:
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        inv = self._leading_inverse(g)
        r = list(self.coeffs)
        dg = len(g.coeffs) - 1
        quot = [self._coerce(0)] * max(len(r) - dg, 0)
        gc = g.coeffs
        for top in range(len(r) - 1, dg - 1, -1):
            c = r[top]
            if not c:
                continue
            c *= inv
            quot[top - dg] = c
            for j in range(dg + 1):
                r[top - dg + j] -= c * gc[j]
        return self._wrap(quot), self._wrap(r[:dg])

    def evaluate(self, x):
        """Horner evaluation at x (int, Fraction, or anything with * and +)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- presentation ----------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "_Polynomial":
        return cls([cls._parse_coeff(c) for c in data])


class IntPolynomial(_Polynomial):
    """Polynomial with arbitrary-precision integer coefficients.

    >>> p = IntPolynomial([1, 0, -1])
    >>> str(p)
    '-q^2 + 1'
    >>> divmod(IntPolynomial([1, 0, 0, 1]), IntPolynomial([1, 1]))
    (IntPolynomial('q^2 - q + 1'), IntPolynomial('0'))
    """

    __slots__ = ()
    _coeff_type = int

    @staticmethod
    def _coerce(c) -> int:
        if isinstance(c, int) and not isinstance(c, bool):
            return c
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"integer coefficient expected, got {c!r}")

    @staticmethod
    def _parse_coeff(s) -> int:
        return int(s)

    @property
    def has_unit_leading_coefficient(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] in (1, -1)

    def _leading_inverse(self, g):
        lc = g.coeffs[-1]
        if lc not in (1, -1):
            raise NonUnitLeadingCoefficient(
                f"divisor leading coefficient {lc} is not a unit of Z"
            )
        return lc  # +-1 is its own inverse

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self.coeffs)


class RatPolynomial(_Polynomial):
    """Polynomial with exact rational coefficients (always in lowest terms)."""

    __slots__ = ()
    _coeff_type = Fraction

    @staticmethod
    def _coerce(c) -> Fraction:
        if isinstance(c, bool):
            raise TypeError("bool is not a coefficient")
        return Fraction(c)

    @staticmethod
    def _parse_coeff(s) -> Fraction:
        return Fraction(s)

    def _leading_inverse(self, g):
        return 1 / g.coeffs[-1]

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


def divides(g: IntPolynomial, a: IntPolynomial) -> bool:
    """True iff g divides a exactly; g must have a unit leading coefficient."""
    if g.is_zero:
        return a.is_zero
    return divmod(a, g)[1].is_zero


def poly_mod_prime(a: IntPolynomial, p: int) -> IntPolynomial:
    """Coefficientwise reduction into [0, p), canonical over Z/p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return IntPolynomial._wrap([c % p for c in a.coeffs])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- resultants and Bezout certificates ----------------------------------
#
# Sign convention: `resultant(a, b)` equals the determinant of the
# Sylvester matrix whose first deg(b) rows carry the coefficients of a
# (descending, shifted) and whose remaining deg(a) rows carry b.
# Computed by a primitive pseudo-remainder sequence; only scalar
# bookkeeping uses Fractions, so the polynomial work stays in Z.


def _pseudo_divmod(a: IntPolynomial, b: IntPolynomial):
    """(q, r) with lc(b)^(deg a - deg b + 1) * a = q*b + r over Z."""
    delta = len(a.coeffs) - len(b.coeffs)
    alpha = b.coeffs[-1] ** (delta + 1)
    r = [c * alpha for c in a.coeffs]
    dg = len(b.coeffs) - 1
    quot = [0] * (delta + 1)
    lc = b.coeffs[-1]
    bc = b.coeffs
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top]
        if not c:
            continue
        c, rem = divmod(c, lc)
        assert rem == 0, "pseudo-division step not exact"
        quot[top - dg] = c
        for j in range(dg + 1):
            r[top - dg + j] -= c * bc[j]
    return IntPolynomial._wrap(quot), IntPolynomial._wrap(r[:dg]), alpha


def resultant(a: IntPolynomial, b: IntPolynomial) -> int:
    """Resultant of a and b with the Sylvester determinant sign."""
    if a.is_zero and b.is_zero:
        raise BothZero("resultant of two zero polynomials")
    if a.is_zero or b.is_zero:
        return 0
    acc = Fraction(1)
    A, B = a, b
    if len(A.coeffs) < len(B.coeffs):
        if (len(A.coeffs) - 1) * (len(B.coeffs) - 1) % 2:
            acc = -acc
        A, B = B, A
    while len(B.coeffs) > 1:
        m = len(A.coeffs) - 1
        n = len(B.coeffs) - 1
        _, r, alpha = _pseudo_divmod(A, B)
        if r.is_zero:
            return 0
        gamma = r.content()
        r = IntPolynomial._wrap([c // gamma for c in r.coeffs])
        s = len(r.coeffs) - 1
        acc *= Fraction(B.coeffs[-1]) ** (m - s) * Fraction(gamma, alpha) ** n
        if (m * n) % 2:
            acc = -acc
        A, B = B, r
    acc *= Fraction(B.coeffs[0]) ** (len(A.coeffs) - 1)
    assert acc.denominator == 1
    return acc.numerator


def subresultant_bezout(
    a: IntPolynomial, b: IntPolynomial
) -> tuple[int, IntPolynomial, IntPolynomial]:
    """(res, u, v) with u*a + v*b = res, all over Z.

    res is the resultant of a and b (Sylvester determinant sign).  When a
    and b share a nonconstant factor, res = 0 and u = v = 0.  Both inputs
    constant is supported only when their integer Bezout identity can hit
    the conventional res = 1.
    """
    if a.is_zero and b.is_zero:
        raise BothZero("Bezout data of two zero polynomials")
    zero = IntPolynomial.zero()
    if a.is_zero or b.is_zero:
        return 0, zero, zero
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    if da == 0 and db == 0:
        g, x, y = _int_xgcd(a.coeffs[0], b.coeffs[0])
        if g != 1:
            raise ValueError(
                "no integer Bezout identity for two non-coprime constants"
            )
        return 1, IntPolynomial([x]), IntPolynomial([y])
    if db == 0:
        c = b.coeffs[0]
        return c**da, zero, IntPolynomial([c ** (da - 1)])
    if da == 0:
        c = a.coeffs[0]
        return c**db, IntPolynomial([c ** (db - 1)]), zero

    res = resultant(a, b)
    if res == 0:
        return 0, zero, zero

    R, u, v = _extended_prs(a, b)
    # u*a + v*b = R with R a nonzero constant; rescale to the resultant.
    # The minimal-degree cofactors for `res` are integral (Cramer on the
    # Sylvester system), and they equal (u/R)*res, so the divisions below
    # are exact.
    u = IntPolynomial._wrap([_exact_div(c * res, R) for c in u.coeffs])
    v = IntPolynomial._wrap([_exact_div(c * res, R) for c in v.coeffs])
    assert u * a + v * b == IntPolynomial([res])
    return res, u, v


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    assert r == 0, "cofactor rescaling not integral"
    return q


def _int_xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _extended_prs(a: IntPolynomial, b: IntPolynomial):
    """Last nonzero constant R of a primitive PRS of (a, b), with integer
    cofactors (u, v) satisfying u*a + v*b = R.  Requires deg a, deg b >= 1
    and gcd constant (checked by the caller via res != 0)."""
    swapped = len(a.coeffs) < len(b.coeffs)
    if swapped:
        a, b = b, a
    r0, r1 = a, b
    u0, u1 = IntPolynomial.one(), IntPolynomial.zero()
    v0, v1 = IntPolynomial.zero(), IntPolynomial.one()
    while len(r1.coeffs) > 1:
        q, r2, alpha = _pseudo_divmod(r0, r1)
        u2 = u0 * alpha - q * u1
        v2 = v0 * alpha - q * v1
        g = r2.content()
        for p in (u2, v2):
            for c in p.coeffs:
                g = math.gcd(g, c)
        if g > 1:
            r2 = IntPolynomial._wrap([c // g for c in r2.coeffs])
            u2 = IntPolynomial._wrap([c // g for c in u2.coeffs])
            v2 = IntPolynomial._wrap([c // g for c in v2.coeffs])
        r0, r1, u0, u1, v0, v1 = r1, r2, u1, u2, v1, v2
        assert not r1.is_zero, "nonconstant gcd reached the extended PRS"
    R = r1.coeffs[0]
    if swapped:
        u1, v1 = v1, u1
    return R, u1, v1


def rational_xgcd(
    a: RatPolynomial, b: RatPolynomial
) -> tuple[RatPolynomial, RatPolynomial, RatPolynomial]:
    """(g, u, v) with u*a + v*b = g, g the monic gcd (or zero)."""
    r0, r1 = a, b
    u0, u1 = RatPolynomial.one(), RatPolynomial.zero()
    v0, v1 = RatPolynomial.zero(), RatPolynomial.one()
    while not r1.is_zero:
        q, r2 = divmod(r0, r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        return r0, u0, v0
    lc = r0.leading_coefficient
    inv = 1 / lc
    return r0 * inv, u0 * inv, v0 * inv
