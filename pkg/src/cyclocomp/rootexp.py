"""Arithmetic in Z[zeta_n] and the two maps out of a completion that see
roots of unity: evaluation at a primitive n-th root (tau) and Taylor
expansion in powers of (q - zeta) (sigma).

Z[zeta_n] is Z[q]/(Phi_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
Taylor coefficients are produced by repeated synthetic division of the
representative by (q - zeta) over Z[zeta]: no factorials, no division by
integers, everything exact.

The precision contract: an element truncated at level K determines its
expansion at zeta only up to the multiplicity of (q - zeta) in g_K, which
for the Pochhammer chain at a primitive n-th root is floor(K/n).  The
`valid_to` bound is always computed from the chain, never trusted from
the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .completion import (
    FiltrationChain,
    PochhammerChain,
    SeriesSpec,
    TruncatedElement,
    series_realize,
)
from .cyclotomic import cyclotomic_poly
from .errors import InsufficientPrecision, OrderMismatch
from .polyring import IntPolynomial


class CyclotomicInteger:
    """An element of Z[zeta_n], stored as exactly phi(n) power-basis
    coordinates (n = 1 is a plain integer in disguise)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int]):
        if order < 1:
            raise ValueError("order must be >= 1")
        phi = len(cyclotomic_poly(order).coeffs) - 1
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > phi:
            rem = IntPolynomial(coeffs) % cyclotomic_poly(order)
            coeffs = list(rem.coeffs)
        self.order = order
        self.coeffs = tuple(coeffs) + (0,) * (phi - len(coeffs))

    @classmethod
    def from_int(cls, order: int, value: int) -> "CyclotomicInteger":
        return cls(order, [value])

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInteger":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CyclotomicInteger":
        return cls(order, [1])

    @classmethod
    def zeta(cls, order: int) -> "CyclotomicInteger":
        return cls(order, [0, 1])

    def _check(self, other: "CyclotomicInteger") -> None:
        if not isinstance(other, CyclotomicInteger):
            raise TypeError(f"expected CyclotomicInteger, got {type(other).__name__}")
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other):
        self._check(other)
        return CyclotomicInteger(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return CyclotomicInteger(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return CyclotomicInteger(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.order, [other * a for a in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (2 * len(a) - 1) if a else []
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return CyclotomicInteger(self.order, out)

    __rmul__ = __mul__

    def mul_by_zeta(self) -> "CyclotomicInteger":
        """Multiply by zeta: a coefficient shift plus one reduction of the
        overflowing top term by Phi_n (O(phi) instead of a full product)."""
        phi_poly = cyclotomic_poly(self.order).coeffs
        shifted = [0] + list(self.coeffs)
        top = shifted.pop()
        if top:
            for i in range(len(shifted)):
                shifted[i] -= top * phi_poly[i]
        return CyclotomicInteger(self.order, shifted)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicInteger)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        return f"({IntPolynomial(self.coeffs)})".replace("q", "z")

    def __repr__(self):
        return f"CyclotomicInteger(order={self.order}, {self.coeffs})"

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json_dict(data: dict) -> "CyclotomicInteger":
        return CyclotomicInteger(data["order"], [int(c) for c in data["coeffs"]])


# -- evaluation (tau) ---------------------------------------------------------


def root_multiplicity(chain: FiltrationChain, level: int, n: int) -> int:
    """Multiplicity of (q - zeta_n) in g_level: floor(level/n) on the
    Pochhammer chain, otherwise the exact multiplicity of Phi_n obtained
    by repeated exact division."""
    if isinstance(chain, PochhammerChain):
        return level // n
    phi_n = cyclotomic_poly(n)
    g = chain.modulus(level)
    mult = 0
    while True:
        quot, rem = divmod(g, phi_n)
        if not rem.is_zero:
            return mult
        mult += 1
        g = quot


def evaluate_at_root(a: TruncatedElement, n: int) -> CyclotomicInteger:
    """Value of a at a primitive n-th root of unity, as an element of
    Z[zeta_n]; well defined only when Phi_n divides the truncation
    modulus (level >= n on the Pochhammer chain)."""
    if root_multiplicity(a.chain, a.level, n) < 1:
        raise InsufficientPrecision(
            f"level {a.level} on {a.chain.label!r} does not determine the "
            f"value at a primitive {n}-th root"
        )
    rem = a.rep % cyclotomic_poly(n)
    return CyclotomicInteger(n, rem.coeffs)


def tau_values(a: TruncatedElement, orders: Sequence[int]) -> dict[int, CyclotomicInteger]:
    """Componentwise evaluation at every order in `orders` (a finite slice
    of the product-of-residues picture of the completion)."""
    return {n: evaluate_at_root(a, n) for n in sorted(set(orders))}


# -- Taylor expansion (sigma) -------------------------------------------------


@dataclass(frozen=True)
class RootTaylorSeries:
    """Expansion sum_j coeffs[j] * (q - zeta)^j at a primitive order-th
    root; coefficients with index > valid_to would depend on data beyond
    the source truncation and are never produced."""

    order: int
    valid_to: int
    coeffs: tuple[CyclotomicInteger, ...]

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "valid_to": self.valid_to,
            "coeffs": [c.to_json_dict() for c in self.coeffs],
        }


def _synthetic_divide(
    coeffs: list[CyclotomicInteger], order: int
) -> tuple[list[CyclotomicInteger], CyclotomicInteger]:
    """Divide sum coeffs[i] q^i by (q - zeta) over Z[zeta]: returns
    (quotient coefficients, remainder = value at zeta)."""
    acc = CyclotomicInteger.zero(order)
    quot: list[CyclotomicInteger] = [acc] * max(len(coeffs) - 1, 0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc.mul_by_zeta() + coeffs[i]
        quot[i - 1] = acc
    rem = acc.mul_by_zeta() + coeffs[0] if coeffs else CyclotomicInteger.zero(order)
    return quot, rem


def taylor_at_root(a: TruncatedElement, n: int, j_max: int) -> RootTaylorSeries:
    """Taylor coefficients c_0 ... c_{j_max} of a at a primitive n-th root,
    by repeated synthetic division of the representative.  c_0 agrees with
    evaluate_at_root; requesting j_max beyond the precision bound raises
    instead of fabricating coefficients."""
    if j_max < 0:
        raise ValueError("j_max must be >= 0")
    valid_to = root_multiplicity(a.chain, a.level, n) - 1
    if j_max > valid_to:
        raise InsufficientPrecision(
            f"level {a.level} on {a.chain.label!r} only determines "
            f"coefficients up to index {valid_to} at order {n}; {j_max} requested"
        )
    cur = [CyclotomicInteger.from_int(n, c) for c in a.rep.coeffs]
    coeffs = []
    for _ in range(j_max + 1):
        cur, rem = _synthetic_divide(cur, n)
        coeffs.append(rem)
    return RootTaylorSeries(order=n, valid_to=valid_to, coeffs=tuple(coeffs))


def expand_series(spec: SeriesSpec, n: int, j_max: int) -> RootTaylorSeries:
    """Taylor-expand a convergent series at a primitive n-th root, with
    the Pochhammer level auto-selected as n*(j_max+1) so every requested
    coefficient is stable under any further precision increase."""
    chain = PochhammerChain()
    level = n * (j_max + 1)
    return taylor_at_root(series_realize(spec, chain, level), n, j_max)


def ohtsuki_series(spec: SeriesSpec, j_max: int) -> RootTaylorSeries:
    """Expansion at q = 1 (order 1): level j_max + 1 already pins every
    coefficient up to index j_max, since (q-1)^k divides (q)_k."""
    return expand_series(spec, 1, j_max)
