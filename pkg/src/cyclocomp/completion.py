"""Truncated elements of cyclotomic completions.

A completion of Z[q] is handled through a *filtration chain*: a
divisibility chain g_0 = 1 | g_1 | g_2 | ... of unit-leading polynomials
cofinal in the directed system of moduli.  An element of the completed
ring is only ever represented *truncated*: as (chain, level k, rep) with
rep the canonical remainder mod g_k.  Raising precision is the caller's
job (via higher-level reps or series specs); nothing here pretends to
hold infinite data, so the precision contract is always explicit.

Three chain kinds are provided:

* PochhammerChain: g_k = (q)_k up to sign, normalized to leading
  coefficient +1 (the generated ideals are unchanged).
* AdicChain(f): g_k = f^k, the f-adic filtration.
* ProductChain(S): g_k = product of the first k entries of an enumeration
  of cyclotomic indices drawn from S with unbounded repetition; the
  default enumeration cycles through sorted(S).

Digit expansions generalize base-p digits: every level-k element is
uniquely a = sum of a_n * g_n with deg a_n < deg g_{n+1} - deg g_n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .cyclotomic import cyclotomic_poly, pochhammer
from .errors import (
    ChainMismatch,
    DigitDegreeViolation,
    EvenM,
    NonConvergent,
    NonUnitLeadingCoefficient,
    NotCoarser,
)
from .polyring import IntPolynomial, divides, subresultant_bezout


class FiltrationChain:
    """Base class: lazily generated, memoized modulus chain.

    Subclasses implement _step(k, prev) producing g_k from g_{k-1}; the
    base class checks the divisibility and unit-leading invariants on
    generation and synchronizes cache growth.
    """

    label: str = "chain"

    def __init__(self) -> None:
        self._moduli: list[IntPolynomial] = [IntPolynomial.one()]
        self._lock = threading.Lock()

    def _step(self, k: int, prev: IntPolynomial) -> IntPolynomial:
        raise NotImplementedError

    def modulus(self, k: int) -> IntPolynomial:
        """g_k; g_0 = 1."""
        if k < 0:
            raise ValueError("level must be >= 0")
        with self._lock:
            while len(self._moduli) <= k:
                i = len(self._moduli)
                g = self._step(i, self._moduli[-1])
                if not g.has_unit_leading_coefficient:
                    raise AssertionError(f"{self.label}: g_{i} not unit-leading")
                if not divides(self._moduli[-1], g):
                    raise AssertionError(f"{self.label}: g_{i-1} does not divide g_{i}")
                self._moduli.append(g)
            return self._moduli[k]

    def signature(self) -> tuple:
        raise NotImplementedError

    def to_json_dict(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, FiltrationChain) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return f"{type(self).__name__}({self.label!r})"


class PochhammerChain(FiltrationChain):
    """g_k = (q)_k normalized to leading coefficient +1."""

    label = "pochhammer"

    def _step(self, k: int, prev: IntPolynomial) -> IntPolynomial:
        g = prev * (IntPolynomial.one() - IntPolynomial.monomial(1, k))
        return -g if g.leading_coefficient < 0 else g

    def signature(self) -> tuple:
        return ("pochhammer",)

    def to_json_dict(self) -> dict:
        return {"kind": "pochhammer"}


class AdicChain(FiltrationChain):
    """g_k = f^k for a fixed unit-leading polynomial f of degree >= 1."""

    def __init__(self, f: IntPolynomial) -> None:
        if not f.has_unit_leading_coefficient or f.degree < 1:
            raise NonUnitLeadingCoefficient(
                "adic chains need a unit-leading polynomial of degree >= 1"
            )
        super().__init__()
        self.f = f
        self.label = f"adic({f})"

    def _step(self, k: int, prev: IntPolynomial) -> IntPolynomial:
        return prev * self.f

    def signature(self) -> tuple:
        return ("adic", self.f.coeffs)

    def to_json_dict(self) -> dict:
        return {"kind": "adic", "f": self.f.to_json()}


class ProductChain(FiltrationChain):
    """g_k = Phi_{e(0)} * ... * Phi_{e(k-1)} for an enumeration e of
    indices from S in which every index recurs forever.

    The default enumeration cycles through sorted(S); pass `enumeration`
    (an index function i -> n) to override, e.g. for an infinite S.
    """

    def __init__(
        self,
        indices: Iterable[int] = (),
        enumeration: Optional[Callable[[int], int]] = None,
        label: Optional[str] = None,
    ) -> None:
        super().__init__()
        self.indices = tuple(sorted(set(indices)))
        if enumeration is None:
            if not self.indices:
                raise ValueError("a product chain needs indices or an enumeration")
            if any(n < 1 for n in self.indices):
                raise ValueError("cyclotomic indices must be >= 1")
            cycle = self.indices
            enumeration = lambda i: cycle[i % len(cycle)]
            self._custom = False
        else:
            self._custom = True
        self.enumeration = enumeration
        self.label = label or f"product{list(self.indices)}"

    def _step(self, k: int, prev: IntPolynomial) -> IntPolynomial:
        return prev * cyclotomic_poly(self.enumeration(k - 1))

    def signature(self) -> tuple:
        if self._custom:
            return ("product-custom", self.label, id(self.enumeration))
        return ("product", self.indices)

    def to_json_dict(self) -> dict:
        if self._custom:
            raise ValueError("custom-enumeration chains are not serializable")
        return {"kind": "product", "indices": list(self.indices)}


def chain_from_json_dict(data: dict) -> FiltrationChain:
    kind = data["kind"]
    if kind == "pochhammer":
        return PochhammerChain()
    if kind == "adic":
        return AdicChain(IntPolynomial.from_json(data["f"]))
    if kind == "product":
        return ProductChain(data["indices"])
    raise ValueError(f"unknown chain kind {kind!r}")


# -- truncated elements -----------------------------------------------------


@dataclass(frozen=True)
class TruncatedElement:
    """An element of the completed ring known modulo g_level."""

    chain: FiltrationChain
    level: int
    rep: IntPolynomial

    @property
    def modulus(self) -> IntPolynomial:
        return self.chain.modulus(self.level)

    def __add__(self, other):
        return trunc_arith(self, other, "add")

    def __sub__(self, other):
        return trunc_arith(self, other, "sub")

    def __mul__(self, other):
        return trunc_arith(self, other, "mul")

    def __neg__(self):
        return TruncatedElement(self.chain, self.level, -self.rep)

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def to_json_dict(self) -> dict:
        return {
            "chain": self.chain.to_json_dict(),
            "level": self.level,
            "rep": self.rep.to_json(),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "TruncatedElement":
        chain = chain_from_json_dict(data["chain"])
        return reduce(IntPolynomial.from_json(data["rep"]), chain, data["level"])

    def __repr__(self):
        return f"<{self.rep} mod g_{self.level} on {self.chain.label}>"


def reduce(f: IntPolynomial, chain: FiltrationChain, level: int) -> TruncatedElement:
    """Canonical remainder of f modulo g_level; a ring homomorphism onto
    each truncation level."""
    rep = f % chain.modulus(level) if level > 0 else IntPolynomial.zero()
    return TruncatedElement(chain, level, rep)


def trunc_arith(a: TruncatedElement, b: TruncatedElement, op: str) -> TruncatedElement:
    """Ring operation at the coarser of the two levels (same chain only)."""
    if a.chain != b.chain:
        raise ChainMismatch(
            f"cannot mix chains {a.chain.label!r} and {b.chain.label!r}; "
            "restrict both to a common chain first"
        )
    level = min(a.level, b.level)
    if op == "add":
        raw = a.rep + b.rep
    elif op == "sub":
        raw = a.rep - b.rep
    elif op == "mul":
        raw = a.rep * b.rep
    else:
        raise ValueError(f"unknown op {op!r}")
    return reduce(raw, a.chain, level)


# -- digit expansions --------------------------------------------------------


@dataclass(frozen=True)
class DigitExpansion:
    """Digits a_0 ... a_{k-1} with deg a_n < deg g_{n+1} - deg g_n; the
    bounds make the representation a = sum a_n g_n unique."""

    chain: FiltrationChain
    digits: tuple[IntPolynomial, ...]

    def __len__(self):
        return len(self.digits)


def digit_degree_bound(chain: FiltrationChain, n: int) -> int:
    """deg a_n must stay strictly below this (gap of the chain at n)."""
    return len(chain.modulus(n + 1).coeffs) - len(chain.modulus(n).coeffs)


def to_digits(a: TruncatedElement) -> DigitExpansion:
    """Unique digit expansion of a level-k element (k digits)."""
    chain, k = a.chain, a.level
    digits: list[IntPolynomial] = [IntPolynomial.zero()] * k
    r = a.rep
    for n in range(k - 1, 0, -1):
        digits[n], r = divmod(r, chain.modulus(n))
    if k > 0:
        digits[0] = r
    for n, d in enumerate(digits):
        assert d.degree < digit_degree_bound(chain, n)
    return DigitExpansion(chain, tuple(digits))


def from_digits(d: DigitExpansion, level: int) -> TruncatedElement:
    """Re-sum digits and reduce mod g_level; inverse to to_digits."""
    for n, digit in enumerate(d.digits):
        if digit.degree >= digit_degree_bound(d.chain, n):
            raise DigitDegreeViolation(
                f"digit {n} has degree {digit.degree}, bound is "
                f"{digit_degree_bound(d.chain, n)}"
            )
    total = IntPolynomial.zero()
    for n, digit in enumerate(d.digits):
        total = total + digit * d.chain.modulus(n)
    return reduce(total, d.chain, level)


# -- restriction between chains ---------------------------------------------


def rho(
    a: TruncatedElement, target_chain: FiltrationChain, target_level: int
) -> TruncatedElement:
    """Restrict to a coarser truncation: defined when the target modulus
    divides the source modulus exactly."""
    h = target_chain.modulus(target_level)
    if not divides(h, a.chain.modulus(a.level)):
        raise NotCoarser(
            f"{target_chain.label} level {target_level} is not coarser than "
            f"{a.chain.label} level {a.level}"
        )
    rep = a.rep % h if target_level > 0 else IntPolynomial.zero()
    return TruncatedElement(target_chain, target_level, rep)


# -- convergent series -------------------------------------------------------


@dataclass(frozen=True)
class SeriesSpec:
    """An infinite sum sum_n t_n convergent in a completion: term(n) is
    t_n and witness(n) is a level k with g_k | t_n, so terms eventually
    vanish at every finite truncation."""

    name: str
    term: Callable[[int], IntPolynomial]
    witness: Callable[[int], int]


KONTSEVICH_ZAGIER_SPEC = SeriesSpec(
    name="kz",
    term=pochhammer,
    witness=lambda n: n,
)

Q_INVERSE_SPEC = SeriesSpec(
    name="qinv",
    term=lambda n: IntPolynomial.monomial(1, n) * pochhammer(n),
    witness=lambda n: n,
)

NAMED_SERIES: dict[str, SeriesSpec] = {
    "kz": KONTSEVICH_ZAGIER_SPEC,
    "qinv": Q_INVERSE_SPEC,
}


def series_realize(
    spec: SeriesSpec,
    chain: FiltrationChain,
    level: int,
    max_terms: int = 10_000,
) -> TruncatedElement:
    """Partial sum of the series at a truncation level: terms are added
    until the divisibility witness exceeds the level, at which point all
    later terms vanish mod g_level.  Each consumed term's witness is
    verified by exact division."""
    total = IntPolynomial.zero()
    for n in range(max_terms + 1):
        w = spec.witness(n)
        if w > level:
            return reduce(total, chain, level)
        t = spec.term(n)
        if not divides(chain.modulus(w), t):
            raise AssertionError(
                f"series {spec.name!r}: witness {w} of term {n} fails on "
                f"chain {chain.label!r}"
            )
        total = total + t
    raise NonConvergent(
        f"series {spec.name!r}: witness stayed <= {level} for {max_terms} terms"
    )


# -- units --------------------------------------------------------------------


def alternating_unit(m: int) -> IntPolynomial:
    """1 - q + q^2 - ... + q^(m-1) for odd m >= 3; a unit mod q^n - 1
    whenever gcd(n, 2m) = 1."""
    if m % 2 == 0:
        raise EvenM(f"alternating units need odd m, got {m}")
    if m < 3:
        raise ValueError("alternating units need m >= 3")
    return IntPolynomial([(-1) ** i for i in range(m)])


def unit_inverse_mod(
    u: IntPolynomial, modulus: IntPolynomial
) -> Optional[IntPolynomial]:
    """Inverse of u modulo a unit-leading modulus, when the Bezout
    certificate has unit resultant; None otherwise (no Hensel lifting of
    prime-power resultants is attempted)."""
    if not modulus.has_unit_leading_coefficient:
        raise NonUnitLeadingCoefficient(
            f"modulus {modulus} does not have a unit leading coefficient"
        )
    if u.is_zero:
        return None
    res, a, _ = subresultant_bezout(u, modulus)
    if res not in (1, -1):
        return None
    w = (a * res) % modulus
    assert (u * w) % modulus == IntPolynomial.one() % modulus
    return w
