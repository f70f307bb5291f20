"""Cyclotomic polynomials, q-Pochhammer products, and the adjacency
combinatorics that controls which completions restrict injectively.

The central combinatorial datum is c(m, n): 0 when m = n, a prime p when
n/m is a nonzero integer power of p, and 1 otherwise.  Two indices are
adjacent over a coefficient ring exactly when the ring is c-adically
separated, which for the built-in descriptors reduces to a predicate on
primes.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .errors import EmptySet, EqualIndices, NonUnitLeadingCoefficient, NotPrime
from .polyring import IntPolynomial, is_prime, poly_mod_prime, subresultant_bezout

# -- cyclotomic polynomials -----------------------------------------------

_cyclo_cache: dict[int, IntPolynomial] = {}
_cyclo_lock = threading.Lock()


def cyclotomic_poly(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by iterated exact division:
    Phi_n = (q^n - 1) / prod of Phi_d over proper divisors d of n.

    Results are cached; the cache tolerates concurrent readers.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    with _cyclo_lock:
        hit = _cyclo_cache.get(n)
    if hit is not None:
        return hit
    poly = IntPolynomial.monomial(1, n) - IntPolynomial.one()
    for d in range(1, n):
        if n % d == 0:
            quot, rem = divmod(poly, cyclotomic_poly(d))
            assert rem.is_zero
            poly = quot
    with _cyclo_lock:
        _cyclo_cache.setdefault(n, poly)
    return poly


def load_cyclotomic_cache(path: str) -> int:
    """Merge a persisted n -> coefficient-list JSON file into the cache.
    Returns the number of entries loaded; missing file loads nothing."""
    if not os.path.exists(path):
        return 0
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    loaded = 0
    with _cyclo_lock:
        for key, coeffs in data.items():
            n = int(key)
            if n >= 1 and n not in _cyclo_cache:
                _cyclo_cache[n] = IntPolynomial.from_json(coeffs)
                loaded += 1
    return loaded


def save_cyclotomic_cache(path: str) -> None:
    with _cyclo_lock:
        data = {str(n): p.to_json() for n, p in sorted(_cyclo_cache.items())}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True)


def pochhammer(n: int) -> IntPolynomial:
    """(q)_n = (1 - q)(1 - q^2)...(1 - q^n); (q)_0 = 1.  Degree n(n+1)/2."""
    if n < 0:
        raise ValueError("pochhammer index must be >= 0")
    out = IntPolynomial.one()
    for i in range(1, n + 1):
        out = out * (IntPolynomial.one() - IntPolynomial.monomial(1, i))
    return out


# -- the c table and the adjacency graph ----------------------------------


def is_prime_power(x: int) -> Optional[int]:
    """The prime p with x = p^k (k >= 1), or None."""
    if x < 2:
        return None
    for p in range(2, x + 1):
        if p * p > x:
            return x  # x itself is prime
        if x % p == 0:
            while x % p == 0:
                x //= p
            return p if x == 1 else None
    return None


def c_value(m: int, n: int) -> int:
    """0 if m = n; p if n/m is a nonzero integer power of the prime p;
    1 otherwise.  Symmetric in its arguments."""
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    if m == n:
        return 0
    g = math.gcd(m, n)
    m, n = m // g, n // g
    if m > n:
        m, n = n, m
    if m != 1:
        return 1
    p = is_prime_power(n)
    return p if p is not None else 1


@dataclass(frozen=True)
class RingDescriptor:
    """Separatedness profile of a coefficient ring: everything the
    adjacency graph needs, nothing else (no ring elements)."""

    name: str
    is_zero_ring: bool
    separated_primes: Callable[[int], bool]

    def is_separated_at(self, c: int) -> bool:
        """Whether the ring is (c)-adically separated, for c in {0, 1, p}."""
        if self.is_zero_ring or c == 0:
            return True
        if c == 1:
            return False
        return self.separated_primes(c)


RING_Z = RingDescriptor("Z", False, lambda p: True)
RING_Q = RingDescriptor("Q", False, lambda p: False)
RING_ZERO = RingDescriptor("0", True, lambda p: True)


def ring_z_inverted(m: int) -> RingDescriptor:
    """Z[1/m]: separated exactly at the primes not dividing m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return RingDescriptor(f"Z[1/{m}]", False, lambda p: m % p != 0)


def is_adjacent(desc: RingDescriptor, m: int, n: int) -> bool:
    """Adjacency of m and n in the completion graph over desc: equal
    indices, a prime-power ratio at a separated prime, or the zero ring."""
    return desc.is_separated_at(c_value(m, n))


@dataclass(frozen=True)
class AdjacencyGraph:
    vertices: frozenset[int]
    descriptor: RingDescriptor

    def edge(self, m: int, n: int) -> bool:
        if m not in self.vertices or n not in self.vertices:
            raise ValueError("vertex not in graph")
        return is_adjacent(self.descriptor, m, n)

    def components(self) -> list[list[int]]:
        return connected_components(self.descriptor, self.vertices)


def connected_components(
    desc: RingDescriptor, S: Iterable[int]
) -> list[list[int]]:
    """Partition of S into adjacency-connected components, each sorted,
    ordered by smallest member."""
    verts = sorted(set(S))
    if not verts:
        raise EmptySet("component partition of the empty set")
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in verts:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            cur = queue.pop()
            for other in verts:
                if other not in seen and is_adjacent(desc, cur, other):
                    seen.add(other)
                    comp.append(other)
                    queue.append(other)
        comps.append(sorted(comp))
    return comps


# -- the mod-p congruence between cyclotomic levels ------------------------


def _pack_mod_p(coeffs: list[int], width: int) -> int:
    buf = bytearray(len(coeffs) * width)
    for i, c in enumerate(coeffs):
        buf[i * width : (i + 1) * width] = c.to_bytes(width, "little")
    return int.from_bytes(bytes(buf), "little")


def _mul_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Schoolbook convolution via one big-integer multiply (Kronecker
    substitution).  Coefficients must lie in [0, p); slot width is chosen
    so convolution entries (< p^2 * len) cannot carry."""
    if not a or not b:
        return []
    width = max(4, ((p * p * min(len(a), len(b))).bit_length() + 7) // 8)
    prod = _pack_mod_p(a, width) * _pack_mod_p(b, width)
    raw = prod.to_bytes((len(a) + len(b)) * width, "little")
    out = []
    for i in range(len(a) + len(b) - 1):
        out.append(int.from_bytes(raw[i * width : (i + 1) * width], "little") % p)
    while out and out[-1] == 0:
        out.pop()
    return out


def _pow_mod_p(base: IntPolynomial, exp: int, p: int) -> IntPolynomial:
    cur = [c % p for c in base.coeffs]
    while cur and cur[-1] == 0:
        cur.pop()
    out = [1 % p]
    while exp:
        if exp & 1:
            out = _mul_mod_p(out, cur, p)
        exp >>= 1
        if exp:
            cur = _mul_mod_p(cur, cur, p)
    return IntPolynomial(out)


def congruence_check(n: int, p: int, e: int) -> tuple[int, bool]:
    """Order-raising congruence: Phi_{p^e * n} == Phi_n^d mod p, with
    d = deg Phi_{p^e n} / deg Phi_n.

    Returns (d, holds) where holds also requires d to match its closed
    form: (p-1)*p^(e-1) when p does not divide n, p^e when it does.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or n < 1:
        raise ValueError("need e >= 1 and n >= 1")
    big = cyclotomic_poly(p**e * n)
    small = cyclotomic_poly(n)
    d, rem = divmod(len(big.coeffs) - 1, len(small.coeffs) - 1)
    if rem != 0:
        return d, False
    closed = p**e if n % p == 0 else (p - 1) * p ** (e - 1)
    holds = d == closed and poly_mod_prime(big, p) == _pow_mod_p(small, d, p)
    return d, holds


# -- coprimality certificates ----------------------------------------------


@dataclass(frozen=True)
class UnitCertificate:
    """u*Phi_m + v*Phi_n = 1 with integer cofactors."""

    u: IntPolynomial
    v: IntPolynomial
    resultant: int


@dataclass(frozen=True)
class CommonPrimeCertificate:
    """The two indices share the prime p; the resultant is p^exponent."""

    p: int
    resultant: int
    exponent: int


CoprimalityResult = Union[UnitCertificate, CommonPrimeCertificate]


def cyclotomic_coprimality(m: int, n: int) -> CoprimalityResult:
    """Dichotomy for the ideal (Phi_m, Phi_n) in Z[q]: a Bezout
    certificate of coprimality when c(m, n) = 1, otherwise the shared
    prime with the verified prime-power resultant."""
    if m == n:
        raise EqualIndices("coprimality needs two distinct indices")
    c = c_value(m, n)
    res, u, v = subresultant_bezout(cyclotomic_poly(m), cyclotomic_poly(n))
    if c == 1:
        if res not in (1, -1):
            raise AssertionError(f"expected unit resultant for ({m},{n}), got {res}")
        if res == -1:
            u, v = -u, -v
        return UnitCertificate(u=u, v=v, resultant=res)
    exponent = 0
    r = res
    while r % c == 0 and r > 1:
        r //= c
        exponent += 1
    if r != 1 or exponent < 1:
        raise AssertionError(
            f"resultant {res} of ({m},{n}) is not a positive power of {c}"
        )
    return CommonPrimeCertificate(p=c, resultant=res, exponent=exponent)


# -- bounded ideal-membership search ---------------------------------------


def arrow_witness(
    f: IntPolynomial, g: IntPolynomial, c: int, max_power: int
) -> Optional[int]:
    """Smallest m with 0 <= m <= max_power such that every coefficient of
    f^m mod g is divisible by c, or None.  c = 0 demands exact vanishing;
    c = 1 is satisfied by m = 0 already."""
    if not g.has_unit_leading_coefficient:
        raise NonUnitLeadingCoefficient(
            f"modulus {g} does not have a unit leading coefficient"
        )
    if c < 0 or max_power < 1:
        raise ValueError("need c >= 0 and max_power >= 1")
    power = IntPolynomial.one()
    for m in range(max_power + 1):
        rem = power % g
        if all((coef == 0 if c == 0 else coef % c == 0) for coef in rem.coeffs):
            return m
        power = (power * f) % g
    return None
