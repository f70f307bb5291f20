"""Independent oracles used across the test suite.

Everything here recomputes expected values by a route different from the
implementation under test: Sylvester determinants by fraction-free
elimination instead of remainder sequences, totients by trial
factorization instead of polynomial degrees, root-of-unity arithmetic by
direct products in Z[zeta] instead of polynomial reduction, and so on.
"""

from __future__ import annotations

import random
from fractions import Fraction

from cyclocomp import CyclotomicInteger, IntPolynomial, RatPolynomial


def random_int_poly(rng: random.Random, max_degree: int, coeff_bound: int = 50):
    n = rng.randint(0, max_degree + 1)  # 0 -> zero polynomial
    return IntPolynomial([rng.randint(-coeff_bound, coeff_bound) for _ in range(n)])


def random_unit_leading_poly(rng: random.Random, max_degree: int, coeff_bound: int = 50):
    deg = rng.randint(1, max_degree)
    coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(deg)]
    coeffs.append(rng.choice([1, -1]))
    return IntPolynomial(coeffs)


def random_rat_poly(rng: random.Random, max_degree: int, bound: int = 20):
    n = rng.randint(0, max_degree + 1)
    return RatPolynomial(
        [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)]
    )


def sylvester_determinant(a: IntPolynomial, b: IntPolynomial) -> int:
    """Resultant as the determinant of the Sylvester matrix (first deg b
    rows from a, then deg a rows from b), by exact Gaussian elimination
    over Q.  Small inputs only."""
    m = len(a.coeffs) - 1
    n = len(b.coeffs) - 1
    size = m + n
    if size == 0:
        return 1
    rows = []
    a_desc = list(reversed(a.coeffs))
    b_desc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in a_desc] + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in b_desc] + [Fraction(0)] * (m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return det.numerator


def brute_force_xgcd_q(a: IntPolynomial, b: IntPolynomial):
    """Plain extended Euclid over Q: (g monic, u, v) with u*a + v*b = g."""
    from cyclocomp import rational_xgcd

    return rational_xgcd(a.to_rational(), b.to_rational())


def phi_by_trial_factorization(n: int) -> int:
    out, rest, p = 1, n, 2
    while p * p <= rest:
        if rest % p == 0:
            out *= p - 1
            rest //= p
            while rest % p == 0:
                out *= p
                rest //= p
        p += 1
    if rest > 1:
        out *= rest - 1
    return out


def zeta_pochhammer(order: int, k: int) -> CyclotomicInteger:
    """(zeta)_k = (1 - zeta)(1 - zeta^2)...(1 - zeta^k) computed directly
    in Z[zeta_order], never through polynomial reduction."""
    one = CyclotomicInteger.one(order)
    power = one
    out = one
    for _ in range(k):
        power = power.mul_by_zeta()
        out = out * (one - power)
    return out


def kz_value_oracle(order: int) -> CyclotomicInteger:
    """Terminating sum sum_{k < order} (zeta)_k: the value of the
    Kontsevich-Zagier series at a primitive order-th root."""
    total = CyclotomicInteger.zero(order)
    for k in range(order):
        total = total + zeta_pochhammer(order, k)
    return total


def taylor_by_substitution(coeffs, order: int, j_max: int):
    """Taylor coefficients of an integer polynomial at zeta_order,
    computed by expanding P(x + zeta) with Horner over Z[zeta][x] —
    a different algorithm from the library's repeated synthetic
    division."""
    zero = CyclotomicInteger.zero(order)
    zeta = CyclotomicInteger.zeta(order)
    acc: list[CyclotomicInteger] = []
    for c in reversed(coeffs):
        new = [zero] * (len(acc) + 1)
        for i, a in enumerate(acc):
            new[i + 1] = new[i + 1] + a
            new[i] = new[i] + a * zeta
        new[0] = new[0] + CyclotomicInteger.from_int(order, c)
        acc = new
    out = []
    for j in range(j_max + 1):
        out.append(acc[j] if j < len(acc) else zero)
    return out
