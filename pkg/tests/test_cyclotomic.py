import random

import pytest

from cyclocomp import (
    AdjacencyGraph,
    CommonPrimeCertificate,
    IntPolynomial,
    RING_Q,
    RING_Z,
    RING_ZERO,
    UnitCertificate,
    arrow_witness,
    c_value,
    congruence_check,
    connected_components,
    cyclotomic_coprimality,
    cyclotomic_poly,
    is_adjacent,
    pochhammer,
    ring_z_inverted,
)
from cyclocomp.errors import EmptySet, EqualIndices, NotPrime

from support import phi_by_trial_factorization


def P(*coeffs):
    return IntPolynomial(coeffs)


class TestCyclotomicPoly:
    def test_first_values(self):
        assert cyclotomic_poly(1) == P(-1, 1)
        assert cyclotomic_poly(2) == P(1, 1)
        assert cyclotomic_poly(3) == P(1, 1, 1)
        assert cyclotomic_poly(6) == P(1, -1, 1)

    def test_phi4_by_division_oracle(self):
        numerator = IntPolynomial.monomial(1, 4) - IntPolynomial.one()
        expected, rem = divmod(numerator, P(-1, 1) * P(1, 1))
        assert rem.is_zero
        assert cyclotomic_poly(4) == expected == P(1, 0, 1)

    def test_phi12_by_division_oracle(self):
        numerator = IntPolynomial.monomial(1, 12) - IntPolynomial.one()
        for d in (1, 2, 3, 4, 6):
            numerator, rem = divmod(numerator, cyclotomic_poly(d))
            assert rem.is_zero
        assert cyclotomic_poly(12) == numerator == P(1, 0, -1, 0, 1)

    def test_product_over_divisors(self):
        for n in range(1, 201):
            prod = IntPolynomial.one()
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic_poly(d)
            assert prod == IntPolynomial.monomial(1, n) - IntPolynomial.one()

    def test_degree_is_totient(self):
        for n in range(1, 201):
            assert cyclotomic_poly(n).degree == phi_by_trial_factorization(n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cyclotomic_poly(0)


class TestPochhammer:
    def test_small_values(self):
        assert pochhammer(0) == IntPolynomial.one()
        assert pochhammer(1) == P(1, -1)
        assert pochhammer(2) == P(1, -1, -1, 1)

    def test_recurrence_matches_product(self):
        for n in range(1, 25):
            step = IntPolynomial.one() - IntPolynomial.monomial(1, n)
            assert pochhammer(n) == pochhammer(n - 1) * step

    def test_degree(self):
        for n in range(12):
            assert pochhammer(n).degree == n * (n + 1) // 2 or n == 0


class TestCValue:
    def test_spec_cases(self):
        assert c_value(5, 5) == 0
        assert c_value(2, 4) == 2
        assert c_value(6, 10) == 1

    def test_symmetry(self):
        for m in range(1, 101):
            for n in range(1, 101):
                assert c_value(m, n) == c_value(n, m)

    def test_downward_ratio(self):
        assert c_value(4, 2) == 2
        assert c_value(27, 1) == 3
        assert c_value(1, 6) == 1


class TestAdjacency:
    def test_spec_cases(self):
        assert not is_adjacent(RING_Z, 1, 6)
        assert not is_adjacent(RING_Q, 2, 4)
        assert is_adjacent(RING_Z, 2, 4)

    def test_z_adjacency_is_prime_power_ratio(self):
        def prime_power_ratio(m, n):
            if m == n:
                return True
            big, small = max(m, n), min(m, n)
            if big % small:
                return False
            r = big // small
            p = 2
            while p * p <= r:
                if r % p == 0:
                    while r % p == 0:
                        r //= p
                    return r == 1
                p += 1
            return True  # r prime

        for m in range(1, 101):
            for n in range(1, 101):
                assert is_adjacent(RING_Z, m, n) == prime_power_ratio(m, n)

    def test_q_adjacency_is_equality(self):
        for m in range(1, 101):
            for n in range(1, 101):
                assert is_adjacent(RING_Q, m, n) == (m == n)

    def test_zero_ring_all_adjacent(self):
        assert is_adjacent(RING_ZERO, 1, 6)
        assert is_adjacent(RING_ZERO, 7, 90)

    def test_inverted_prime(self):
        half = ring_z_inverted(2)
        assert not is_adjacent(half, 1, 2)
        assert is_adjacent(half, 1, 3)


class TestComponents:
    def test_spec_cases(self):
        assert connected_components(RING_Z, {1, 2, 6}) == [[1, 2, 6]]
        assert connected_components(RING_Q, {1, 2, 6}) == [[1], [2], [6]]
        assert connected_components(RING_Z, {1, 6}) == [[1], [6]]

    def test_empty_rejected(self):
        with pytest.raises(EmptySet):
            connected_components(RING_Z, set())

    def test_partition_properties(self):
        rng = random.Random(11)
        for _ in range(30):
            S = {rng.randint(1, 40) for _ in range(rng.randint(1, 12))}
            comps = connected_components(RING_Z, S)
            flat = [m for comp in comps for m in comp]
            assert sorted(flat) == sorted(S)
            assert len(set(flat)) == len(flat)

    def test_adjacency_graph_wrapper(self):
        graph = AdjacencyGraph(frozenset({1, 2, 6}), RING_Z)
        assert graph.edge(1, 2) and graph.edge(2, 6) and not graph.edge(1, 6)
        assert graph.components() == [[1, 2, 6]]
        with pytest.raises(ValueError):
            graph.edge(1, 7)


class TestCongruence:
    def test_spec_cases(self):
        assert congruence_check(1, 2, 1) == (1, True)
        assert congruence_check(1, 2, 2) == (2, True)
        # degree ratio phi(6)/phi(3) = 1; the reduction confirms it holds
        assert congruence_check(3, 2, 1) == (1, True)

    def test_closed_form_d(self):
        d, ok = congruence_check(5, 3, 2)  # gcd(5,3)=1: d = 2*3 = 6
        assert (d, ok) == (6, True)
        d, ok = congruence_check(6, 2, 2)  # 2 | 6: d = 4
        assert (d, ok) == (4, True)

    def test_not_prime_rejected(self):
        with pytest.raises(NotPrime):
            congruence_check(3, 6, 1)

    def test_small_sweep(self):
        for p in (2, 3, 5):
            for e in (1, 2):
                for n in range(1, 20):
                    if p**e * n <= 100:
                        d, ok = congruence_check(n, p, e)
                        assert ok, (n, p, e, d)


class TestCoprimality:
    def test_unit_pair(self):
        cert = cyclotomic_coprimality(2, 3)
        assert isinstance(cert, UnitCertificate)
        assert cert.resultant == 1
        assert cert.u * cyclotomic_poly(2) + cert.v * cyclotomic_poly(3) == IntPolynomial.one()

    def test_common_prime_pair(self):
        cert = cyclotomic_coprimality(1, 2)
        assert isinstance(cert, CommonPrimeCertificate)
        assert (cert.p, cert.resultant, cert.exponent) == (2, 2, 1)

    def test_non_prime_power_ratio(self):
        cert = cyclotomic_coprimality(4, 6)
        assert isinstance(cert, UnitCertificate)
        assert cert.u * cyclotomic_poly(4) + cert.v * cyclotomic_poly(6) == IntPolynomial.one()

    def test_equal_rejected(self):
        with pytest.raises(EqualIndices):
            cyclotomic_coprimality(9, 9)

    def test_dichotomy_small(self):
        for m in range(1, 26):
            for n in range(m + 1, 26):
                cert = cyclotomic_coprimality(m, n)
                if c_value(m, n) == 1:
                    assert isinstance(cert, UnitCertificate)
                else:
                    assert isinstance(cert, CommonPrimeCertificate)
                    assert cert.resultant == cert.p**cert.exponent > 1


class TestArrowWitness:
    def test_spec_cases(self):
        phi2, phi3, phi4 = cyclotomic_poly(2), cyclotomic_poly(3), cyclotomic_poly(4)
        assert arrow_witness(phi4, phi2, 2, 4) == 1
        assert arrow_witness(phi2, phi4, 2, 4) == 2
        assert arrow_witness(phi2, phi3, 0, 4) is None
        assert arrow_witness(phi2, phi3, 1, 4) == 0

    def test_divisor_witnessed_at_one(self):
        # g | f makes f itself vanish mod (g, c) for every c
        f = cyclotomic_poly(2) * cyclotomic_poly(5)
        assert arrow_witness(f, cyclotomic_poly(5), 0, 3) == 1

    def test_witness_is_minimal(self):
        phi2, phi8 = cyclotomic_poly(2), cyclotomic_poly(8)
        m = arrow_witness(phi2, phi8, 2, 10)
        assert m is not None
        power = IntPolynomial.one()
        for k in range(m):
            rem = power % phi8
            assert not all(c % 2 == 0 for c in rem.coeffs)
            power = power * phi2
        rem = (phi2**m) % phi8
        assert all(c % 2 == 0 for c in rem.coeffs)
