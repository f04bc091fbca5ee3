"""Tests for the divisor calculus over unit roots."""
from fractions import Fraction
from math import gcd, lcm

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cyclo_algebra.domain.arithmetic import euler_phi_value, prime_factors, valuation
from cyclo_algebra.domain.entities import Divisor, IntPolynomial
from cyclo_algebra.domain.services import DivisorService
from cyclo_algebra.infrastructure.serializers import DivisorSerializer
from shared.domain.errors import InvalidOrderError, NotPolynomialDivisorError

L = Divisor.lam
P = Divisor.psi

orders = st.integers(min_value=1, max_value=60)
divisors = st.dictionaries(orders, st.integers(min_value=-3, max_value=3), max_size=5).map(Divisor)
effective_divisors = st.dictionaries(
    st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=2), max_size=3
).map(Divisor)


class TestArithmetic:

    @pytest.mark.parametrize("m, expected", [(1, 1), (2, -1), (4, 0), (6, 1), (12, 0), (30, -1)])
    def test_moebius(self, m, expected):
        assert DivisorService.moebius(m) == expected

    @pytest.mark.parametrize("m, expected", [(1, 1), (7, 6), (12, 4), (265, 208)])
    def test_euler_phi(self, m, expected):
        assert DivisorService.euler_phi(m) == expected

    @pytest.mark.parametrize("m", [0, -3])
    def test_non_positive_order_is_rejected(self, m):
        with pytest.raises(InvalidOrderError):
            DivisorService.moebius(m)
        with pytest.raises(ValueError):
            Divisor.lam(m)


class TestDivisor:

    def test_lambda_is_sum_of_psi_over_divisors(self):
        assert L(12) == P(1) + P(2) + P(3) + P(4) + P(6) + P(12)

    def test_service_constructors(self):
        assert DivisorService.lambda_div(6) == L(6)
        assert DivisorService.psi_div(6) == L(6) - L(3) - L(2) + L(1)
        assert DivisorService.div_add(L(2), DivisorService.div_scale(-1, L(1))) == P(2)

    def test_lambda_product(self):
        assert L(4) * L(6) == 2 * L(12)
        assert DivisorService.div_mul(L(5), L(7)) == L(35)

    def test_e_has_degree_one(self):
        assert Divisor.e(12).degree == 1
        assert DivisorService.e_div(5) == Fraction(1, 5) * L(5)

    @pytest.mark.parametrize("n", [0, -4])
    def test_e_rejects_non_positive_orders(self, n):
        with pytest.raises(InvalidOrderError):
            Divisor.e(n)
        with pytest.raises(InvalidOrderError):
            DivisorService.e_div(n)

    def test_d_M_and_support(self):
        D = L(12) + L(4) + L(6) - L(1)
        assert D.d_M == 12
        assert D.support == (1, 2, 3, 4, 6, 12)
        assert Divisor.zero().d_M == 1

    def test_effective_and_integral(self):
        assert (L(6) - L(1)).is_effective
        assert not (L(1) - L(6)).is_effective
        assert not Divisor.e(2).is_integral

    @given(st.integers(min_value=1, max_value=300))
    def test_lambda_chi_and_degree(self, n):
        assert dict(L(n).chi) == {n: 1}
        assert L(n).degree == n

    @given(divisors)
    def test_chi_round_trip(self, D):
        assert DivisorService.from_chi(DivisorService.to_chi(D)) == D

    @given(divisors, divisors)
    def test_tensor_degree_is_multiplicative(self, a, b):
        assert DivisorService.tensor(a, b).degree == a.degree * b.degree

    @given(divisors, divisors, divisors)
    def test_product_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(divisors)
    def test_degree_two_ways(self, D):
        assert DivisorService.degree(D) == D.degree


def prime_power_psi_product(p, a, b):
    """Psi_{p^a} * Psi_{p^b} as {exponent j: coefficient of Psi_{p^j}}."""
    if a < b:
        a, b = b, a
    if a > b:
        return {a: euler_phi_value(p ** b)}
    if a == 0:
        return {0: 1}
    terms = {j: euler_phi_value(p ** a) for j in range(a + 1)}
    terms[a] -= p ** (a - 1)
    return terms


def psi_product(m, n):
    """Psi_m * Psi_n assembled prime by prime; coprime parts multiply to Psi of the product."""
    terms = {1: 1}
    for p in prime_factors(m * n):
        local = prime_power_psi_product(p, valuation(m, p), valuation(n, p))
        terms = {order * p ** j: c * cj for order, c in terms.items() for j, cj in local.items()}
    return Divisor(terms)


class TestPsiProducts:

    @pytest.mark.parametrize("product, expected", [
        (P(4) * P(4), 2 * (P(1) + P(2))),
        (P(3) * P(3), P(3) + 2 * P(1)),
        (P(3) * P(5), P(15)),
        (P(8) * P(2), P(8)),
        (P(9) * P(3), 2 * P(9)),
        (P(1) * P(12), P(12)),
        (L(6) * L(10), 2 * L(30)),
        (Divisor.e(4) * Divisor.e(6), Divisor.e(12)),
        (Divisor.e(5) * Divisor.e(10), Divisor.e(10)),
    ])
    def test_small_products(self, product, expected):
        assert product == expected

    @pytest.mark.parametrize("a", [1, 2, 3, 5, 8, 10])
    def test_powers_of_two_square_without_top_term(self, a):
        expected = 2 ** (a - 1) * sum((P(2 ** j) for j in range(a)), Divisor.zero())
        assert P(2 ** a) * P(2 ** a) == expected

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_prime_powers_up_to_1024(self, p):
        exponents = [k for k in range(11) if p ** k <= 2 ** 10]
        for a in exponents:
            for b in exponents:
                expected = Divisor({p ** j: c for j, c in prime_power_psi_product(p, a, b).items()})
                assert P(p ** a) * P(p ** b) == expected, (p, a, b)

    @given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=400))
    def test_product_matches_prime_by_prime_form(self, m, n):
        assert P(m) * P(n) == psi_product(m, n)

    @given(orders, orders)
    def test_coprime_orders_multiply(self, a, b):
        assume(gcd(a, b) == 1)
        assert P(a) * P(b) == P(a * b)

    @given(orders, orders)
    def test_e_product_is_e_of_lcm(self, a, b):
        assert Divisor.e(a) * Divisor.e(b) == Divisor.e(lcm(a, b))

    @given(orders, orders)
    def test_psi_product_degree(self, a, b):
        assert (P(a) * P(b)).degree == euler_phi_value(a) * euler_phi_value(b)


class TestLefschetz:

    @given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=120))
    def test_lefschetz_of_lambda(self, n, k):
        expected = n if k % n == 0 else 0
        assert DivisorService.lefschetz(L(n), k) == expected

    @given(divisors)
    def test_round_trip_through_lefschetz_numbers(self, D):
        rebuilt = DivisorService.from_lefschetz(lambda k: DivisorService.lefschetz(D, k), D.d_M)
        assert rebuilt == D

    @given(divisors)
    def test_trace_is_lefschetz_at_one(self, D):
        assert DivisorService.trace(D) == DivisorService.lefschetz(D, 1)

    def test_trace_of_lambda(self):
        assert DivisorService.trace(L(1)) == 1
        assert DivisorService.trace(L(7)) == 0

    def test_lefschetz_rejects_zero(self):
        with pytest.raises(InvalidOrderError):
            DivisorService.lefschetz(L(3), 0)


class TestPowerMap:

    def test_power_map_of_lambda(self):
        assert DivisorService.power_map(L(12), 4) == 4 * L(3)
        assert DivisorService.power_map(L(12), 5) == L(12)

    @given(divisors, st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=12))
    def test_power_maps_compose(self, D, a, b):
        assert DivisorService.power_map(DivisorService.power_map(D, a), b) == DivisorService.power_map(D, a * b)

    @given(divisors, st.integers(min_value=1, max_value=30))
    def test_power_map_keeps_degree(self, D, k):
        assert DivisorService.power_map(D, k).degree == D.degree


class TestPolynomials:

    def test_small_cyclotomic_polynomials(self):
        assert DivisorService.cyclotomic(1) == IntPolynomial([-1, 1])
        assert DivisorService.cyclotomic(6) == IntPolynomial([1, -1, 1])
        assert DivisorService.cyclotomic(12) == IntPolynomial([1, 0, -1, 0, 1])

    def test_cyclotomic_105_has_coefficient_minus_two(self):
        assert -2 in DivisorService.cyclotomic(105).coeffs

    @given(st.integers(min_value=1, max_value=200))
    def test_cyclotomic_degree(self, m):
        assert DivisorService.cyclotomic(m).degree == DivisorService.euler_phi(m)

    def test_expand_lambda(self):
        assert DivisorService.expand(L(5)) == IntPolynomial([-1, 0, 0, 0, 0, 1])
        assert DivisorService.expand(P(9)) == DivisorService.cyclotomic(9)
        assert DivisorService.expand(Divisor.zero()) == IntPolynomial([1])

    def test_expand_quotient_of_lambdas(self):
        polynomial = DivisorService.expand(L(12) + L(4) + L(6) - L(1))
        assert polynomial.degree == 21
        assert polynomial(1) == 0

    @given(effective_divisors, effective_divisors)
    def test_expand_is_multiplicative(self, a, b):
        assert DivisorService.expand(a + b) == DivisorService.expand(a) * DivisorService.expand(b)

    @pytest.mark.parametrize("D", [L(1) - L(6), Divisor.e(3)])
    def test_expand_rejects_non_polynomials(self, D):
        with pytest.raises(NotPolynomialDivisorError, match="not a polynomial divisor"):
            DivisorService.expand(D)

    def test_polynomial_text(self):
        assert str(IntPolynomial([1, -1, 1])) == "t^2 - t + 1"
        assert str(IntPolynomial()) == "0"


class TestDivisorSerializer:

    def test_psi_text(self):
        assert DivisorSerializer.to_text(L(2)) == "1*Psi(1) + 1*Psi(2)"
        assert DivisorSerializer.to_text(Divisor.e(2)) == "1/2*Psi(1) + 1/2*Psi(2)"
        assert DivisorSerializer.to_text(Divisor.zero()) == "0"

    def test_lambda_text(self):
        D = L(12) + L(4) + L(6) - L(1)
        assert DivisorSerializer.to_lambda_text(D) == "-1*Lambda(1) + 1*Lambda(4) + 1*Lambda(6) + 1*Lambda(12)"

    def test_structured_form(self):
        D = Divisor.e(6) - P(3)
        data = DivisorSerializer.to_structured(D)
        assert data['psi']['1'] == [1, 6]
        assert DivisorSerializer.from_structured(data) == D

    def test_structured_form_needs_psi(self):
        with pytest.raises(ValueError):
            DivisorSerializer.from_structured({'chi': {}})
