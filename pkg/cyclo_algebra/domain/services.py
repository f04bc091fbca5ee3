"""Domain services for the Cyclo Algebra context."""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Dict, List, Mapping

from cyclo_algebra.domain.arithmetic import (
    divisors_of,
    euler_phi_value,
    moebius_value,
    require_positive,
)
from cyclo_algebra.domain.entities import T, T_RING, Divisor, IntPolynomial, Rational
from shared.domain.errors import CrossCheckError, NotPolynomialDivisorError

LOGGER = logging.getLogger(__name__)


def _product_tree(factors: List):
    """Multiply ring elements pairwise so operand sizes stay balanced."""
    if not factors:
        return T_RING.one
    while len(factors) > 1:
        paired = [factors[i] * factors[i + 1] for i in range(0, len(factors) - 1, 2)]
        if len(factors) % 2:
            paired.append(factors[-1])
        factors = paired
    return factors[0]


@lru_cache(maxsize=512)
def _cyclotomic(m: int) -> IntPolynomial:
    numerator, denominator = [], []
    for k in divisors_of(m):
        mu = moebius_value(m // k)
        if mu == 1:
            numerator.append(T ** k - 1)
        elif mu == -1:
            denominator.append(T ** k - 1)
    quotient, remainder = _product_tree(numerator).div(_product_tree(denominator))
    if remainder:
        raise CrossCheckError(f"cyclotomic({m}) exact division", 0, remainder)
    return IntPolynomial.from_ring(quotient)


class DivisorService:
    """Domain service for the divisor calculus over unit roots.

    Every operation is exact: multiplicities are ``Fraction`` values and
    polynomial coefficients are Python integers.
    """

    @staticmethod
    def moebius(m: int) -> int:
        """Moebius function.

        Args:
            m: Positive integer.

        Returns:
            int: (-1)^r for a product of r distinct primes, 0 if a square divides m.

        Raises:
            InvalidOrderError: If m < 1.
        """
        return moebius_value(m)

    @staticmethod
    def euler_phi(m: int) -> int:
        """Number of k in 1..m coprime to m.

        Raises:
            InvalidOrderError: If m < 1.
        """
        return euler_phi_value(m)

    @staticmethod
    def lambda_div(n: int) -> Divisor:
        return Divisor.lam(n)

    @staticmethod
    def psi_div(n: int) -> Divisor:
        return Divisor.psi(n)

    @staticmethod
    def e_div(n: int) -> Divisor:
        return Divisor.e(n)

    @staticmethod
    def div_add(a: Divisor, b: Divisor) -> Divisor:
        return a + b

    @staticmethod
    def div_scale(q: Rational, a: Divisor) -> Divisor:
        return Fraction(q) * a

    @staticmethod
    def div_mul(a: Divisor, b: Divisor) -> Divisor:
        """Group-ring product, bilinear in the Lambda-basis."""
        return a * b

    @staticmethod
    def tensor(a: Divisor, b: Divisor) -> Divisor:
        """Divisor of a tensor product of automorphisms (same as div_mul)."""
        return a * b

    @staticmethod
    def to_chi(a: Divisor) -> Dict[int, Fraction]:
        return dict(a.chi)

    @staticmethod
    def from_chi(chi: Mapping[int, Rational]) -> Divisor:
        return Divisor.from_chi(chi)

    @staticmethod
    def lefschetz(a: Divisor, k: int) -> Fraction:
        """Lefschetz number L(k) = sum over m | k of m * chi(m).

        Args:
            a: The divisor.
            k: Positive integer.

        Returns:
            Fraction: The Lefschetz number.

        Raises:
            InvalidOrderError: If k < 1.
        """
        k = require_positive("k", k)
        return sum((m * c for m, c in a.chi.items() if k % m == 0), Fraction(0))

    @staticmethod
    def from_lefschetz(values: Callable[[int], Rational], d_M: int) -> Divisor:
        """Recover a divisor supported on divisors of d_M from its Lefschetz numbers.

        Uses m * chi(m) = sum over k | m of moebius(m/k) * L(k).

        Args:
            values: Callable returning L(k) for every k dividing d_M.
            d_M: A common multiple of the support.

        Returns:
            Divisor: The unique divisor with these Lefschetz numbers.
        """
        cache = {k: Fraction(values(k)) for k in divisors_of(require_positive("d_M", d_M))}
        chi = {}
        for m in cache:
            total = sum((moebius_value(m // k) * cache[k] for k in divisors_of(m)), Fraction(0))
            if total:
                chi[m] = total / m
        return Divisor.from_chi(chi)

    @staticmethod
    def trace(a: Divisor) -> Fraction:
        """Trace via tr Lambda_m = [m = 1], i.e. chi(1)."""
        return Fraction(a.chi.get(1, 0))

    @staticmethod
    def degree(a: Divisor) -> Fraction:
        """Degree as sum of chi(m) * m; agrees with sum of nu(m) * phi(m)."""
        return sum((m * c for m, c in a.chi.items()), Fraction(0))

    @staticmethod
    def power_map(a: Divisor, k: int) -> Divisor:
        """Image under the orbitwise k-th power map <l> -> <l^k>.

        On the Lambda-basis: Lambda_m -> gcd(k, m) * Lambda_{m / gcd(k, m)}.
        """
        k = require_positive("k", k)
        image: Dict[int, Fraction] = {}
        for m, c in a.chi.items():
            g = gcd(k, m)
            image[m // g] = image.get(m // g, 0) + g * c
        return Divisor.from_chi(image)

    @staticmethod
    def cyclotomic(m: int) -> IntPolynomial:
        """The m-th cyclotomic polynomial by exact division of (t^k - 1) factors.

        Raises:
            InvalidOrderError: If m < 1.
        """
        return _cyclotomic(require_positive("order", m))

    @staticmethod
    def expand(a: Divisor) -> IntPolynomial:
        """Expand a divisor with nonnegative integer multiplicities to its polynomial.

        The product is formed in the Lambda-basis: positive chi(n) contribute
        (t^n - 1)^chi(n) (binomial powers of a two-term polynomial stay
        sparse), the negative part is divided out exactly at the end.

        Raises:
            NotPolynomialDivisorError: If some multiplicity is fractional or negative.
        """
        if not a.is_effective:
            raise NotPolynomialDivisorError()

        numerator, denominator = [], []
        for n, c in a.chi.items():
            # chi is integral whenever nu is
            factor = (T ** n - 1) ** abs(int(c))
            (numerator if c > 0 else denominator).append(factor)

        product = _product_tree(numerator)
        if denominator:
            product, remainder = product.div(_product_tree(denominator))
            if remainder:
                raise CrossCheckError("expand exact division", 0, remainder)

        result = IntPolynomial.from_ring(product)
        if result.degree != a.degree:
            raise CrossCheckError("expand degree", a.degree, result.degree)
        LOGGER.debug("Expanded divisor of degree %s", result.degree)
        return result
