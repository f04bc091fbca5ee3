"""Domain services for the Weight Systems context."""
import logging
import re
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd, prod
from typing import Dict, FrozenSet, Iterable, Tuple

from cyclo_algebra.domain.arithmetic import divisors_of, euler_phi_value, require_positive
from cyclo_algebra.domain.entities import T, Divisor, IntPolynomial
from cyclo_algebra.domain.services import DivisorService
from shared.domain.errors import (
    CrossCheckError,
    InstanceTooLargeError,
    NotCharacteristicPolynomialError,
    RhoNotPolynomialError,
    WeightSystemFormatError,
)
from shared.infrastructure.settings import subset_bound
from weight_systems.domain.entities import ConditionReport, SpectrumReport, WeightSystem

LOGGER = logging.getLogger(__name__)

_INTEGER_FORM = re.compile(r"^\s*(\d+(?:\s*,\s*\d+)*)\s*:\s*(\d+)\s*$")
_RATIONAL_FORM = re.compile(r"^\s*(\d+\s*/\s*\d+(?:\s*,\s*\d+\s*/\s*\d+)*)\s*$")


@lru_cache(maxsize=65536)
def _reachable(generators: Tuple[int, ...], limit: int) -> bytes:
    """reach[x] == 1 iff x is a nonnegative integer combination of the generators."""
    reach = bytearray(limit + 1)
    reach[0] = 1
    for g in generators:
        for x in range(g, limit + 1):
            if reach[x - g]:
                reach[x] = 1
    return bytes(reach)


@lru_cache(maxsize=8192)
def _check_conditions(ws: WeightSystem) -> ConditionReport:
    v, d, n = ws.v, ws.d, ws.n
    c1 = c1_prime = c2 = True
    c1_bar = c1_prime_bar = c2_bar = True
    failures = []

    for size in range(1, n + 1):
        small = 2 * size <= n + 1
        for J in combinations(range(n), size):
            generators = tuple(sorted({v[j] for j in J}))
            reach = _reachable(generators, d)
            g = reduce(gcd, generators)

            # nonnegative version
            compatible = [k for k in range(n) if reach[d - v[k]]]
            outside = [k for k in compatible if k not in J]
            direct = bool(reach[d])
            ok_c1 = direct or len(outside) >= size
            ok_c2 = len(compatible) >= size

            # integer version via the gcd test
            compatible_bar = [k for k in range(n) if (d - v[k]) % g == 0]
            outside_bar = [k for k in compatible_bar if k not in J]
            ok_c1_bar = d % g == 0 or len(outside_bar) >= size
            ok_c2_bar = len(compatible_bar) >= size

            if not ok_c1:
                c1 = False
                c1_prime = c1_prime and not small
                failures.append((
                    tuple(j + 1 for j in J),
                    f"{d} not in SG({', '.join(str(x) for x in generators)}); only {len(outside)} of {size} required "
                    f"indices k outside J with d-v_k in SG(J)"
                ))
            c2 = c2 and ok_c2
            if not ok_c1_bar:
                c1_bar = False
                c1_prime_bar = c1_prime_bar and not small
            c2_bar = c2_bar and ok_c2_bar

    return ConditionReport(c1, c1_prime, c2, c1_bar, c1_prime_bar, c2_bar, failures)


@lru_cache(maxsize=8192)
def _divisor_D(ws: WeightSystem) -> Divisor:
    result = Divisor.lam(1)
    for s, t in ws.st_pairs:
        result = result * (Fraction(1, s) * Divisor.lam(t) - Divisor.lam(1))
    return result


@lru_cache(maxsize=8192)
def _rho(ws: WeightSystem) -> IntPolynomial:
    quotient = reduce(lambda acc, x: acc * (T ** (ws.d - x) - 1), ws.v, T ** sum(ws.v))
    for x in sorted(ws.v, reverse=True):
        quotient, remainder = quotient.div(T ** x - 1)
        if remainder:
            raise RhoNotPolynomialError()
    return IntPolynomial.from_ring(quotient)


class WeightSystemService:
    """Domain service for weight systems and their combinatorial invariants."""

    @staticmethod
    def parse(text: str) -> WeightSystem:
        """Parse "v1,...,vn:d" or "s1/t1,...,sn/tn".

        Args:
            text: Weight system in either textual form.

        Returns:
            WeightSystem: Integer form exactly as written, or the reduced
            integer form of the rational weights.

        Raises:
            WeightSystemFormatError: If the text matches neither form or the
                values are out of range.
        """
        match = _INTEGER_FORM.match(text)
        try:
            if match:
                v = [int(x) for x in match.group(1).split(",")]
                return WeightSystem(v, int(match.group(2)))
            if _RATIONAL_FORM.match(text):
                weights = []
                for token in text.split(","):
                    num, den = (int(x) for x in token.split("/"))
                    if den == 0:
                        raise WeightSystemFormatError(token.strip(), "zero denominator")
                    weights.append(Fraction(num, den))
                if any(w <= 0 or w >= 1 for w in weights):
                    raise WeightSystemFormatError(text, "weights must lie strictly between 0 and 1")
                return WeightSystem.from_weights(weights)
        except WeightSystemFormatError:
            raise
        except ValueError as e:
            raise WeightSystemFormatError(text, str(e))
        raise WeightSystemFormatError(text, "expected 'v1,...,vn:d' or 's1/t1,...,sn/tn'")

    @staticmethod
    def reduce(ws: WeightSystem) -> WeightSystem:
        return ws.reduced()

    @staticmethod
    def normalize(ws: WeightSystem) -> Tuple[Fraction, ...]:
        return ws.weights

    @staticmethod
    def st_pairs(ws: WeightSystem) -> Tuple[Tuple[int, int], ...]:
        return ws.st_pairs

    @staticmethod
    def dw(ws: WeightSystem) -> int:
        return ws.d_w

    @staticmethod
    def m_of_k(ws: WeightSystem, k: int) -> FrozenSet[int]:
        """M(k) = {j : t_j | k} with 1-based indices.

        Raises:
            CrossCheckError: If the divisibility form of M(k) disagrees.
        """
        k = require_positive("k", k)
        members = frozenset(j + 1 for j, (_, t) in enumerate(ws.st_pairs) if k % t == 0)
        by_divisibility = WeightSystemService.m_of_k_by_divisibility(ws, k)
        if members != by_divisibility:
            raise CrossCheckError(f"M({k}) of {ws}", sorted(members), sorted(by_divisibility))
        return members

    @staticmethod
    def m_of_k_by_divisibility(ws: WeightSystem, k: int) -> FrozenSet[int]:
        """M(k) as {j : d / gcd(k, d_w) divides v_j}."""
        k = require_positive("k", k)
        step = ws.d // gcd(k, ws.d_w)
        return frozenset(j + 1 for j, x in enumerate(ws.v) if x % step == 0)

    @staticmethod
    def mu_of_k(ws: WeightSystem, k: int) -> Fraction:
        """mu(k) = product over j in M(k) of (d - v_j) / v_j; 1 for empty M(k)."""
        members = WeightSystemService.m_of_k(ws, k)
        return prod((Fraction(ws.d - ws.v[j - 1], ws.v[j - 1]) for j in members), start=Fraction(1))

    @staticmethod
    def milnor_number(ws: WeightSystem) -> Fraction:
        """prod (d - v_j) / v_j as an exact rational."""
        return prod((Fraction(ws.d - x, x) for x in ws.v), start=Fraction(1))

    @staticmethod
    def lefschetz_ws(ws: WeightSystem, k: int) -> Fraction:
        """L(k) = (-1)^(n - |M(k)|) * mu(k), cross-checked against the divisor D_w.

        Raises:
            CrossCheckError: If the closed form disagrees with the divisor calculus.
        """
        members = WeightSystemService.m_of_k(ws, k)
        value = (-1) ** (ws.n - len(members)) * WeightSystemService.mu_of_k(ws, k)
        from_divisor = DivisorService.lefschetz(_divisor_D(ws), k)
        if value != from_divisor:
            raise CrossCheckError(f"Lefschetz number L({k}) of {ws}", from_divisor, value)
        return value

    @staticmethod
    def semigroup_member(target: int, generators: Iterable[int]) -> bool:
        """Decide whether target is a nonnegative integer combination of the generators.

        Args:
            target: Integer to represent; negative targets are never members.
            generators: Nonempty collection of positive integers.

        Returns:
            bool: True iff target lies in the numerical semigroup.

        Raises:
            ValueError: If generators is empty or contains a non-positive value.
        """
        gens = tuple(sorted(set(int(g) for g in generators)))
        if not gens:
            raise ValueError("Semigroup needs at least one generator")
        if gens[0] <= 0:
            raise ValueError("Semigroup generators must be positive")
        if target < 0:
            return False
        if target % reduce(gcd, gens):
            return False
        return bool(_reachable(gens, target)[target])

    @staticmethod
    def check_conditions(ws: WeightSystem) -> ConditionReport:
        """Evaluate (C1), (C1)', (C2) and their integer versions by subset enumeration.

        Raises:
            InstanceTooLargeError: If n exceeds the configured subset bound.
        """
        bound = subset_bound()
        if ws.n > bound:
            raise InstanceTooLargeError(ws.n, bound)
        return _check_conditions(ws)

    @staticmethod
    def rho_poly(ws: WeightSystem) -> IntPolynomial:
        """t^(v_1+...+v_n) * prod (t^(d-v_j) - 1) / (t^(v_j) - 1) by exact division.

        Raises:
            RhoNotPolynomialError: If a division leaves a remainder.
            CrossCheckError: If the outcome disagrees with the (C2)-bar verdict.
        """
        try:
            rho = _rho(ws)
            integral = True
        except RhoNotPolynomialError:
            rho = None
            integral = False

        if ws.n <= subset_bound():
            c2_bar = _check_conditions(ws).c2_bar
            if c2_bar != integral:
                raise CrossCheckError(f"rho integrality of {ws} vs (C2)-bar", c2_bar, integral)
        if rho is None:
            raise RhoNotPolynomialError()
        return rho

    @staticmethod
    def spectrum(ws: WeightSystem) -> SpectrumReport:
        """Exponents alpha = (power of t) / d of the generating polynomial.

        Raises:
            RhoNotPolynomialError: Propagated from rho_poly.
            CrossCheckError: If the coefficient sum differs from the product formula.
        """
        rho = WeightSystemService.rho_poly(ws)
        sigma: Dict[Fraction, int] = {Fraction(k, ws.d): c for k, c in rho.terms()}
        milnor = rho(1)
        expected = WeightSystemService.milnor_number(ws)
        if milnor != expected:
            raise CrossCheckError(f"Milnor number of {ws}", expected, milnor)
        return SpectrumReport(sigma, milnor)

    @staticmethod
    def divisor_D(ws: WeightSystem) -> Divisor:
        """D_w = prod (1/s_j * Lambda_{t_j} - Lambda_1).

        Raises:
            CrossCheckError: If the degree differs from prod (d - v_j) / v_j.
        """
        result = _divisor_D(ws)
        expected = WeightSystemService.milnor_number(ws)
        if result.degree != expected:
            raise CrossCheckError(f"degree of D_w for {ws}", expected, result.degree)
        return result

    @staticmethod
    def verify_spectrum_divisor_match(ws: WeightSystem) -> bool:
        """Check D_w against the orbits of exp(2 pi i alpha) over the exponents.

        For every order m, the exponents with reduced denominator m must hit
        every primitive residue a/m equally often, and that common count must
        be nu(m).
        """
        report = WeightSystemService.spectrum(ws)
        divisor = WeightSystemService.divisor_D(ws)

        counts: Dict[int, Dict[int, int]] = {}
        for alpha, c in report.sigma.items():
            frac = alpha - (alpha.numerator // alpha.denominator)
            m = frac.denominator
            residues = counts.setdefault(m, {})
            residues[frac.numerator] = residues.get(frac.numerator, 0) + c

        for m in set(counts) | set(divisor.support):
            residues = counts.get(m, {})
            nu = divisor.nu(m)
            primitive = [a for a in range(m) if gcd(a, m) == 1]
            if sum(residues.values()) != nu * euler_phi_value(m):
                LOGGER.debug("Order %d of %s: %s exponents vs nu=%s", m, ws, sum(residues.values()), nu)
                return False
            if any(residues.get(a, 0) != nu for a in primitive):
                LOGGER.debug("Order %d of %s is not a full orbit", m, ws)
                return False
        return True

    @staticmethod
    def d_mon(ws: WeightSystem) -> int:
        """Order of the monodromy: lcm of the Psi-support of D_w.

        Raises:
            NotCharacteristicPolynomialError: If D_w has a fractional or negative multiplicity.
        """
        divisor = WeightSystemService.divisor_D(ws)
        if not divisor.is_effective:
            raise NotCharacteristicPolynomialError()
        return divisor.d_M

    @staticmethod
    def lefschetz_divisors(ws: WeightSystem) -> Tuple[int, ...]:
        """Divisors of d_w in descending order, the natural index set for L(k)."""
        return tuple(reversed(divisors_of(ws.d_w)))
