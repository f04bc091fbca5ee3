"""Domain entities for the Cyclo Algebra bounded context."""
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from sympy import ZZ
from sympy.polys.rings import ring

from cyclo_algebra.domain.arithmetic import divisors_of, euler_phi_value, lcm_all, moebius_value, require_positive

Rational = Union[int, Fraction]

# Sparse univariate integer polynomials; all products and divisions go through it.
T_RING, T = ring("t", ZZ)


class Divisor:
    """A finite rational combination of unit-root orbits.

    The canonical representation is the Psi-basis: ``psi_coeffs[m]`` is the
    multiplicity nu(m) of the orbit of primitive m-th roots of unity (the
    divisor of the m-th cyclotomic polynomial). Zero multiplicities are never
    stored. The Lambda-basis coefficients chi (Lambda_n is the divisor of
    t^n - 1) are derived on first use and cached on the instance.

    Instances are immutable; arithmetic returns new divisors.

    Attributes:
        psi_coeffs (Mapping[int, Fraction]): read-only order -> multiplicity map.
    """

    def __init__(self, psi_coeffs: Mapping[int, Rational] = None):
        """Initialize a Divisor.

        Args:
            psi_coeffs: Map from order m >= 1 to a rational multiplicity.

        Raises:
            InvalidOrderError: If an order is not a positive integer.
        """
        coeffs: Dict[int, Fraction] = {}
        for m, c in (psi_coeffs or {}).items():
            m = require_positive("order", m)
            q = Fraction(c)
            if q:
                coeffs[m] = q
        self._psi = dict(sorted(coeffs.items()))

    @classmethod
    def zero(cls) -> "Divisor":
        return cls()

    @classmethod
    def lam(cls, n: int) -> "Divisor":
        """Lambda_n = Psi-sum over all divisors of n."""
        return cls({m: 1 for m in divisors_of(require_positive("order", n))})

    @classmethod
    def psi(cls, n: int) -> "Divisor":
        """Psi_n, the single orbit of primitive n-th roots of unity."""
        return cls({require_positive("order", n): 1})

    @classmethod
    def e(cls, n: int) -> "Divisor":
        """E_n = Lambda_n / n."""
        n = require_positive("order", n)
        return Fraction(1, n) * cls.lam(n)

    @classmethod
    def from_chi(cls, chi: Mapping[int, Rational]) -> "Divisor":
        """Build a divisor from Lambda-basis coefficients.

        nu(m) = sum of chi(n) over the multiples n of m.
        """
        nu: Dict[int, Fraction] = {}
        for n, c in chi.items():
            c = Fraction(c)
            if not c:
                continue
            for m in divisors_of(require_positive("order", n)):
                nu[m] = nu.get(m, 0) + c
        return cls(nu)

    @property
    def psi_coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._psi)

    @cached_property
    def chi(self) -> Mapping[int, Fraction]:
        """Lambda-basis coefficients, chi(n) = sum over n | m of nu(m) * moebius(m/n)."""
        chi: Dict[int, Fraction] = {}
        for m, c in self._psi.items():
            for n in divisors_of(m):
                mu = moebius_value(m // n)
                if mu:
                    chi[n] = chi.get(n, 0) + mu * c
        return MappingProxyType({n: c for n, c in sorted(chi.items()) if c})

    def nu(self, m: int) -> Fraction:
        """Multiplicity of Psi_m (zero when m is not in the support)."""
        return self._psi.get(m, Fraction(0))

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._psi)

    @property
    def d_M(self) -> int:
        """lcm of the Psi-support (1 for the zero divisor)."""
        return lcm_all(self._psi)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._psi.values())

    @property
    def is_effective(self) -> bool:
        """True iff every multiplicity is a nonnegative integer."""
        return all(c.denominator == 1 and c > 0 for c in self._psi.values())

    @property
    def degree(self) -> Fraction:
        return sum((c * euler_phi_value(m) for m, c in self._psi.items()), Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._psi.items())

    def __add__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        merged = dict(self._psi)
        for m, c in other._psi.items():
            merged[m] = merged.get(m, 0) + c
        return Divisor(merged)

    def __neg__(self) -> "Divisor":
        return Divisor({m: -c for m, c in self._psi.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Divisor":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Divisor({m: q * c for m, c in self._psi.items()})
        if not isinstance(other, Divisor):
            return NotImplemented
        # Lambda_a * Lambda_b = gcd(a, b) * Lambda_lcm(a, b), extended bilinearly
        product: Dict[int, Fraction] = {}
        for a, ca in self.chi.items():
            for b, cb in other.chi.items():
                key = lcm(a, b)
                product[key] = product.get(key, 0) + gcd(a, b) * ca * cb
        return Divisor.from_chi(product)

    def __rmul__(self, other) -> "Divisor":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._psi)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._psi == other._psi

    def __hash__(self) -> int:
        return hash(tuple(self._psi.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{m}: {c}" for m, c in self._psi.items())
        return f"Divisor({{{body}}})"


class IntPolynomial:
    """A univariate polynomial with exact integer coefficients.

    ``coeffs[k]`` is the coefficient of t^k; trailing zeros are stripped so
    the leading coefficient is nonzero unless the polynomial is 0. The zero
    polynomial has degree -1.
    """

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def from_ring(cls, element) -> "IntPolynomial":
        """Convert a sparse ``T_RING`` element to the dense form."""
        if not element:
            return cls()
        terms = element.terms()
        dense = [0] * (max(monom[0] for monom, _ in terms) + 1)
        for (k,), c in terms:
            dense[k] = int(c)
        return cls(dense)

    def to_ring(self):
        return T_RING.from_dict({(k,): c for k, c in enumerate(self._coeffs) if c})

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Nonzero (power, coefficient) pairs in ascending power."""
        return ((k, c) for k, c in enumerate(self._coeffs) if c)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    def divmod(self, other: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Integer long division; the remainder is nonzero when it does not go exactly."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = self.to_ring().div(other.to_ring())
        return IntPolynomial.from_ring(quotient), IntPolynomial.from_ring(remainder)

    def __call__(self, x):
        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() + other.to_ring())

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_ring(self.to_ring() - other.to_ring())

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._coeffs)
        return IntPolynomial.from_ring(self.to_ring() * other.to_ring())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.terms(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"
