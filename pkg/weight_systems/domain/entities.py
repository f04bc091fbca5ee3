"""Domain entities for the Weight Systems bounded context."""
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Sequence, Tuple

from cyclo_algebra.domain.arithmetic import gcd_all, lcm_all


class WeightSystem:
    """Represents an integer weight system (v_1, ..., v_n; d).

    Attributes:
        v (Tuple[int, ...]): Weight numerators, each with 0 < v_i < d.
        d (int): The degree.
    """

    def __init__(self, v: Sequence[int], d: int):
        """Initialize a WeightSystem.

        Args:
            v: Weight numerators.
            d: Degree.

        Raises:
            ValueError: If there are no weights or some v_i is outside (0, d).
        """
        if not v:
            raise ValueError("A weight system needs at least one weight")
        values = tuple(int(x) for x in v)
        if any(x != y for x, y in zip(values, v)) or int(d) != d:
            raise ValueError("Weights and degree must be integers")
        if any(x <= 0 or x >= d for x in values):
            raise ValueError(f"Weights must satisfy 0 < v_i < d, got {values} with d={d}")
        self.v = values
        self.d = int(d)

    @classmethod
    def from_weights(cls, weights: Iterable[Fraction]) -> "WeightSystem":
        """Build the reduced integer system from normalized rational weights.

        Args:
            weights: Rationals w_i with 0 < w_i < 1.

        Returns:
            WeightSystem: (w_i * d; d) with d the lcm of the denominators.
        """
        ws = [Fraction(w) for w in weights]
        d = lcm_all(w.denominator for w in ws)
        return cls([int(w * d) for w in ws], d)

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def content(self) -> int:
        """gcd(v_1, ..., v_n, d)."""
        return gcd(gcd_all(self.v), self.d)

    def is_reduced(self) -> bool:
        return self.content == 1

    def reduced(self) -> "WeightSystem":
        g = self.content
        if g == 1:
            return self
        return WeightSystem([x // g for x in self.v], self.d // g)

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, self.d) for x in self.v)

    @property
    def st_pairs(self) -> Tuple[Tuple[int, int], ...]:
        """(s_j, t_j) coprime with s_j / t_j = v_j / d."""
        return tuple((w.numerator, w.denominator) for w in self.weights)

    @property
    def d_w(self) -> int:
        return lcm_all(t for _, t in self.st_pairs)

    @property
    def key(self) -> str:
        """Canonical key: reduced, v sorted ascending, rendered "v1,...,vn:d"."""
        red = self.reduced()
        return f"{','.join(str(x) for x in sorted(red.v))}:{red.d}"

    def sorted(self) -> "WeightSystem":
        return WeightSystem(sorted(self.v), self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightSystem):
            return NotImplemented
        return self.v == other.v and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.v, self.d))

    def __str__(self) -> str:
        return f"{','.join(str(x) for x in self.v)}:{self.d}"

    def __repr__(self) -> str:
        return f"WeightSystem({self.v}, {self.d})"


class ConditionReport:
    """Verdicts of the solvability conditions for one weight system.

    Attributes:
        c1, c1_prime, c2 (bool): The conditions over nonnegative integers.
        c1_bar, c1_prime_bar, c2_bar (bool): The same conditions over integers.
        witness_failures (Tuple): (J, detail) for every subset J violating (C1);
            J uses 1-based variable indices.
    """

    def __init__(
        self,
        c1: bool,
        c1_prime: bool,
        c2: bool,
        c1_bar: bool,
        c1_prime_bar: bool,
        c2_bar: bool,
        witness_failures: Sequence[Tuple[Tuple[int, ...], str]] = ()
    ):
        self.c1 = c1
        self.c1_prime = c1_prime
        self.c2 = c2
        self.c1_bar = c1_bar
        self.c1_prime_bar = c1_prime_bar
        self.c2_bar = c2_bar
        self.witness_failures = tuple(witness_failures)

    def is_consistent(self) -> bool:
        """The three formulations agree, in both versions, and (C1) implies (C1)-bar."""
        return (
            self.c1 == self.c1_prime == self.c2
            and self.c1_bar == self.c1_prime_bar == self.c2_bar
            and (self.c1_bar or not self.c1)
        )

    def to_dict(self) -> Dict[str, bool]:
        return {
            'c1': self.c1,
            'c1_prime': self.c1_prime,
            'c2': self.c2,
            'c1_bar': self.c1_bar,
            'c1_prime_bar': self.c1_prime_bar,
            'c2_bar': self.c2_bar,
        }


class SpectrumReport:
    """Exponents of a weight system read off the generating polynomial.

    Attributes:
        sigma (Dict[Fraction, int]): exponent -> multiplicity, ascending.
        milnor (int): sum of all multiplicities.
    """

    def __init__(self, sigma: Dict[Fraction, int], milnor: int):
        self.sigma = dict(sorted(sigma.items()))
        self.milnor = milnor

    @property
    def exponents(self) -> Tuple[Fraction, ...]:
        """The exponent multiset, each alpha repeated by its (positive) multiplicity."""
        return tuple(alpha for alpha, c in self.sigma.items() for _ in range(max(c, 0)))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.sigma.values())

    def histogram(self) -> Dict[str, int]:
        return {str(alpha): c for alpha, c in self.sigma.items()}
