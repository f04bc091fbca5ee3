"""Domain entities for the Families bounded context."""
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from cyclo_algebra.domain.entities import Divisor


class CycleSpec:
    """Exponents a_1, ..., a_n of a cycle type x_1^a_1 x_n + x_2^a_2 x_1 + ...

    Attributes:
        a (Tuple[int, ...]): Positive exponents, cyclically ordered.
    """

    def __init__(self, a: Sequence[int]):
        self.a = tuple(int(x) for x in a)

    @property
    def n(self) -> int:
        return len(self.a)

    def __repr__(self) -> str:
        return f"CycleSpec({self.a})"


class ChainSpec:
    """Exponents of a chain type, optionally seeded with a root weight s_0/t_0.

    Without a seed the chain is closed at its root (w_0 = w_1), which fixes
    s_0 = 1 and t_0 = a_1 + 1.

    Attributes:
        a (Tuple[int, ...]): Positive exponents along the chain.
        seed (Optional[Tuple[int, int]]): (s_0, t_0) for the generalized form.
    """

    def __init__(self, a: Sequence[int], seed: Optional[Tuple[int, int]] = None):
        self.a = tuple(int(x) for x in a)
        self.seed = tuple(seed) if seed is not None else None

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def is_chain_form(self) -> bool:
        return self.seed is None

    def __repr__(self) -> str:
        return f"ChainSpec({self.a}, seed={self.seed})"


class ChainData:
    """Closed-form data of a (generalized) chain.

    Index 0 of ``s``, ``t`` holds the seed; ``weights``, ``beta`` and
    ``alpha`` are indexed from j = 1. ``b`` and ``mu_seq`` (indexed from
    k = 0) are only defined for the chain form and are empty otherwise.

    Attributes:
        weights (Tuple[Fraction, ...]): w_1, ..., w_n.
        s (Tuple[int, ...]): s_0, ..., s_n.
        t (Tuple[int, ...]): t_0, ..., t_n.
        beta (Tuple[int, ...]): beta_1, ..., beta_n.
        alpha (Tuple[int, ...]): alpha_1, ..., alpha_n.
        b (Tuple[int, ...]): b_0, ..., b_n.
        mu_seq (Tuple[int, ...]): partial Milnor numbers mu_0, ..., mu_n.
        divisor (Divisor): the (partial) divisor of the chain.
    """

    def __init__(
        self,
        weights: Sequence[Fraction],
        s: Sequence[int],
        t: Sequence[int],
        beta: Sequence[int],
        alpha: Sequence[int],
        b: Sequence[int],
        mu_seq: Sequence[int],
        divisor: Divisor
    ):
        self.weights = tuple(weights)
        self.s = tuple(s)
        self.t = tuple(t)
        self.beta = tuple(beta)
        self.alpha = tuple(alpha)
        self.b = tuple(b)
        self.mu_seq = tuple(mu_seq)
        self.divisor = divisor

    @property
    def milnor(self) -> Fraction:
        return self.divisor.degree
