"""Domain entities for the Monodromy bounded context."""
from enum import Enum
from typing import Dict, FrozenSet, List, Sequence, Tuple

from cyclo_algebra.domain.entities import Divisor


class Verdict(str, Enum):
    """Outcome of a conjecture check on one weight system."""
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"

    @classmethod
    def of(cls, holds: bool) -> "Verdict":
        return cls.PASS if holds else cls.FAIL


class SetVerdicts:
    """Graph verdicts of one elementary-divisor set.

    Attributes:
        condition_i (bool): Condition (I).
        condition_ii (bool): Condition (II).
        strong (bool): The rooted strong condition.
    """

    def __init__(self, condition_i: bool, condition_ii: bool, strong: bool):
        self.condition_i = condition_i
        self.condition_ii = condition_ii
        self.strong = strong

    def to_dict(self) -> Dict[str, bool]:
        return {'condition_I': self.condition_i, 'condition_II': self.condition_ii, 'strong': self.strong}


class ElementaryDecomposition:
    """Nested sets M_1 >= M_2 >= ... >= M_{nu_max} of an effective divisor.

    M_j holds the orders m with nu(m) >= j, so the divisor is the sum over j
    of the Psi_m with m in M_j.

    Attributes:
        sets (Tuple[FrozenSet[int], ...]): M_1, ..., M_{nu_max}.
        verdicts (Tuple[SetVerdicts, ...]): Filled in by the monodromy service,
            empty until then.
    """

    def __init__(self, sets: Sequence[FrozenSet[int]], verdicts: Sequence[SetVerdicts] = ()):
        self.sets = tuple(sets)
        self.verdicts = tuple(verdicts)

    @property
    def nu_max(self) -> int:
        return len(self.sets)

    def distinct_sets(self) -> List[FrozenSet[int]]:
        """Distinct M_j in order of first appearance."""
        return list(dict.fromkeys(self.sets))

    def reconstruct(self) -> Divisor:
        """The divisor sum over j and m in M_j of Psi_m."""
        nu: Dict[int, int] = {}
        for s in self.sets:
            for m in s:
                nu[m] = nu.get(m, 0) + 1
        return Divisor(nu)

    def __len__(self) -> int:
        return len(self.sets)


class Conjecture14Report:
    """Condition (I) verdicts for every elementary-divisor set of one weight system.

    Attributes:
        decomposition (ElementaryDecomposition): The sets with their verdicts.
        verdict (Verdict): PASS iff every set satisfies condition (I).
    """

    def __init__(self, decomposition: ElementaryDecomposition, verdict: Verdict):
        self.decomposition = decomposition
        self.verdict = verdict

    @property
    def failing_sets(self) -> List[Tuple[int, FrozenSet[int]]]:
        """(j, M_j) for every set violating condition (I), j 1-based."""
        return [
            (j + 1, s)
            for j, (s, v) in enumerate(zip(self.decomposition.sets, self.decomposition.verdicts))
            if not v.condition_i
        ]

    @property
    def strong_everywhere(self) -> bool:
        return all(v.strong for v in self.decomposition.verdicts)

    def to_dict(self) -> Dict:
        return {
            'verdict': self.verdict.value,
            'sets': [sorted(s, reverse=True) for s in self.decomposition.sets],
            'condition_I': [v.condition_i for v in self.decomposition.verdicts],
            'strong': [v.strong for v in self.decomposition.verdicts],
        }


class SaitoReport:
    """The two parts of Saito's conjecture for one weight system.

    Attributes:
        eq53 (bool): nu(d_w) > 0, or d_w even and nu(d_w / 2) > 0.
        eq54_applicable (bool): every weight is below 1/2.
        eq54 (bool): nu(d_w) > 0.
    """

    def __init__(self, eq53: bool, eq54_applicable: bool, eq54: bool):
        self.eq53 = eq53
        self.eq54_applicable = eq54_applicable
        self.eq54 = eq54

    @property
    def eq53_verdict(self) -> Verdict:
        return Verdict.of(self.eq53)

    @property
    def eq54_verdict(self) -> Verdict:
        if not self.eq54_applicable:
            return Verdict.NOT_APPLICABLE
        return Verdict.of(self.eq54)

    def to_dict(self) -> Dict:
        return {
            'eq53': self.eq53_verdict.value,
            'eq54': self.eq54_verdict.value,
            'eq54_applicable': self.eq54_applicable,
        }
