"""Domain services for the Monodromy context."""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet

from cyclo_algebra.domain.entities import Divisor
from monodromy.domain.entities import (
    Conjecture14Report,
    ElementaryDecomposition,
    SaitoReport,
    SetVerdicts,
    Verdict,
)
from orlik_graph.domain.services import OrlikGraphService
from shared.domain.errors import CrossCheckError, NotCharacteristicPolynomialError
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=16384)
def _set_verdicts(M: FrozenSet[int]) -> SetVerdicts:
    report = OrlikGraphService.report(OrlikGraphService.build_graph(M))
    return SetVerdicts(report.condition_i, report.condition_ii, report.strong)


class MonodromyService:
    """Domain service for elementary divisors and the conjecture checkers."""

    @staticmethod
    def elementary_split(divisor: Divisor) -> ElementaryDecomposition:
        """Split an effective divisor into its nested elementary-divisor sets.

        Args:
            divisor: Divisor with nonnegative integer multiplicities.

        Returns:
            ElementaryDecomposition: M_j = {m : nu(m) >= j} for j = 1..nu_max,
            without verdicts.

        Raises:
            NotCharacteristicPolynomialError: If some multiplicity is negative or fractional.
            CrossCheckError: If the sets do not add back up to the divisor.
        """
        if not divisor.is_effective:
            raise NotCharacteristicPolynomialError()
        nu_max = int(max((c for _, c in divisor.items()), default=0))
        sets = [
            frozenset(m for m, c in divisor.items() if c >= j)
            for j in range(1, nu_max + 1)
        ]
        decomposition = ElementaryDecomposition(sets)
        if decomposition.reconstruct() != divisor:
            raise CrossCheckError("elementary sets reconstruct the divisor", divisor, decomposition.reconstruct())
        return decomposition

    @staticmethod
    def with_verdicts(decomposition: ElementaryDecomposition) -> ElementaryDecomposition:
        """Attach graph verdicts to every set; identical sets are evaluated once."""
        distinct = decomposition.distinct_sets()
        by_set = {s: _set_verdicts(s) for s in distinct}
        LOGGER.debug("Evaluating %d distinct sets out of %d", len(distinct), len(decomposition))
        return ElementaryDecomposition(decomposition.sets, [by_set[s] for s in decomposition.sets])

    @staticmethod
    def conjecture14_check(ws: WeightSystem) -> Conjecture14Report:
        """Check condition (I) on every elementary-divisor set of D_w.

        Raises:
            NotCharacteristicPolynomialError: If D_w is not effective.
        """
        divisor = WeightSystemService.divisor_D(ws)
        decomposition = MonodromyService.with_verdicts(MonodromyService.elementary_split(divisor))
        report = Conjecture14Report(
            decomposition, Verdict.of(all(v.condition_i for v in decomposition.verdicts))
        )
        if report.verdict is Verdict.FAIL:
            LOGGER.warning("Condition (I) fails for %s on sets %s", ws, report.failing_sets)
        return report

    @staticmethod
    def saito_check(ws: WeightSystem) -> SaitoReport:
        """Evaluate both parts of Saito's conjecture on D_w.

        Raises:
            NotCharacteristicPolynomialError: If D_w is not effective.
        """
        divisor = WeightSystemService.divisor_D(ws)
        if not divisor.is_effective:
            raise NotCharacteristicPolynomialError()
        d_w = ws.d_w
        at_top = divisor.nu(d_w) > 0
        at_half = d_w % 2 == 0 and divisor.nu(d_w // 2) > 0
        applicable = all(w < Fraction(1, 2) for w in ws.weights)
        return SaitoReport(at_top or at_half, applicable, at_top)
