"""Application services for the Monodromy context."""
import logging
from typing import Any, Dict

from monodromy.domain.entities import Verdict
from monodromy.domain.services import MonodromyService
from shared.domain.errors import NotCharacteristicPolynomialError
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)


def not_applicable_verdicts() -> Dict[str, Any]:
    """Verdict block for a divisor that is not a characteristic polynomial."""
    na = Verdict.NOT_APPLICABLE.value
    return {
        'conjecture14': {'verdict': na, 'sets': [], 'condition_I': [], 'strong': []},
        'saito': {'eq53': na, 'eq54': na, 'eq54_applicable': False},
    }


class MonodromyApplicationService:
    """
    Application service evaluating the monodromy conjectures of a weight system.
    """

    def __init__(self):
        self.monodromy_service = MonodromyService()

    def verdicts(self, text: str) -> Dict[str, Any]:
        """
        Conjecture verdicts for one weight system.

        Args:
            text (str): The weight system in either text form

        Returns:
            Dict: ``conjecture14`` and ``saito`` blocks plus a ``counterexample``
            flag set when condition (I) or the half-order part of Saito's
            conjecture fails.

        Raises:
            ValueError: If the text is not a weight system
        """
        ws = WeightSystemService.parse(text)
        try:
            result = {
                'conjecture14': self.monodromy_service.conjecture14_check(ws).to_dict(),
                'saito': self.monodromy_service.saito_check(ws).to_dict(),
            }
        except NotCharacteristicPolynomialError:
            LOGGER.info("D_w of %s is not a characteristic polynomial", ws)
            result = not_applicable_verdicts()
        result['counterexample'] = is_counterexample(result)
        return result


def is_counterexample(record: Dict[str, Any]) -> bool:
    """True when a verdict block records a conjecture failure worth exit status 3."""
    fail = Verdict.FAIL.value
    return record['conjecture14']['verdict'] == fail or record['saito']['eq53'] == fail
