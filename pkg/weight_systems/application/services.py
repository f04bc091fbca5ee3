"""Application services for the Weight Systems context."""
import logging
from typing import Any, Dict

from cyclo_algebra.infrastructure.serializers import DivisorSerializer
from shared.domain.errors import NotCharacteristicPolynomialError, RhoNotPolynomialError
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)


def exact(q) -> Any:
    """An exact rational as an int when integral, else its "p/q" string."""
    return int(q) if q.denominator == 1 else str(q)


class WeightSystemApplicationService:
    """
    Application service answering questions about a single weight system
    given in text form.
    """

    def __init__(self):
        """
        Initialize the WeightSystemApplicationService with its domain service.
        """
        self.weight_system_service = WeightSystemService()

    def describe(self, text: str) -> Dict[str, Any]:
        """
        Divisor, Milnor number, orders and exponents of a weight system.

        Args:
            text (str): "v1,...,vn:d" or "s1/t1,...,sn/tn"

        Returns:
            Dict: The invariants with ``lefschetz`` mapping each divisor k of
            d_w to L(k); ``d_mon`` and ``exponents`` are None when undefined
            for this system.

        Raises:
            ValueError: If the text is not a weight system
        """
        ws = self.weight_system_service.parse(text)
        divisor = self.weight_system_service.divisor_D(ws)

        try:
            d_mon = self.weight_system_service.d_mon(ws)
        except NotCharacteristicPolynomialError:
            d_mon = None
        try:
            exponents = self.weight_system_service.spectrum(ws).histogram()
            spectrum_matches = self.weight_system_service.verify_spectrum_divisor_match(ws)
        except RhoNotPolynomialError:
            exponents = None
            spectrum_matches = None

        lefschetz = {
            str(k): exact(self.weight_system_service.lefschetz_ws(ws, k))
            for k in self.weight_system_service.lefschetz_divisors(ws)
        }

        LOGGER.info("Described %s: mu=%s d_w=%s", ws, self.weight_system_service.milnor_number(ws), ws.d_w)
        return {
            'ws': str(ws),
            'canonical': ws.reduced().sorted().key,
            'weights': [str(w) for w in ws.weights],
            'mu': exact(self.weight_system_service.milnor_number(ws)),
            'd_w': ws.d_w,
            'd_mon': d_mon,
            'lefschetz': lefschetz,
            'D_psi': DivisorSerializer.to_text(divisor),
            'D_lambda': DivisorSerializer.to_lambda_text(divisor),
            'D_w': DivisorSerializer.to_structured(divisor)['psi'],
            'exponents': exponents,
            'spectrum_matches_divisor': spectrum_matches,
        }

    def conditions(self, text: str) -> Dict[str, Any]:
        """
        Solvability conditions of a weight system with the failing subsets.

        Raises:
            ValueError: If the text is not a weight system or n exceeds the
                subset bound
        """
        ws = self.weight_system_service.parse(text)
        report = self.weight_system_service.check_conditions(ws)
        return {
            'ws': str(ws),
            'conditions': report.to_dict(),
            'consistent': report.is_consistent(),
            'witness_failures': [
                {'J': list(J), 'detail': detail} for J, detail in report.witness_failures
            ],
        }
