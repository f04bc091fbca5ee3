"""Application services for the Families context."""
import logging
from typing import Any, Dict, Optional, Tuple

from cyclo_algebra.infrastructure.serializers import DivisorSerializer
from families.domain.entities import ChainSpec, CycleSpec
from families.domain.services import FamilyService
from monodromy.domain.services import MonodromyService
from shared.domain.errors import WeightSystemFormatError
from weight_systems.application.services import exact
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)


def parse_seed(text: str) -> Tuple[int, int]:
    """Parse a chain seed "s0/t0"."""
    num, sep, den = text.partition("/")
    if not sep or not num.strip().isdigit() or not den.strip().isdigit():
        raise WeightSystemFormatError(text, "expected a seed 's0/t0'")
    return int(num), int(den)


class FamilyApplicationService:
    """
    Application service generating family members from their text specs.
    Every generator runs its closed-form cross-checks before anything is
    reported.
    """

    def __init__(self):
        self.family_service = FamilyService()

    def generate(self, text: str, seed: Optional[str] = None) -> Dict[str, Any]:
        """
        Generate the weight system named by a family spec.

        Args:
            text (str): "cycle:a1,...", "chain:a1,...", "fermat:t1,..." or "ts:k,q1,q2"
            seed (Optional[str]): "s0/t0" root weight, chains only

        Returns:
            Dict: Weight system, divisor and the family's closed-form data

        Raises:
            ValueError: If the spec is malformed or the parameters are degenerate
        """
        kind, params = self.family_service.parse_spec(text)
        if seed is not None and kind != 'chain':
            raise WeightSystemFormatError(seed, "a seed only applies to chain specs")

        details: Dict[str, Any] = {}
        if kind == 'cycle':
            spec = CycleSpec(params)
            ws = self.family_service.cycle_weights(spec)
            divisor = self.family_service.cycle_divisor(spec)
        elif kind == 'chain':
            spec = ChainSpec(params, parse_seed(seed) if seed is not None else None)
            data = self.family_service.chain_data(spec)
            ws = WeightSystem.from_weights(data.weights)
            divisor = data.divisor
            details = {
                's': list(data.s),
                't': list(data.t),
                'beta': list(data.beta),
                'alpha': list(data.alpha),
            }
            if spec.is_chain_form:
                details['b'] = list(data.b)
                details['mu_seq'] = list(data.mu_seq)
                details['orlik_randell'] = self.family_service.orlik_randell_check(spec)
        elif kind == 'fermat':
            ws = self.family_service.fermat(params)
            divisor = WeightSystemService.divisor_D(ws)
        else:
            ws = self.family_service.saito_family(*params)
            divisor = WeightSystemService.divisor_D(ws)
            details['saito'] = MonodromyService.saito_check(ws).to_dict()

        LOGGER.info("Generated %s from %s", ws, text)
        return {
            'spec': text,
            'kind': kind,
            'ws': str(ws),
            'canonical': ws.reduced().sorted().key,
            'weights': [str(w) for w in ws.weights],
            'mu': exact(divisor.degree),
            'd_w': ws.d_w,
            'D_psi': DivisorSerializer.to_text(divisor),
            'D_lambda': DivisorSerializer.to_lambda_text(divisor),
            **details,
        }
