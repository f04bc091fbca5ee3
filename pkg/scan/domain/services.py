"""Domain services for the Scan context."""
import logging
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Iterator, List, Tuple

from cyclo_algebra.domain.arithmetic import gcd_all
from families.domain.entities import ChainSpec, CycleSpec
from families.domain.services import FamilyService
from scan.domain.entities import ScanConfig, ScanTask
from shared.domain.errors import DegenerateFamilyError
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)


def _passes_single_variable_test(v: Tuple[int, ...], d: int) -> bool:
    """(C1) for |J| = 1: v_j | d, or v_j | d - v_k for some k != j."""
    for j, x in enumerate(v):
        if d % x == 0:
            continue
        if not any((d - y) % x == 0 for k, y in enumerate(v) if k != j):
            return False
    return True


def _sort_key(ws: WeightSystem) -> Tuple[int, Tuple[int, ...]]:
    return ws.d, ws.v


class EnumerationService:
    """Domain service producing the weight systems of a scan."""

    @staticmethod
    def enumerate_weight_systems(cfg: ScanConfig) -> Iterator[WeightSystem]:
        """Yield every reduced (C1) weight system with n variables and d <= d_max.

        Systems come in ascending d, then ascending v (v_1 <= ... <= v_n), each
        exactly once. The single-variable part of (C1) prunes before the full
        subset check; the Milnor bound is applied last.

        Args:
            cfg: A validated scan config.

        Yields:
            WeightSystem: Reduced, sorted, (C1), Milnor number <= mu_max.
        """
        n = cfg.n
        for d in range(2, cfg.d_max + 1):
            for v in combinations_with_replacement(range(1, d), n):
                if gcd(gcd_all(v), d) != 1:
                    continue
                if not _passes_single_variable_test(v, d):
                    continue
                ws = WeightSystem(v, d)
                if not WeightSystemService.check_conditions(ws).c1:
                    continue
                if WeightSystemService.milnor_number(ws) > cfg.mu_max:
                    continue
                yield ws

    @staticmethod
    def family_members(cfg: ScanConfig) -> Iterator[Tuple[str, WeightSystem]]:
        """Yield (spec, weight system) for the configured family, unsorted and unfiltered.

        Degenerate parameter choices are skipped.
        """
        if cfg.family == 'saito':
            for k, q1, q2 in FamilyService.saito_members(cfg.mu_max):
                yield f"ts:{k},{q1},{q2}", FamilyService.saito_family(k, q1, q2)
            return

        exponents = range(1, cfg.a_max + 1)
        if cfg.family == 'fermat':
            for ts in combinations_with_replacement(range(2, cfg.a_max + 1), cfg.n):
                yield f"fermat:{','.join(map(str, ts))}", FamilyService.fermat(ts)
            return

        for a in product(exponents, repeat=cfg.n):
            spec = f"{cfg.family}:{','.join(map(str, a))}"
            try:
                if cfg.family == 'cycle':
                    ws = FamilyService.cycle_weights(CycleSpec(a))
                else:
                    ws = WeightSystem.from_weights(FamilyService.chain_data(ChainSpec(a)).weights)
            except DegenerateFamilyError as e:
                LOGGER.debug("Skipping %s: %s", spec, e)
                continue
            yield spec, ws

    @staticmethod
    def tasks(cfg: ScanConfig) -> List[ScanTask]:
        """The deduplicated scan tasks, sorted by (d, v) of the canonical form.

        A weight system reached by several family parameters is attributed to
        the first spec that produced it.
        """
        if cfg.mode == 'exhaustive':
            found = [(ws, 'exhaustive') for ws in EnumerationService.enumerate_weight_systems(cfg)]
        else:
            found = [
                (ws, spec) for spec, ws in EnumerationService.family_members(cfg)
                if WeightSystemService.milnor_number(ws) <= cfg.mu_max
            ]

        first = {}
        for ws, source in found:
            canonical = ws.reduced().sorted()
            first.setdefault(canonical.key, (canonical, source))
        ordered = sorted(first.values(), key=lambda item: _sort_key(item[0]))
        LOGGER.info("Prepared %d scan tasks (%s mode)", len(ordered), cfg.mode)
        return [ScanTask(ws.key, source) for ws, source in ordered]
