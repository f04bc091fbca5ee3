"""Application services for the Scan context."""
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Tuple

from tqdm import tqdm

from cyclo_algebra.infrastructure.serializers import DivisorSerializer
from monodromy.application.services import is_counterexample, not_applicable_verdicts
from monodromy.domain.services import MonodromyService
from scan.domain.entities import ScanConfig, ScanSummary, ScanTask
from scan.domain.services import EnumerationService
from scan.infrastructure.repositories import ScanRecordRepository
from shared.domain.errors import (
    InstanceTooLargeError,
    NotCharacteristicPolynomialError,
    RhoNotPolynomialError,
)
from weight_systems.application.services import exact
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)


def evaluate_task(task: Tuple[str, str]) -> Dict[str, Any]:
    """Compute the full record of one weight system; runs in worker processes.

    Args:
        task: (canonical key, source) pair.

    Returns:
        Dict: The record, keys in their on-disk order.
    """
    key, source = task
    ws = WeightSystemService.parse(key)
    divisor = WeightSystemService.divisor_D(ws)

    try:
        exponents = WeightSystemService.spectrum(ws).histogram()
    except RhoNotPolynomialError:
        exponents = None
    try:
        conditions = WeightSystemService.check_conditions(ws).to_dict()
    except InstanceTooLargeError:
        conditions = None

    try:
        conjecture14 = MonodromyService.conjecture14_check(ws).to_dict()
        saito = MonodromyService.saito_check(ws).to_dict()
        d_mon = divisor.d_M
    except NotCharacteristicPolynomialError:
        na = not_applicable_verdicts()
        conjecture14, saito = na['conjecture14'], na['saito']
        d_mon = None

    return {
        'ws': key,
        'source': source,
        'n': ws.n,
        'd': ws.d,
        'weights': [str(w) for w in ws.weights],
        'mu': exact(WeightSystemService.milnor_number(ws)),
        'd_w': ws.d_w,
        'd_mon': d_mon,
        'D_w': DivisorSerializer.to_structured(divisor)['psi'],
        'D_w_lambda': DivisorSerializer.to_lambda_text(divisor),
        'exponents': exponents,
        'conditions': conditions,
        'conjecture14': conjecture14,
        'saito': saito,
    }


class ScanApplicationService:
    """Application service running weight-system scans.

    Coordinates enumeration, per-system evaluation (in-process or on a
    process pool) and the single JSONL writer.
    """

    def __init__(self):
        """Initialize the ScanApplicationService with necessary dependencies."""
        self.enumeration_service = EnumerationService()

    def plan(self, cfg: ScanConfig) -> List[ScanTask]:
        return self.enumeration_service.tasks(cfg)

    def run_scan(self, cfg: ScanConfig, progress: bool = False) -> Dict[str, Any]:
        """Run a scan and persist one record per weight system.

        Args:
            cfg: Validated scan configuration.
            progress: Show a progress bar on stderr.

        Returns:
            Dict: Summary counters over the whole output file, including
            records kept from a resumed run.

        Raises:
            OSError: If the output file cannot be read or written.
        """
        repository = ScanRecordRepository(cfg.out)
        summary = ScanSummary()

        done = set()
        if cfg.resume:
            repository.repair()
            for record in repository.find_all():
                done.add(record['ws'])
                summary.add(record, resumed=True)
            LOGGER.info("Resuming %s with %d records already present", cfg.out, len(done))
        else:
            repository.truncate()

        pending = [(t.key, t.source) for t in self.plan(cfg) if t.key not in done]
        if cfg.jobs > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                chunksize = max(1, len(pending) // (cfg.jobs * 8))
                results = pool.map(evaluate_task, pending, chunksize=chunksize)
                self._write_all(repository, summary, results, len(pending), progress)
        else:
            results = map(evaluate_task, pending)
            self._write_all(repository, summary, results, len(pending), progress)

        LOGGER.info("Scan finished: %s", summary.to_dict())
        return summary.to_dict()

    @staticmethod
    def _write_all(repository, summary, results, total, progress) -> None:
        for record in tqdm(results, total=total, disable=not progress, file=sys.stderr, unit="ws"):
            repository.save(record)
            summary.add(record)
            if is_counterexample(record):
                LOGGER.warning("Potential counterexample %s (%s)", record['ws'], record['source'])
            else:
                LOGGER.debug("Recorded %s", record['ws'])
