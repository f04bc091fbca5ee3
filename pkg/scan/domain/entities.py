"""Domain entities for the Scan bounded context."""
from typing import Any, Dict

MODES = ('exhaustive', 'family')
FAMILIES = ('saito', 'cycle', 'chain', 'fermat')

# Exhaustive enumeration above this n needs allow_exhaustive_n4
EXHAUSTIVE_N_LIMIT = 3


class ScanConfig:
    """Parameters of one scan run.

    In exhaustive mode every reduced weight system with n variables and
    d <= d_max is enumerated. In family mode the closed-form family named by
    ``family`` is enumerated instead (exponents up to ``a_max`` for cycles,
    chains and Fermat sums, ``n`` variables; Saito members ignore ``n``).
    Both modes keep only systems with Milnor number <= mu_max.

    Attributes:
        n (int): Number of variables.
        d_max (int): Degree bound (exhaustive mode).
        mu_max (int): Milnor number bound.
        mode (str): 'exhaustive' or 'family'.
        family (str): 'saito', 'cycle', 'chain' or 'fermat'.
        a_max (int): Exponent bound for cycle, chain and Fermat families.
        jobs (int): Worker processes; 1 computes in-process.
        out (str): JSONL output path.
        resume (bool): Skip systems already present in ``out``.
        allow_exhaustive_n4 (bool): Permit exhaustive mode for n > 3.
    """

    def __init__(
        self,
        n: int = 2,
        d_max: int = 30,
        mu_max: int = 500,
        mode: str = 'family',
        family: str = 'saito',
        a_max: int = 5,
        jobs: int = 1,
        out: str = 'scan_results.jsonl',
        resume: bool = False,
        allow_exhaustive_n4: bool = False
    ):
        self.n = n
        self.d_max = d_max
        self.mu_max = mu_max
        self.mode = mode
        self.family = family
        self.a_max = a_max
        self.jobs = jobs
        self.out = out
        self.resume = resume
        self.allow_exhaustive_n4 = allow_exhaustive_n4

    def validate(self) -> "ScanConfig":
        """Check the invariants and return self.

        Raises:
            ValueError: If a bound is out of range, the mode or family is
                unknown, or exhaustive mode is requested for n > 3 without
                the override.
        """
        if self.mode not in MODES:
            raise ValueError(f"invalid input '{self.mode}': mode must be one of {', '.join(MODES)}")
        if self.family not in FAMILIES:
            raise ValueError(f"invalid input '{self.family}': family must be one of {', '.join(FAMILIES)}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.d_max < 2:
            raise ValueError(f"d_max must be >= 2, got {self.d_max}")
        if self.mu_max < 1:
            raise ValueError(f"mu_max must be >= 1, got {self.mu_max}")
        if self.a_max < 1:
            raise ValueError(f"a_max must be >= 1, got {self.a_max}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if self.mode == 'exhaustive' and self.n > EXHAUSTIVE_N_LIMIT and not self.allow_exhaustive_n4:
            raise ValueError(
                f"exhaustive mode for n={self.n} needs --allow-exhaustive-n4 "
                f"(n=4 at mu <= 500 runs for hours)"
            )
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'd_max': self.d_max,
            'mu_max': self.mu_max,
            'mode': self.mode,
            'family': self.family,
            'a_max': self.a_max,
            'jobs': self.jobs,
            'out': self.out,
            'resume': self.resume,
            'allow_exhaustive_n4': self.allow_exhaustive_n4,
        }


class ScanTask:
    """One weight system queued for evaluation.

    Attributes:
        key (str): Canonical key "v1,...,vn:d" (reduced, v ascending).
        source (str): 'exhaustive' or the family spec that produced it.
    """

    def __init__(self, key: str, source: str):
        self.key = key
        self.source = source

    def __repr__(self) -> str:
        return f"ScanTask({self.key!r}, {self.source!r})"


class ScanSummary:
    """Counters over the records of one scan output file."""

    def __init__(self):
        self.total = 0
        self.skipped = 0
        self.conjecture14 = {'pass': 0, 'fail': 0, 'not-applicable': 0}
        self.eq53_fail = 0
        self.eq54_fail = 0
        self.eq54_not_applicable = 0

    def add(self, record: Dict[str, Any], resumed: bool = False) -> None:
        self.total += 1
        if resumed:
            self.skipped += 1
        verdict = record['conjecture14']['verdict']
        self.conjecture14[verdict] = self.conjecture14.get(verdict, 0) + 1
        saito = record['saito']
        if saito['eq53'] == 'fail':
            self.eq53_fail += 1
        if saito['eq54'] == 'fail':
            self.eq54_fail += 1
        elif saito['eq54'] == 'not-applicable':
            self.eq54_not_applicable += 1

    @property
    def counterexamples(self) -> int:
        """Records where some elementary set fails condition (I) or both nu(d_w) and nu(d_w/2) vanish."""
        return self.conjecture14['fail'] + self.eq53_fail

    def to_dict(self) -> Dict[str, Any]:
        return {
            'total': self.total,
            'skipped': self.skipped,
            'conjecture14': dict(self.conjecture14),
            'eq53_fail': self.eq53_fail,
            'eq54_fail': self.eq54_fail,
            'eq54_not_applicable': self.eq54_not_applicable,
            'counterexamples': self.counterexamples,
        }
