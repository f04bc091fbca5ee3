"""
Process settings for Orlik Scan

Values come from the environment (a .env file is loaded by app.py before this
module is imported by the commands) and fall back to the defaults below.
"""
import os

# Largest n for which (C1)/(C2) subset enumeration is attempted
SUBSET_BOUND = int(os.getenv('ORLIK_SUBSET_BOUND', '20'))

# Default worker count for scans
DEFAULT_JOBS = int(os.getenv('ORLIK_JOBS', '1'))

# Default JSONL output path for scans
SCAN_OUTPUT = os.getenv('ORLIK_SCAN_OUTPUT', 'scan_results.jsonl')

LOG_LEVEL = os.getenv('ORLIK_LOG_LEVEL', 'WARNING').upper()


def subset_bound() -> int:
    """Return the subset-enumeration bound, re-reading the environment.

    Tests and long-running scans may change ``ORLIK_SUBSET_BOUND`` after
    import, so callers go through this function rather than the constant.
    """
    return int(os.getenv('ORLIK_SUBSET_BOUND', str(SUBSET_BOUND)))


def default_jobs() -> int:
    return int(os.getenv('ORLIK_JOBS', str(DEFAULT_JOBS)))


def scan_output() -> str:
    return os.getenv('ORLIK_SCAN_OUTPUT', SCAN_OUTPUT)
