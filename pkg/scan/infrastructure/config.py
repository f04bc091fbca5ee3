"""
Scan configuration sources

A scan config is assembled from defaults, the environment, an optional flat
key=value file and finally the command-line flags, each layer overriding the
previous one.
"""
import logging
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values

from scan.domain.entities import ScanConfig
from shared.infrastructure.settings import default_jobs, scan_output

LOGGER = logging.getLogger(__name__)

INT_KEYS = ('n', 'd_max', 'mu_max', 'a_max', 'jobs')
BOOL_KEYS = ('resume', 'allow_exhaustive_n4')
STR_KEYS = ('mode', 'family', 'out')
KNOWN_KEYS = INT_KEYS + BOOL_KEYS + STR_KEYS

_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off', '')


def normalize_key(key: str) -> str:
    """'--d-max' and 'd-max' both become 'd_max'."""
    return key.strip().lstrip('-').replace('-', '_').lower()


def _coerce(key: str, value: Any) -> Any:
    if key in INT_KEYS:
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ValueError(f"invalid input '{value}': {key} must be an integer")
    if key in BOOL_KEYS:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in _TRUE:
            return True
        if text in _FALSE:
            return False
        raise ValueError(f"invalid input '{value}': {key} must be a boolean")
    return str(value)


def load_config_file(path: str) -> Dict[str, Any]:
    """Read a flat key=value scan config file.

    Args:
        path: Path to the file.

    Returns:
        Dict: Normalized keys mapped to typed values.

    Raises:
        ValueError: If the file holds an unknown key or an ill-typed value.
        OSError: If the file cannot be read.
    """
    with open(path, 'r', encoding='utf-8') as stream:
        raw = dotenv_values(stream=stream)
    values = {}
    for key, value in raw.items():
        name = normalize_key(key)
        if name not in KNOWN_KEYS:
            raise ValueError(f"invalid input '{key}': unknown scan config key in {path}")
        values[name] = _coerce(name, value)
    LOGGER.debug("Loaded scan config %s: %s", path, values)
    return values


def build_scan_config(
    file_path: Optional[str] = None,
    flags: Optional[Mapping[str, Any]] = None
) -> ScanConfig:
    """Merge defaults < environment < config file < flags into a validated config.

    Flags whose value is None were not given and do not override anything.
    """
    values: Dict[str, Any] = ScanConfig().to_dict()
    values.update({'jobs': default_jobs(), 'out': scan_output()})
    if file_path:
        values.update(load_config_file(file_path))
    for key, value in (flags or {}).items():
        if value is not None:
            values[normalize_key(key)] = _coerce(normalize_key(key), value)
    return ScanConfig(**values).validate()
