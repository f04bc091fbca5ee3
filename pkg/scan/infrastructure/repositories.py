"""Repository implementations for the Scan context."""
import json
import logging
import os
from typing import Any, Dict, Iterator, List

LOGGER = logging.getLogger(__name__)


class ScanRecordRepository:
    """Append-only JSONL store of scan records, one JSON object per line.

    Records are keyed by their canonical weight-system string (``ws``). Key
    order inside a record is preserved as given, so writers control the
    on-disk field order.
    """

    def __init__(self, path: str):
        self.path = path

    def _read_lines(self) -> List[str]:
        if not os.path.exists(self.path):
            return []
        with open(self.path, 'r', encoding='utf-8') as f:
            return f.read().split('\n')

    def _ensure_directory(self) -> None:
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def repair(self) -> int:
        """Drop a truncated trailing line left by an interrupted run.

        Returns:
            int: Number of intact records kept.
        """
        self._ensure_directory()
        lines = self._read_lines()
        if not lines:
            return 0
        tail = lines[-1]
        if tail:
            try:
                json.loads(tail)
                lines.append('')
            except json.JSONDecodeError:
                LOGGER.warning("Dropping truncated record at end of %s", self.path)
                lines[-1] = ''
            with open(self.path, 'w', encoding='utf-8') as f:
                f.write('\n'.join(lines))
        return sum(1 for line in lines if line)

    def find_all(self) -> Iterator[Dict[str, Any]]:
        """Iterate over all complete records in file order."""
        for line in self._read_lines():
            if not line:
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError:
                LOGGER.warning("Skipping unreadable line in %s", self.path)

    def find_keys(self) -> List[str]:
        return [record['ws'] for record in self.find_all()]

    def truncate(self) -> None:
        """Start a fresh output file."""
        self._ensure_directory()
        with open(self.path, 'w', encoding='utf-8'):
            pass

    def save(self, record: Dict[str, Any]) -> Dict[str, Any]:
        """Append one record and flush it to disk.

        Args:
            record: JSON-serializable record with a ``ws`` key.

        Returns:
            Dict: The record as written.
        """
        with open(self.path, 'a', encoding='utf-8') as f:
            f.write(json.dumps(record, ensure_ascii=False) + '\n')
            f.flush()
        return record
