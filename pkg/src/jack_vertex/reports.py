"""Persistent per-suite report store with deterministic ordering."""

from __future__ import annotations

import json
import logging
from collections import OrderedDict
from pathlib import Path
from threading import RLock
from typing import Any, Dict, Iterable, List, Optional

from .cache import atomic_write_text
from .serialization import dumps

logger = logging.getLogger(__name__)

Record = Dict[str, Any]


class ReportStore:
    """Records keyed by case; the latest record for a key wins and the file lists keys in order."""

    def __init__(self, path: Path | str, *, suite: str, fsync: bool = False) -> None:
        self._path = Path(path)
        self._suite = suite
        self._fsync = fsync
        self._lock = RLock()
        self._records: "OrderedDict[str, Record]" = OrderedDict()
        self._dirty = False
        self._load_from_disk()

    @classmethod
    def for_suite(cls, cache_dir: Path, suite: str, *, fsync: bool = False) -> "ReportStore":
        return cls(Path(cache_dir) / "reports" / f"{suite}.json", suite=suite, fsync=fsync)

    @property
    def path(self) -> Path:
        return self._path

    def __contains__(self, key: object) -> bool:
        with self._lock:
            return key in self._records

    def __len__(self) -> int:
        with self._lock:
            return len(self._records)

    def keys(self) -> List[str]:
        with self._lock:
            return sorted(self._records)

    def get(self, key: str) -> Optional[Record]:
        with self._lock:
            return self._records.get(key)

    def add(self, key: str, record: Record) -> None:
        with self._lock:
            self._records[key] = {**record, "key": key}
            self._dirty = True

    def extend(self, items: Iterable[tuple[str, Record]]) -> int:
        added = 0
        for key, record in items:
            self.add(key, record)
            added += 1
        return added

    def records(self) -> List[Record]:
        with self._lock:
            return [self._records[key] for key in sorted(self._records)]

    def with_status(self, status: str) -> List[Record]:
        return [r for r in self.records() if r.get("status") == status]

    def flush(self) -> None:
        with self._lock:
            if not self._dirty:
                return
            payload = {"suite": self._suite, "records": self.records()}
            atomic_write_text(self._path, dumps(payload), fsync=self._fsync)
            self._dirty = False
        logger.info("wrote %s record(s) for suite %s to %s", len(self), self._suite, self._path)

    def _load_from_disk(self) -> None:
        if not self._path.exists():
            return
        try:
            raw = self._path.read_text(encoding="utf-8")
            data = json.loads(raw) if raw else {}
        except (OSError, json.JSONDecodeError) as exc:
            logger.warning("failed to load report file %s: %s", self._path, exc)
            return
        records = data.get("records") if isinstance(data, dict) else None
        if not isinstance(records, list):
            logger.warning("report file %s has invalid format; ignoring", self._path)
            return
        with self._lock:
            for record in records:
                if isinstance(record, dict) and isinstance(record.get("key"), str):
                    self._records[record["key"]] = record


__all__ = ["Record", "ReportStore"]
