"""On-disk cache of Jack expansions, one JSON document per partition and normalisation."""

from __future__ import annotations

import logging
import os
import random
import tempfile
from pathlib import Path
from threading import RLock
from typing import List, Optional, Tuple

from .jack.oracle import gram_schmidt, jack_triple
from .partitions import Partition
from .serialization import deserialize_symfun, dumps, load_json, serialize_symfun
from .symfun import SymFun

logger = logging.getLogger(__name__)

NORMS = ("P", "Q", "J")


def atomic_write_text(path: Path, text: str, *, fsync: bool = False) -> None:
    """Write ``text`` to a sibling temp file and rename it over ``path``."""
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_fd: Optional[int] = None
    temp_path: Optional[str] = None
    try:
        temp_fd, temp_path = tempfile.mkstemp(prefix=f".{path.name}.", dir=str(path.parent))
        with os.fdopen(temp_fd, "w", encoding="utf-8") as tmp:
            temp_fd = None  # ownership transferred to file object
            tmp.write(text)
            tmp.flush()
            if fsync:
                os.fsync(tmp.fileno())
        os.replace(temp_path, path)
        temp_path = None
        if fsync:
            try:
                dir_fd = os.open(path.parent, os.O_RDONLY)
            except OSError:  # pragma: no cover - platform dependent
                dir_fd = None
            if dir_fd is not None:
                try:
                    os.fsync(dir_fd)
                finally:
                    os.close(dir_fd)
    except OSError as exc:
        logger.error("failed to persist %s: %s", path, exc)
        raise
    finally:
        if temp_fd is not None:
            try:
                os.close(temp_fd)
            except OSError:
                pass
        if temp_path is not None:
            try:
                os.unlink(temp_path)
            except OSError:
                pass


class JackExpansionCache:
    """Power-sum expansions of P, Q and J stored under ``<root>/jack/<norm>/<parts>.json``."""

    def __init__(self, root: Path | str, *, fsync: bool = False) -> None:
        self._root = Path(root)
        self._fsync = fsync
        self._lock = RLock()

    @property
    def root(self) -> Path:
        return self._root

    def path_for(self, lam: Partition, norm: str) -> Path:
        if norm not in NORMS:
            raise ValueError(f"unknown normalization {norm!r}")
        name = "_".join(str(p) for p in Partition(lam)) or "empty"
        return self._root / "jack" / norm / f"{name}.json"

    def get(self, lam: Partition, norm: str) -> Optional[SymFun]:
        path = self.path_for(lam, norm)
        with self._lock:
            try:
                data = load_json(path)
            except (OSError, ValueError) as exc:
                logger.warning("failed to load cache file %s: %s", path, exc)
                return None
        if not isinstance(data, dict) or "expansion" not in data:
            if data is not None:
                logger.warning("cache file %s has invalid format; ignoring", path)
            return None
        try:
            return deserialize_symfun(data["expansion"])
        except (KeyError, TypeError, ValueError) as exc:
            logger.warning("cache file %s could not be decoded: %s", path, exc)
            return None

    def put(self, lam: Partition, norm: str, expansion: SymFun) -> Path:
        lam = Partition(lam)
        path = self.path_for(lam, norm)
        payload = {
            "lambda": list(lam),
            "norm": norm,
            "expansion": serialize_symfun(expansion, "p"),
        }
        with self._lock:
            atomic_write_text(path, dumps(payload), fsync=self._fsync)
        logger.info("cached %s_%s at %s", norm, lam, path)
        return path

    def fetch(self, lam: Partition, norm: str) -> SymFun:
        """Return the cached expansion, computing and storing it on a miss."""
        cached = self.get(lam, norm)
        if cached is not None:
            return cached
        fresh = jack_triple(Partition(lam)).normalization(norm)
        self.put(lam, norm, fresh)
        return fresh

    def entries(self) -> List[Tuple[Partition, str]]:
        found: List[Tuple[Partition, str]] = []
        for norm in NORMS:
            folder = self._root / "jack" / norm
            if not folder.is_dir():
                continue
            for path in sorted(folder.glob("*.json")):
                stem = path.stem
                parts = [] if stem == "empty" else stem.split("_")
                try:
                    found.append((Partition(int(p) for p in parts), norm))
                except ValueError:
                    logger.warning("unexpected cache file name %s", path)
        return found

    def spot_check(self, rng: Optional[random.Random] = None) -> Optional[bool]:
        """Compare one random cached entry with a fresh Gram-Schmidt run; None if empty."""
        entries = self.entries()
        if not entries:
            return None
        lam, norm = (rng or random.Random()).choice(entries)
        cached = self.get(lam, norm)
        fresh = gram_schmidt(lam.weight)[lam].normalization(norm)
        ok = cached == fresh
        if not ok:
            logger.warning("cached %s_%s differs from a fresh computation", norm, lam)
        return ok


__all__ = ["JackExpansionCache", "NORMS", "atomic_write_text"]
