"""Truncated expansion of the kernel H_1(Z_s, W_t) at Jack parameter 1."""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Tuple

from ..config import current_settings, enforce_bound
from ..partitions import Partition, dominates
from .laurent import expand_delta

logger = logging.getLogger(__name__)

KernelKey = Tuple[Partition, Partition]


def _matrices(cells: int, budget: int) -> Iterator[Tuple[int, ...]]:
    if cells == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _matrices(cells - 1, budget - first):
            yield (first,) + rest


def _geometric_counts(s: int, t: int, cutoff: int) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]:
    """Coefficient of z^x w^{-y} in prod_{i,j} (1 - z_i/w_j)^{-1}, total degree <= cutoff."""
    counts: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = defaultdict(int)
    for flat in _matrices(s * t, cutoff):
        rows = tuple(sum(flat[i * t : (i + 1) * t]) for i in range(s))
        cols = tuple(sum(flat[i * t + j] for i in range(s)) for j in range(t))
        counts[(rows, cols)] += 1
    return counts


def _is_partition_vector(values: Tuple[int, ...]) -> bool:
    return all(values[i] >= values[i + 1] for i in range(len(values) - 1)) and (
        not values or values[-1] >= 0
    )


def expand_H1(
    s: int,
    t: int,
    cutoff: int,
    *,
    max_st: Optional[int] = None,
    max_cutoff: Optional[int] = None,
) -> Dict[KernelKey, int]:
    """Nonzero coefficients of z^lam / w^mu with l(lam) = s and l(mu) <= t, |mu| <= cutoff."""
    if s < 1 or t < 1 or cutoff < 0:
        raise ValueError(f"need s, t >= 1 and cutoff >= 0, got {s}, {t}, {cutoff}")
    settings = current_settings()
    enforce_bound("s*t", s * t, settings.max_delta_st if max_st is None else max_st)
    enforce_bound(
        "cutoff", cutoff, settings.max_kernel_cutoff if max_cutoff is None else max_cutoff
    )
    delta = expand_delta(s, 1, max_st=max_st)
    result: Dict[KernelKey, int] = defaultdict(int)
    for (rows, cols), count in _geometric_counts(s, t, cutoff).items():
        if not _is_partition_vector(cols):
            continue
        for beta, coeff in delta.terms.items():
            z = tuple(r + b for r, b in zip(rows, beta))
            if z[-1] <= 0 or not _is_partition_vector(z):
                continue
            result[(Partition(z), Partition(cols))] += coeff * count
    cleaned = {key: value for key, value in result.items() if value}
    logger.debug("H_1(s=%s, t=%s, cutoff=%s) has %s nonzero coefficients", s, t, cutoff, len(cleaned))
    return cleaned


def kernel_violations(coefficients: Dict[KernelKey, int]) -> List[dict]:
    """Entries that are not positive or whose exponents break dominance."""
    problems: List[dict] = []
    for (lam, mu), value in sorted(coefficients.items()):
        if value <= 0 or not dominates(lam, mu):
            problems.append({"lambda": str(lam), "mu": str(mu), "coefficient": value})
    return problems


__all__ = ["expand_H1", "kernel_violations"]
