"""Gram-Schmidt oracle for Jack symmetric functions.

For each weight the q-basis is orthogonalised along a total order that
refines dominance (dominant partitions first). Because ``Q_lam`` lies in
``q_lam + span{q_mu : mu > lam}`` and is orthogonal to every other Jack
function, the result does not depend on which refinement is used. P and J
follow from ``P = Q / <Q, Q>`` and ``J = h^*(lam) Q = h_*(lam) P``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from threading import Lock
from typing import Dict, List, Mapping, Optional, Tuple

from ..partitions import (
    Partition,
    dominance_linear_extension,
    lower_norm,
    partitions_of,
    upper_norm,
)
from ..ratfield import ALPHA, RatFunc, rf_combine
from ..symfun import SymFun, inner, monomial_function, q_lambda

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JackTriple:
    """P, Q and J for one partition together with their hook normalisations."""

    lam: Partition
    P: SymFun
    Q: SymFun
    J: SymFun
    lower_norm: RatFunc
    upper_norm: RatFunc

    def normalization(self, norm: str) -> SymFun:
        if norm == "P":
            return self.P
        if norm == "Q":
            return self.Q
        if norm == "J":
            return self.J
        raise ValueError(f"unknown normalization {norm!r}")


def _specialized(value: RatFunc, alpha: RatFunc) -> RatFunc:
    if alpha == ALPHA:
        return value
    return RatFunc.constant(value.evaluate(alpha.constant_value()))


def gram_schmidt(
    n: int, alpha: RatFunc = ALPHA, variant: str = "revlex"
) -> Dict[Partition, JackTriple]:
    """Orthogonalise {q_lam : lam |- n} along the given dominance refinement.

    Projections are taken against the integral J of each earlier partition,
    whose power-sum coefficients are polynomials, and summed over one common
    denominator per partition.
    """
    order = dominance_linear_extension(n, variant)
    done: List[Tuple[SymFun, RatFunc]] = []
    triples: Dict[Partition, JackTriple] = {}
    for lam in order:
        q = q_lambda(lam, alpha)
        weights: List[RatFunc] = []
        rows: List[Mapping[Partition, RatFunc]] = []
        for j_mu, norm_mu in done:
            c = inner(q, j_mu, alpha)
            if not c.is_zero():
                weights.append(c / norm_mu)
                rows.append(j_mu.terms)
        current = q - SymFun.from_terms(rf_combine(weights, rows))
        lower = _specialized(lower_norm(lam), alpha)
        upper = _specialized(upper_norm(lam), alpha)
        j_lam = current.scale(upper)
        done.append((j_lam, inner(j_lam, j_lam, alpha)))
        triples[lam] = JackTriple(
            lam=lam,
            P=current / inner(current, current, alpha),
            Q=current,
            J=j_lam,
            lower_norm=lower,
            upper_norm=upper,
        )
    logger.debug("gram-schmidt finished for weight %s (%s partitions)", n, len(order))
    return triples


class JackCache:
    """Memo of Jack triples keyed by (partition, parameter); safe for concurrent use.

    A whole weight is computed at once; inserting an already present key is a
    no-op since recomputation always yields an equal value.
    """

    def __init__(self) -> None:
        self._lock = Lock()
        self._entries: Dict[Tuple[Partition, RatFunc], JackTriple] = {}

    def get(self, lam: Partition, alpha: RatFunc = ALPHA) -> JackTriple:
        key = (Partition(lam), alpha)
        with self._lock:
            cached = self._entries.get(key)
        if cached is not None:
            return cached
        computed = gram_schmidt(key[0].weight, alpha)
        with self._lock:
            for mu, triple in computed.items():
                self._entries.setdefault((mu, alpha), triple)
            return self._entries[key]

    def peek(self, lam: Partition, alpha: RatFunc = ALPHA) -> Optional[JackTriple]:
        with self._lock:
            return self._entries.get((Partition(lam), alpha))

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


_DEFAULT_CACHE = JackCache()


def default_cache() -> JackCache:
    return _DEFAULT_CACHE


def jack_triple(lam: Partition, alpha: RatFunc = ALPHA) -> JackTriple:
    return _DEFAULT_CACHE.get(lam, alpha)


def jack_P(lam: Partition, alpha: RatFunc = ALPHA) -> SymFun:
    return jack_triple(lam, alpha).P


def jack_Q(lam: Partition, alpha: RatFunc = ALPHA) -> SymFun:
    return jack_triple(lam, alpha).Q


def jack_J(lam: Partition, alpha: RatFunc = ALPHA) -> SymFun:
    return jack_triple(lam, alpha).J


@lru_cache(maxsize=1024)
def _qbasis_items(lam: Partition, alpha: RatFunc) -> Tuple[Tuple[Partition, RatFunc], ...]:
    # m and q are dual bases, so the q_mu coefficient of Q_lam is <Q_lam, m_mu>
    q_lam = jack_Q(lam, alpha)
    items = []
    for mu in partitions_of(lam.weight):
        value = inner(q_lam, monomial_function(mu), alpha)
        if not value.is_zero():
            items.append((mu, value))
    return tuple(items)


def jack_in_qbasis(lam: Partition, alpha: RatFunc = ALPHA) -> Dict[Partition, RatFunc]:
    """Coefficients a_mu with Q_lam = sum_mu a_mu q_mu."""
    return dict(_qbasis_items(Partition(lam), alpha))


__all__ = [
    "JackCache",
    "JackTriple",
    "default_cache",
    "gram_schmidt",
    "jack_J",
    "jack_P",
    "jack_Q",
    "jack_in_qbasis",
    "jack_triple",
]
