"""Frobenius-type power-sum expansions of Jack Q functions at alpha = 1/t.

The coefficient of ``p_mu`` in ``Q_{(k^s)}`` is a signed sum over chains
``() = mu^0, mu^1, ..., mu^s = mu`` with ``|mu^i| = i(k + (s-i)t)`` and
partitions ``nu^i`` exponentially contained in ``mu^i`` whose remainder
``mu^i - nu^i`` is exponentially contained in ``mu^{i-1}``. Each step
contributes ``(-2t)^{l(nu^i)} / z_{nu^i}`` times the multiset binomial
``C(m(mu^{i-1}), m(mu^i - nu^i))``.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import PartitionError
from .jack.filtration import nested_skew
from .jack.oracle import jack_Q
from .partitions import (
    Partition,
    exp_contains,
    exp_diff,
    multiset_binom,
    partitions_of,
    rect_filtration,
    z_lambda,
)
from .ratfield import RatFunc
from .symfun import SymFun, proportionality
from .vandermonde.action import parameter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GCoeffKey:
    rect: Partition
    mu: Partition
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rect", Partition(self.rect))
        object.__setattr__(self, "mu", Partition(self.mu))
        if not self.rect or not self.rect.is_rectangle():
            raise PartitionError(f"{self.rect} is not a nonzero rectangle")
        if self.mu.weight != self.rect.weight:
            raise PartitionError(f"|{self.mu}| != |{self.rect}|")
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")

    @property
    def k(self) -> int:
        return self.rect[0]

    @property
    def s(self) -> int:
        return len(self.rect)


@dataclass(frozen=True)
class PartitionChain:
    mus: Tuple[Partition, ...]
    nus: Tuple[Partition, ...]

    def weight(self, t: int) -> Fraction:
        """Product of the per-step factors, without the global prefactor."""
        value = Fraction(1)
        for i, nu in enumerate(self.nus, 1):
            rest = exp_diff(self.mus[i], nu)
            value *= Fraction((-2 * t) ** len(nu), z_lambda(nu))
            value *= multiset_binom(self.mus[i - 1], rest)
        return value


def chain_weights(k: int, s: int, t: int) -> Tuple[int, ...]:
    """|mu^i| for i = 0..s."""
    return tuple(i * (k + (s - i) * t) for i in range(s + 1))


def sub_multisets(lam: Partition) -> Iterator[Partition]:
    counts = sorted(Counter(lam).items(), reverse=True)
    for picks in itertools.product(*(range(m + 1) for _, m in counts)):
        yield Partition.from_parts(
            part for (part, _), take in zip(counts, picks) for _ in range(take)
        )


def _is_valid_chain(chain: PartitionChain, k: int, s: int, t: int) -> bool:
    weights = chain_weights(k, s, t)
    if chain.mus[0] or len(chain.mus) != s + 1 or len(chain.nus) != s:
        return False
    for i in range(1, s + 1):
        mu_i, nu_i = chain.mus[i], chain.nus[i - 1]
        if mu_i.weight != weights[i] or not exp_contains(mu_i, nu_i):
            return False
        if not exp_contains(chain.mus[i - 1], exp_diff(mu_i, nu_i)):
            return False
    return True


class _ChainTable:
    """Memoised chain sums for one (k, s, t); ``unit`` counts chains instead of weighing them."""

    def __init__(self, k: int, s: int, t: int, *, unit: bool = False) -> None:
        self.k, self.s, self.t = k, s, t
        self.weights = chain_weights(k, s, t)
        self.unit = unit
        self._suffix: Dict[Tuple[int, Partition], Fraction] = {}
        self._below: Dict[Tuple[int, Partition], Fraction] = {}

    def _step(self, nu: Partition) -> Fraction:
        if self.unit:
            return Fraction(1)
        return Fraction((-2 * self.t) ** len(nu), z_lambda(nu))

    def below(self, i: int, rest: Partition) -> Fraction:
        """Sum over mu^i of |mu^i| = w_i containing ``rest`` of binom * chain(i, mu^i)."""
        key = (i, rest)
        if key in self._below:
            return self._below[key]
        total = Fraction(0)
        gap = self.weights[i] - rest.weight
        if gap >= 0:
            for extra in partitions_of(gap):
                mu_i = rest.union(extra)
                factor = 1 if self.unit else multiset_binom(mu_i, rest)
                total += factor * self.chain(i, mu_i)
        self._below[key] = total
        return total

    def chain(self, i: int, mu_i: Partition) -> Fraction:
        if i == 0:
            return Fraction(1 if not mu_i else 0)
        key = (i, mu_i)
        if key in self._suffix:
            return self._suffix[key]
        total = Fraction(0)
        for nu in sub_multisets(mu_i):
            inner_sum = self.below(i - 1, exp_diff(mu_i, nu))
            if inner_sum:
                total += self._step(nu) * inner_sum
        self._suffix[key] = total
        return total


def _prefactor(k: int, s: int, t: int, mu: Partition) -> Fraction:
    sign = -1 if (t * s * (s - 1) // 2) % 2 else 1
    return Fraction(
        sign * math.factorial(t) ** s,
        math.factorial(s * t) * (-2) ** len(mu),
    )


@lru_cache(maxsize=64)
def rect_g_coefficients(k: int, s: int, t: int) -> Dict[Partition, Fraction]:
    """All nonzero g-coefficients of the rectangle (k^s) at integer parameter t."""
    if k < 1 or s < 1 or t < 1:
        raise ValueError(f"k, s, t must be positive, got {k}, {s}, {t}")
    table = _ChainTable(k, s, t)
    values: Dict[Partition, Fraction] = {}
    for mu in partitions_of(k * s):
        total = table.chain(s, mu)
        if total:
            values[mu] = _prefactor(k, s, t, mu) * total
    logger.debug("g-coefficients for (%s^%s), t=%s: %s nonzero", k, s, t, len(values))
    return values


def g_coeff(key: GCoeffKey) -> Fraction:
    return rect_g_coefficients(key.k, key.s, key.t).get(key.mu, Fraction(0))


def enumerate_chains(key: GCoeffKey) -> Iterator[PartitionChain]:
    """Depth-first enumeration from mu^s = mu down to mu^0 = ()."""
    k, s, t = key.k, key.s, key.t
    weights = chain_weights(k, s, t)
    counts = _ChainTable(k, s, t, unit=True)

    def descend(i: int, mus: List[Partition], nus: List[Partition]) -> Iterator[PartitionChain]:
        if i == 0:
            if not mus[0]:
                yield PartitionChain(tuple(mus), tuple(nus))
            return
        mu_i = mus[0]
        for nu in sub_multisets(mu_i):
            rest = exp_diff(mu_i, nu)
            if not counts.below(i - 1, rest):
                continue
            gap = weights[i - 1] - rest.weight
            for extra in partitions_of(gap):
                yield from descend(i - 1, [rest.union(extra)] + mus, [nu] + nus)

    yield from descend(s, [key.mu], [])


def brute_force_chains(key: GCoeffKey) -> List[PartitionChain]:
    """Filter every tuple of partitions of the chain weights; for cross-checking only."""
    k, s, t = key.k, key.s, key.t
    weights = chain_weights(k, s, t)
    middles = [partitions_of(w) for w in weights[1:s]]
    found: List[PartitionChain] = []
    for middle in itertools.product(*middles):
        mus = (Partition(),) + tuple(middle) + (key.mu,)
        for nus in itertools.product(*(sub_multisets(m) for m in mus[1:])):
            chain = PartitionChain(mus, tuple(nus))
            if _is_valid_chain(chain, k, s, t):
                found.append(chain)
    return found


def g_coeff_by_chains(key: GCoeffKey) -> Fraction:
    total = sum((chain.weight(key.t) for chain in enumerate_chains(key)), Fraction(0))
    return _prefactor(key.k, key.s, key.t, key.mu) * total


def rect_frobenius(k: int, s: int, t: int) -> SymFun:
    """sum_mu g_{(k^s), mu}(t) p_mu"""
    return SymFun.from_terms(dict(rect_g_coefficients(k, s, t)))


@dataclass(frozen=True)
class FrobeniusComparison:
    match: bool
    lhs: SymFun
    rhs: SymFun
    scalar: Optional[RatFunc] = None
    context: Dict[str, object] = field(default_factory=dict)

    def diff(self) -> SymFun:
        return self.lhs - self.rhs


def frobenius_rect_check(k: int, s: int, t: int) -> FrobeniusComparison:
    lhs = rect_frobenius(k, s, t)
    rhs = jack_Q(Partition([k] * s), parameter(t))
    match = lhs == rhs
    if not match:
        logger.warning("rectangular Frobenius formula differs from Q at k=%s s=%s t=%s", k, s, t)
    return FrobeniusComparison(match, lhs, rhs, context={"k": k, "s": s, "t": t})


def cor35_sides(t: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the two-row scalar identity at integer t >= 1.

    lhs = sum_{i=0..2} (-2t)^{2-i}/(2-i)! sum_{nu |- 1+t, (1^i) in nu}
          (-2t)^{l(nu)}/z_nu C(m(nu), m(1^i));
    rhs = (2t)!/(t!)^2 * 4t^2/(t+1) * (-1)^t.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    lhs = Fraction(0)
    for i in range(3):
        ones = Partition([1] * i)
        inner_sum = Fraction(0)
        for nu in partitions_of(1 + t):
            if exp_contains(nu, ones):
                inner_sum += Fraction((-2 * t) ** len(nu), z_lambda(nu)) * multiset_binom(nu, ones)
        lhs += Fraction((-2 * t) ** (2 - i), math.factorial(2 - i)) * inner_sum
    rhs = Fraction(
        math.factorial(2 * t) * 4 * t * t * (-1) ** t,
        math.factorial(t) ** 2 * (t + 1),
    )
    return lhs, rhs


def cor35_check(t: int) -> Dict[str, object]:
    lhs, rhs = cor35_sides(t)
    return {"t": t, "lhs": lhs, "rhs": rhs, "match": lhs == rhs}


def general_frobenius(lam: Partition, t: int) -> SymFun:
    """Nested skew of the rectangular expansions along the filtration of lam, at alpha = 1/t."""
    lam = Partition(lam)
    if not lam:
        raise PartitionError("general_frobenius needs a nonzero partition")
    factors = tuple(rect_frobenius(rect[0], len(rect), t) for rect in rect_filtration(lam))
    return nested_skew(factors, parameter(t))


def general_frobenius_check(lam: Partition, t: int) -> FrobeniusComparison:
    """Compare general_frobenius(lam, t) with Q_lam at 1/t; ``scalar`` is c' with Q = c' * lhs."""
    lam = Partition(lam)
    lhs = general_frobenius(lam, t)
    rhs = jack_Q(lam, parameter(t))
    scalar = proportionality(rhs, lhs) if not lhs.is_zero() else None
    match = scalar is not None and not scalar.is_zero()
    if not match:
        logger.warning("generalised Frobenius expansion of %s at t=%s is not proportional to Q", lam, t)
    return FrobeniusComparison(
        match, lhs, rhs, scalar=scalar, context={"lambda": str(lam), "t": t}
    )


__all__ = [
    "FrobeniusComparison",
    "GCoeffKey",
    "PartitionChain",
    "brute_force_chains",
    "chain_weights",
    "cor35_check",
    "cor35_sides",
    "enumerate_chains",
    "frobenius_rect_check",
    "g_coeff",
    "g_coeff_by_chains",
    "general_frobenius",
    "general_frobenius_check",
    "rect_frobenius",
    "rect_g_coefficients",
    "sub_multisets",
]
