"""Laurent expansion of the even Vandermonde power prod_{i != j} (1 - D_i/D_j)^t."""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..config import current_settings, enforce_bound

logger = logging.getLogger(__name__)

ExponentVector = Tuple[int, ...]


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse map exponent vector -> integer; every key sums to zero."""

    arity: int
    terms: Mapping[ExponentVector, int] = field(default_factory=dict)

    def coefficient(self, beta: Sequence[int]) -> int:
        return self.terms.get(tuple(beta), 0)

    def constant_term(self) -> int:
        return self.coefficient((0,) * self.arity)

    def __len__(self) -> int:
        return len(self.terms)


def _pair_factor(t: int) -> Dict[int, int]:
    """(1 - x)^t (1 - 1/x)^t = sum_k (-1)^k C(2t, t+k) x^k."""
    return {k: (-1) ** (k % 2) * math.comb(2 * t, t + k) for k in range(-t, t + 1)}


def _check_arguments(s: int, t: int, max_st: Optional[int]) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"s and t must be positive, got s={s}, t={t}")
    bound = current_settings().max_delta_st if max_st is None else max_st
    enforce_bound("s*t", s * t, bound)


@lru_cache(maxsize=64)
def _expand(s: int, t: int) -> LaurentPoly:
    current: Dict[ExponentVector, int] = {(0,) * s: 1}
    factor = _pair_factor(t)
    for i in range(s):
        for j in range(i + 1, s):
            nxt: Dict[ExponentVector, int] = defaultdict(int)
            for exps, coeff in current.items():
                for k, c in factor.items():
                    shifted = list(exps)
                    shifted[i] += k
                    shifted[j] -= k
                    nxt[tuple(shifted)] += coeff * c
            current = {key: value for key, value in nxt.items() if value}
    logger.debug("expanded Delta_%s^%s with %s terms", s, t, len(current))
    return LaurentPoly(s, current)


@lru_cache(maxsize=256)
def _expand_above(s: int, t: int, floor: ExponentVector) -> LaurentPoly:
    # a partial term is dropped once the pairs still to come cannot lift it to floor
    remaining = [s - 1] * s
    current: Dict[ExponentVector, int] = {(0,) * s: 1}
    factor = _pair_factor(t)
    for i in range(s):
        for j in range(i + 1, s):
            remaining[i] -= 1
            remaining[j] -= 1
            reach_i, reach_j = floor[i] - t * remaining[i], floor[j] - t * remaining[j]
            nxt: Dict[ExponentVector, int] = defaultdict(int)
            for exps, coeff in current.items():
                for k, c in factor.items():
                    if exps[i] + k < reach_i or exps[j] - k < reach_j:
                        continue
                    shifted = list(exps)
                    shifted[i] += k
                    shifted[j] -= k
                    nxt[tuple(shifted)] += coeff * c
            current = {key: value for key, value in nxt.items() if value}
    logger.debug("expanded Delta_%s^%s above %s with %s terms", s, t, floor, len(current))
    return LaurentPoly(s, current)


def expand_delta_above(
    s: int, t: int, floor: Sequence[int], *, max_st: Optional[int] = None
) -> LaurentPoly:
    """The terms of expand_delta(s, t) whose exponents satisfy beta_i >= floor[i]."""
    _check_arguments(s, t, max_st)
    floor = tuple(int(f) for f in floor)
    if len(floor) != s:
        raise ValueError(f"floor {floor} must have {s} entries")
    return _expand_above(s, t, floor)


def expand_delta(s: int, t: int, *, max_st: Optional[int] = None) -> LaurentPoly:
    _check_arguments(s, t, max_st)
    return _expand(s, t)


def delta_coefficient(
    beta: Sequence[int], s: int, t: int, *, max_st: Optional[int] = None
) -> int:
    beta = tuple(int(b) for b in beta)
    if len(beta) != s:
        raise ValueError(f"exponent vector {beta} must have {s} entries")
    if sum(beta) != 0:
        raise ValueError(f"exponent vector {beta} must sum to zero")
    return expand_delta(s, t, max_st=max_st).coefficient(beta)


def dyson_constant(s: int, t: int) -> int:
    """(st)! / (t!)^s"""
    return math.factorial(s * t) // math.factorial(t) ** s


CLOSED_FORM_NAMES = ("general_i", "two_two", "one_one_two")


def prop39_exponent(s: int, which: str, i: int = 1) -> ExponentVector:
    """Exponent vector of the monomial each closed form describes."""
    if which == "general_i":
        if i < 1 or 2 * i > s:
            raise ValueError(f"general_i needs 1 <= i and 2i <= s, got i={i}, s={s}")
        return (-1,) * i + (0,) * (s - 2 * i) + (1,) * i
    if which == "two_two":
        if s < 2:
            raise ValueError("two_two needs s >= 2")
        return (-2,) + (0,) * (s - 2) + (2,)
    if which == "one_one_two":
        if s < 3:
            raise ValueError("one_one_two needs s >= 3")
        return (-1, -1) + (0,) * (s - 3) + (2,)
    raise ValueError(f"unknown closed form {which!r}")


def prop39_values(
    s: int, t: int, which: str, i: int = 1, *, reading: str = "resolved"
) -> Fraction:
    """Closed-form coefficient of the monomial named by ``which``.

    ``reading="printed"`` evaluates the one_one_two formula with the extra
    factor (2+(s-1)t)/(3+(2s-3)t) exactly as it is usually quoted; the
    resolved reading drops it and agrees with the direct expansion.
    """
    prop39_exponent(s, which, i)
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    base = Fraction(dyson_constant(s, t))
    if which == "general_i":
        value = base * math.factorial(i) * (-t) ** i
        for j in range(1, i + 1):
            value /= 1 + (s - j) * t
        return value
    a = 1 + (s - 1) * t
    b = 1 + (s - 2) * t
    if which == "two_two":
        return base * Fraction(2 * t * t - a * b * t, a * b * (2 + (s - 1) * t))
    if reading == "printed":
        return base * Fraction(
            2 * (2 + (s - 1) * t) * t * t, a * b * (3 + (2 * s - 3) * t)
        )
    if reading != "resolved":
        raise ValueError(f"unknown reading {reading!r}")
    return base * Fraction(2 * t * t, a * b)


__all__ = [
    "ExponentVector",
    "LaurentPoly",
    "CLOSED_FORM_NAMES",
    "delta_coefficient",
    "dyson_constant",
    "expand_delta",
    "expand_delta_above",
    "prop39_exponent",
    "prop39_values",
]
