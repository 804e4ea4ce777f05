"""Jack functions rebuilt from the rectangular filtration by nested skewing."""

from __future__ import annotations

import logging
from typing import Tuple

from ..errors import IntegrityError, PartitionError
from ..partitions import Partition, rect_filtration
from ..ratfield import ALPHA, ONE, RatFunc
from ..symfun import SymFun, proportionality, q_n, skew
from .oracle import jack_J, jack_Q, jack_triple

logger = logging.getLogger(__name__)


def nested_skew(factors: Tuple[SymFun, ...], alpha: RatFunc = ALPHA) -> SymFun:
    """(...((f_s^* f_{s-1})^* f_{s-2})^* ... )^* f_1 for factors given as (f_1, ..., f_s)."""
    result = factors[-1]
    for factor in reversed(factors[:-1]):
        result = skew(result, factor, alpha)
    return result


def jack_Q_filtration(lam: Partition, alpha: RatFunc = ALPHA) -> Tuple[SymFun, RatFunc]:
    """Return (raw, c') with raw built from the filtration rectangles and Q_lam = c' * raw.

    The nested skew is linear in each factor, so it runs on the integral J of
    every rectangle and the Q normalisations are applied once at the end.
    """
    lam = Partition(lam)
    rects = rect_filtration(lam)
    raw_j = nested_skew(tuple(jack_J(rect, alpha) for rect in rects), alpha)
    if raw_j.is_zero():
        raise IntegrityError(f"filtration construction of {lam} vanished", case={"lambda": str(lam)})
    scalar = proportionality(jack_J(lam, alpha), raw_j)
    if scalar is None or scalar.is_zero():
        raise IntegrityError(
            f"filtration construction of {lam} is not proportional to Q_{lam}",
            case={"lambda": str(lam), "filtration": [str(r) for r in rects]},
        )
    rescale = ONE
    for rect in rects:
        rescale = rescale * jack_triple(rect, alpha).upper_norm
    upper = jack_triple(lam, alpha).upper_norm
    raw = raw_j / rescale
    c_prime = scalar * rescale / upper
    logger.debug("filtration of %s gives c'=%s", lam, c_prime)
    return raw, c_prime


def rect_removal_check(k: int, s: int, n: int, alpha: RatFunc = ALPHA) -> RatFunc:
    """Scalar d with q_n^* Q_{((k+1)^s)} = d * Q_{((k+1)^{s-1}, k+1-n)}."""
    if s < 1 or k < 0 or not 0 <= n <= k + 1:
        raise PartitionError(f"need s >= 1 and 0 <= n <= k+1, got k={k}, s={s}, n={n}")
    rect = Partition([k + 1] * s)
    target = Partition([k + 1] * (s - 1) + [k + 1 - n])
    image = skew(q_n(n, alpha), jack_Q(rect, alpha), alpha)
    scalar = proportionality(image, jack_Q(target, alpha))
    if scalar is None or scalar.is_zero():
        raise IntegrityError(
            f"q_{n}^* Q_{rect} is not a nonzero multiple of Q_{target}",
            case={"k": k, "s": s, "n": n},
        )
    return scalar


__all__ = ["jack_Q_filtration", "nested_skew", "rect_removal_check"]
