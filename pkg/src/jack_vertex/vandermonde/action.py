"""Action of Delta on products of generalised complete functions, and the images X'_lam."""

from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..jack.oracle import jack_in_qbasis, jack_Q
from ..partitions import Partition, partitions_of
from ..ratfield import RatFunc
from ..symfun import SymFun, proportionality, q_lambda
from .laurent import delta_coefficient, dyson_constant, expand_delta_above

logger = logging.getLogger(__name__)


def parameter(t: int) -> RatFunc:
    """The Jack parameter value 1/t at which the integer-t identities live."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return RatFunc.constant(Fraction(1, t))


def delta_q_terms(exps: Sequence[int], t: int) -> Dict[Partition, int]:
    """Integer coefficients of q_mu in Delta . q_{exps_1} ... q_{exps_s}; negative indices vanish."""
    s = len(exps)
    if s == 0:
        return {Partition(): 1}
    collected: Dict[Partition, int] = defaultdict(int)
    floor = tuple(-e for e in exps)
    for beta, coeff in expand_delta_above(s, t, floor).terms.items():
        shifted = [e + b for e, b in zip(exps, beta)]
        collected[Partition.from_parts(shifted)] += coeff
    return {key: value for key, value in collected.items() if value}


def apply_delta_q(exps: Sequence[int], t: int) -> SymFun:
    if any(e < 0 for e in exps):
        raise ValueError(f"indices must be nonnegative, got {tuple(exps)}")
    alpha = parameter(t)
    result = SymFun()
    for mu, coeff in delta_q_terms(exps, t).items():
        result = result + q_lambda(mu, alpha).scale(coeff)
    return result


def x_prime_image(lam: Partition, t: int) -> SymFun:
    """Delta-action on q_lam normalised by c_{l(lam)}(t); the signs of c and of the action cancel."""
    lam = Partition(lam)
    if not lam:
        return SymFun.constant(1)
    return apply_delta_q(tuple(lam), t) / dyson_constant(len(lam), t)


def measured_scalar(lam: Partition, t: int) -> Optional[Fraction]:
    """c with X'_lam = c * Q_lam at parameter 1/t, or None when not proportional."""
    ratio = proportionality(x_prime_image(lam, t), jack_Q(Partition(lam), parameter(t)))
    return None if ratio is None else ratio.constant_value()


def printed_near_rectangle_scalar(s: int, t: int) -> Fraction:
    """-s / (2 (t^{-2} + s)), the scalar as commonly quoted for ((k+1)^s, k)."""
    return Fraction(-s) / (2 * (Fraction(1, t * t) + s))


def x_prime_rank(n: int, t: int) -> int:
    """Rank of {X'_lam : lam |- n} in the power-sum coordinates."""
    basis = partitions_of(n)
    rows = []
    for lam in basis:
        image = x_prime_image(lam, t)
        row = []
        for mu in basis:
            value = image.coefficient(mu).constant_value()
            row.append(QQ(value.numerator, value.denominator))
        rows.append(row)
    return DomainMatrix(rows, (len(basis), len(basis)), QQ).rank()


def _multiplicity_factorial(mu: Partition) -> int:
    value = 1
    for mult in Counter(mu).values():
        value *= math.factorial(mult)
    return value


def qbasis_delta_coefficient(beta: Sequence[int], s: int, t: int) -> Fraction:
    """Coefficient of D^beta in Delta read from the q-expansion of Q_{(k^s)} at 1/t."""
    beta = tuple(sorted((int(b) for b in beta), reverse=True))
    if len(beta) != s or sum(beta) != 0:
        raise ValueError(f"exponent vector {beta} must have {s} entries summing to zero")
    k = max(1, 1 - beta[-1])
    mu = Partition(k + b for b in beta)
    coords = jack_in_qbasis(Partition([k] * s), parameter(t))
    a_mu = coords.get(mu)
    if a_mu is None:
        return Fraction(0)
    return (
        Fraction(_multiplicity_factorial(mu) * dyson_constant(s, t), math.factorial(s))
        * a_mu.constant_value()
    )


def paired_exponent(lam: Partition, mu: Partition, s: int) -> Tuple[int, ...]:
    """(-lam_1, ..., -lam_i, 0, ..., 0, mu_j, ..., mu_1)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"|{lam}| != |{mu}|")
    if len(lam) + len(mu) > s:
        raise ValueError(f"l({lam}) + l({mu}) exceeds s={s}")
    return tuple(-p for p in lam) + (0,) * (s - len(lam) - len(mu)) + tuple(reversed(mu))


def paired_coefficient(lam: Partition, mu: Partition, s: int, t: int) -> Tuple[int, Fraction]:
    """(direct, q-route) values of the coefficient of D_1^{-lam_1}...D_s^{mu_1}."""
    beta = paired_exponent(lam, mu, s)
    return delta_coefficient(beta, s, t), qbasis_delta_coefficient(beta, s, t)


__all__ = [
    "apply_delta_q",
    "delta_q_terms",
    "qbasis_delta_coefficient",
    "measured_scalar",
    "paired_coefficient",
    "paired_exponent",
    "parameter",
    "printed_near_rectangle_scalar",
    "x_prime_image",
    "x_prime_rank",
]
