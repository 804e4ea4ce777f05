"""Littlewood-Richardson coefficients <J_mu J_nu, J_lam>: oracle and closed forms."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import PartitionError
from ..jack.oracle import jack_J
from ..partitions import (
    Partition,
    based_split,
    boxes,
    complement,
    conjugate,
    contains,
    dominates,
    hook_product,
    is_horizontal_strip,
    lower_norm,
    partitions_of,
    upper_norm,
)
from ..ratfield import ALPHA, ONE, ZERO, RatFunc, poly_is_nonneg_int
from ..symfun import SymFun, inner, q_lambda, q_n

logger = logging.getLogger(__name__)

ROUTES = ("oracle", "rect_closed", "marked_closed")


@dataclass(frozen=True)
class LRReport:
    """Outcome of one (mu, nu, lam) evaluation."""

    mu: Partition
    nu: Partition
    lam: Partition
    value: RatFunc
    is_polynomial: bool
    is_nonneg_int: bool
    route: str = "oracle"
    status: str = "ok"
    corner_omega: Optional[Partition] = None
    expected: Optional[RatFunc] = None

    @property
    def key(self) -> str:
        return f"{self.mu}|{self.nu}|{self.lam}|{self.route}"


def make_report(
    mu: Partition,
    nu: Partition,
    lam: Partition,
    value: RatFunc,
    route: str = "oracle",
    **extra: object,
) -> LRReport:
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    polynomial = value.is_polynomial()
    return LRReport(
        mu=Partition(mu),
        nu=Partition(nu),
        lam=Partition(lam),
        value=value,
        is_polynomial=polynomial,
        is_nonneg_int=polynomial and poly_is_nonneg_int(value.as_poly()),
        route=route,
        **extra,  # type: ignore[arg-type]
    )


def lr_oracle(
    mu: Partition, nu: Partition, lam: Partition, alpha: RatFunc = ALPHA
) -> RatFunc:
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if mu.weight + nu.weight != lam.weight:
        return ZERO
    return inner(jack_J(mu, alpha) * jack_J(nu, alpha), jack_J(lam, alpha), alpha)


def _rectangle_sides(rect: Partition) -> Tuple[int, int]:
    if not rect.is_rectangle():
        raise PartitionError(f"{rect} is not rectangular")
    return (rect[0] if rect else 0), len(rect)


def rect_lr(rect: Partition, nu: Partition) -> Tuple[Partition, RatFunc]:
    """(mu, value) where mu is the only partition with <J_mu J_nu, J_rect> != 0."""
    rect, nu = Partition(rect), Partition(nu)
    r, s = _rectangle_sides(rect)
    mu = complement(rect, nu)
    mu_conj = conjugate(mu)
    h1 = ONE
    for box in sorted(boxes(mu)):
        h1 = h1 * RatFunc.linear(r - box.col + 1, mu_conj.part(box.col) - box.row)
    h2 = ONE
    for box in sorted(boxes(nu)):
        h2 = h2 * RatFunc.linear(box.col - 1, s - box.row + 1)
    return mu, lower_norm(mu) * upper_norm(nu) * h1 * h2


def marked_rectangle(r: int, s: int, n: int) -> Partition:
    if r < 1 or s < 1 or not 0 <= n <= r:
        raise PartitionError(f"(r, s, n)=({r}, {s}, {n}) does not describe (r^(s-1), r-n)")
    return Partition([r] * (s - 1) + [r - n])


def marked_rect_lr(
    r: int, s: int, n: int, mu: Partition, nu: Partition, *, reading: str = "resolved"
) -> RatFunc:
    """<J_mu J_nu, J_lam> for lam = (r^(s-1), r-n) through the rectangle (r^s).

    The resolved reading weighs the Pieri step by
    h_*(mu_u) h^*(mu_b) / (h_*(nubar_u) h^*(nubar_b)); the printed reading
    uses the reciprocal ratio together with an extra factor n! alpha^n.
    """
    lam = marked_rectangle(r, s, n)
    mu, nu = Partition(mu), Partition(nu)
    if mu.weight + nu.weight != lam.weight:
        return ZERO
    rect = Partition([r] * s)
    if not contains(rect, nu):
        return ZERO
    nu_bar, rect_value = rect_lr(rect, nu)
    if not is_horizontal_strip(nu_bar, mu, n):
        return ZERO
    prefactor = RatFunc.constant(
        Fraction(math.factorial(r - n), math.factorial(r) // math.factorial(n))
    )
    for i in range(n):
        prefactor = prefactor / RatFunc.linear(i, s)
    split = based_split(nu_bar, mu)
    mu_part = hook_product(mu, split.mu_unbased, "lower") * hook_product(
        mu, split.mu_based, "upper"
    )
    bar_part = hook_product(nu_bar, split.lam_unbased, "lower") * hook_product(
        nu_bar, split.lam_based, "upper"
    )
    if reading == "resolved":
        ratio = mu_part / bar_part
    elif reading == "printed":
        ratio = bar_part / mu_part * ALPHA**n * math.factorial(n)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return prefactor * ratio * rect_value


def marked_representations(lam: Partition) -> List[Tuple[int, int, int]]:
    """All (r, s, n) with lam = (r^(s-1), r-n) and r = lam_1."""
    lam = Partition(lam)
    if not lam:
        return []
    r = lam[0]
    top = [p for p in lam if p == r]
    rest = lam[len(top) :]
    if not rest:
        return [(r, len(lam), 0), (r, len(lam) + 1, r)]
    if len(rest) == 1:
        return [(r, len(lam), r - rest[0])]
    return []


def j_n1_in_qbasis(n: int, alpha: RatFunc = ALPHA) -> SymFun:
    """(n-1)! alpha^n [(1 + n alpha) q_n q_1 - (n+1) q_{n+1}]."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    combo = (q_n(n, alpha) * q_n(1, alpha)).scale(alpha * n + 1) - q_n(n + 1, alpha).scale(n + 1)
    return combo.scale(alpha**n * math.factorial(n - 1))


def complement_dominance_check(r: int, s: int, nu: Partition) -> List[Partition]:
    """omega with <J_omega q_nu, J_(r^s)> != 0 that fail to dominate the complement of nu."""
    rect, nu = Partition([r] * s), Partition(nu)
    nu_bar = complement(rect, nu)
    target = jack_J(rect)
    bad: List[Partition] = []
    q = q_lambda(nu)
    for omega in partitions_of(rect.weight - nu.weight):
        if inner(jack_J(omega) * q, target).is_zero():
            continue
        if not dominates(omega, nu_bar):
            bad.append(omega)
    return bad


def conjugate_duality_check(
    mu: Partition, nu: Partition, lam: Partition, values: Sequence[int] = (2, 3)
) -> bool:
    """Nonvanishing at alpha=a matches nonvanishing of the conjugate triple at 1/a."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    for a in values:
        direct = lr_oracle(mu, nu, lam, RatFunc.constant(a))
        dual = lr_oracle(
            conjugate(mu), conjugate(nu), conjugate(lam), RatFunc.constant(Fraction(1, a))
        )
        if direct.is_zero() != dual.is_zero():
            logger.warning("duality fails for %s, %s, %s at alpha=%s", mu, nu, lam, a)
            return False
    return True


def triples(nu: Partition, max_weight: int) -> Iterable[Tuple[Partition, Partition]]:
    """(mu, lam) pairs with |nu| <= |lam| <= max_weight and |mu| = |lam| - |nu|."""
    nu = Partition(nu)
    for total in range(nu.weight, max_weight + 1):
        for mu in partitions_of(total - nu.weight):
            for lam in partitions_of(total):
                yield mu, lam


__all__ = [
    "LRReport",
    "ROUTES",
    "conjugate_duality_check",
    "j_n1_in_qbasis",
    "complement_dominance_check",
    "lr_oracle",
    "make_report",
    "marked_rect_lr",
    "marked_rectangle",
    "marked_representations",
    "rect_lr",
    "triples",
]
