"""Pieri coefficients <J_mu J_(n), J_lam> by closed form and by the oracle."""

from __future__ import annotations

import itertools
import logging
import math
from typing import Dict, Iterable, List, Tuple

from ..partitions import Partition, based_split, hook_product, is_horizontal_strip, partitions_of
from ..ratfield import ALPHA, ZERO, RatFunc
from ..symfun import inner
from .oracle import jack_J

logger = logging.getLogger(__name__)

HookAssignment = Tuple[Tuple[str, str], ...]

# Which hook kind multiplies each of the four based/un-based square sets.
PIERI_ASSIGNMENT: HookAssignment = (
    ("lam_unbased", "upper"),
    ("lam_based", "lower"),
    ("mu_based", "upper"),
    ("mu_unbased", "lower"),
)

_SETS = ("lam_unbased", "lam_based", "mu_based", "mu_unbased")


def _closed_form(
    mu: Partition, n: int, lam: Partition, assignment: HookAssignment
) -> RatFunc:
    if not is_horizontal_strip(lam, mu, n):
        return ZERO
    split = based_split(lam, mu)
    cells = {
        "lam_based": (lam, split.lam_based),
        "lam_unbased": (lam, split.lam_unbased),
        "mu_based": (mu, split.mu_based),
        "mu_unbased": (mu, split.mu_unbased),
    }
    value = ALPHA**n * math.factorial(n)
    for name, kind in assignment:
        shape, boxes = cells[name]
        value = value * hook_product(shape, boxes, kind)
    return value


def pieri_coeff(mu: Partition, n: int, lam: Partition) -> RatFunc:
    """Closed form: zero off horizontal n-strips, else n! alpha^n times four hook products."""
    return _closed_form(Partition(mu), n, Partition(lam), PIERI_ASSIGNMENT)


def pieri_oracle(mu: Partition, n: int, lam: Partition) -> RatFunc:
    mu, lam = Partition(mu), Partition(lam)
    if mu.weight + n != lam.weight:
        return ZERO
    return inner(jack_J(mu) * jack_J(Partition([n])), jack_J(lam))


def pieri_triples(max_weight: int) -> Iterable[Tuple[Partition, int, Partition]]:
    """All (mu, n, lam) with n >= 1 and |lam| <= max_weight."""
    for total in range(1, max_weight + 1):
        for n in range(1, total + 1):
            for mu in partitions_of(total - n):
                for lam in partitions_of(total):
                    yield mu, n, lam


def candidate_assignments() -> List[HookAssignment]:
    return [
        tuple(zip(_SETS, kinds))
        for kinds in itertools.product(("lower", "upper"), repeat=len(_SETS))
    ]


def fit_pieri_assignment(max_weight: int) -> List[HookAssignment]:
    """Hook assignments whose closed form agrees with the oracle on every triple up to max_weight."""
    survivors = candidate_assignments()
    oracle_values: Dict[Tuple[Partition, int, Partition], RatFunc] = {}
    for triple in pieri_triples(max_weight):
        oracle_values[triple] = pieri_oracle(*triple)
    for triple, expected in oracle_values.items():
        survivors = [a for a in survivors if _closed_form(*triple, a) == expected]
        if not survivors:
            break
    logger.info(
        "pieri fit up to weight %s leaves %s assignment(s)", max_weight, len(survivors)
    )
    return survivors


__all__ = [
    "PIERI_ASSIGNMENT",
    "candidate_assignments",
    "fit_pieri_assignment",
    "pieri_coeff",
    "pieri_oracle",
    "pieri_triples",
]
