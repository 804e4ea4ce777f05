"""Partition combinatorics: conjugation, dominance, hooks, corners, complements and filtrations.

All hooks use the convention in which the arm is weighted by the Jack
parameter: ``lower = alpha*arm + leg + 1`` and ``upper = alpha*(arm + 1) + leg``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .errors import PartitionError
from .ratfield import ONE, RatFunc


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; zero parts are stripped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(p) for p in parts]
        if any(p < 0 for p in values):
            raise PartitionError(f"negative part in {values}")
        values = [p for p in values if p]
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise PartitionError(f"parts {values} are not weakly decreasing")
        return super().__new__(cls, values)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary nonnegative parts into a partition."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated text form; the empty string is the zero partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(token) for token in text.split(","))
        except ValueError as exc:
            raise PartitionError(f"invalid partition text {text!r}: {exc}") from exc

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part with zero padding."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def union(self, other: "Partition") -> "Partition":
        return Partition.from_parts(tuple(self) + tuple(other))

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self))

    def is_rectangle(self) -> bool:
        return len(set(self)) <= 1


class Box(NamedTuple):
    row: int
    col: int


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def z_lambda(lam: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i!"""
    value = 1
    for part, mult in Counter(lam).items():
        value *= part**mult * math.factorial(mult)
    return value


def boxes(lam: Partition) -> FrozenSet[Box]:
    return frozenset(Box(i, j) for i, p in enumerate(lam, 1) for j in range(1, p + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment mu ⊆ lam."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam ≥ mu in dominance order (weights are assumed equal)."""
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam.part(i + 1)
        total_m += mu.part(i + 1)
        if total_l < total_m:
            return False
    return True


def dominance_compare(mu: Partition, lam: Partition) -> str:
    """Compare mu against lam: 'less', 'equal', 'greater' or 'incomparable'."""
    if mu.weight != lam.weight:
        raise PartitionError(
            f"dominance needs equal weights, got |{mu}|={mu.weight} and |{lam}|={lam.weight}"
        )
    if mu == lam:
        return "equal"
    if dominates(lam, mu):
        return "less"
    if dominates(mu, lam):
        return "greater"
    return "incomparable"


def arm(lam: Partition, box: Box) -> int:
    return lam.part(box.row) - box.col


def leg(lam: Partition, box: Box) -> int:
    return conjugate(lam).part(box.col) - box.row


def _check_box(lam: Partition, box: Box) -> None:
    if box.row < 1 or box.col < 1 or box.col > lam.part(box.row):
        raise PartitionError(f"box {tuple(box)} is outside the diagram of {lam}")


def hook(lam: Partition, box: Box, kind: str) -> RatFunc:
    _check_box(lam, box)
    a, l = arm(lam, box), leg(lam, box)
    if kind == "lower":
        return RatFunc.linear(a, l + 1)
    if kind == "upper":
        return RatFunc.linear(a + 1, l)
    raise ValueError(f"hook kind must be 'lower' or 'upper', got {kind!r}")


def hook_product(lam: Partition, cells: Iterable[Box], kind: str) -> RatFunc:
    result = ONE
    for box in sorted(cells):
        result = result * hook(lam, box, kind)
    return result


@lru_cache(maxsize=None)
def lower_norm(lam: Partition) -> RatFunc:
    return hook_product(lam, boxes(lam), "lower")


@lru_cache(maxsize=None)
def upper_norm(lam: Partition) -> RatFunc:
    return hook_product(lam, boxes(lam), "upper")


class BasedSplit(NamedTuple):
    lam_based: FrozenSet[Box]
    lam_unbased: FrozenSet[Box]
    mu_based: FrozenSet[Box]
    mu_unbased: FrozenSet[Box]


def based_split(lam: Partition, mu: Partition) -> BasedSplit:
    """Split both diagrams by whether a square's column meets lam - mu."""
    if not contains(lam, mu):
        raise PartitionError(f"{mu} is not contained in {lam}")
    skew = boxes(lam) - boxes(mu)
    columns = {box.col for box in skew}
    lam_boxes, mu_boxes = boxes(lam), boxes(mu)
    return BasedSplit(
        frozenset(b for b in lam_boxes if b.col in columns),
        frozenset(b for b in lam_boxes if b.col not in columns),
        frozenset(b for b in mu_boxes if b.col in columns),
        frozenset(b for b in mu_boxes if b.col not in columns),
    )


@dataclass(frozen=True)
class Corner:
    """The i-th corner: a rectangle of width a_i - a_{i+1} and height n_i."""

    rect: Partition
    boxes: FrozenSet[Box]
    first_row: int
    first_col: int


def _distinct_parts(lam: Partition) -> List[Tuple[int, int]]:
    """(a_i, n_i) pairs in decreasing order of the part value a_i."""
    counts = Counter(lam)
    return sorted(counts.items(), reverse=True)


def corners(lam: Partition) -> List[Corner]:
    if not lam:
        raise PartitionError("the zero partition has no corners")
    pairs = _distinct_parts(lam)
    result: List[Corner] = []
    row = 1
    for idx, (value, mult) in enumerate(pairs):
        below = pairs[idx + 1][0] if idx + 1 < len(pairs) else 0
        width = value - below
        cells = frozenset(
            Box(i, j) for i in range(row, row + mult) for j in range(below + 1, value + 1)
        )
        result.append(Corner(Partition([width] * mult), cells, row, below + 1))
        row += mult
    return result


def complement(rect: Partition, nu: Partition) -> Partition:
    """Complement of nu in the rectangle (r^s), read upside down."""
    if not rect.is_rectangle():
        raise PartitionError(f"{rect} is not rectangular")
    s = len(rect)
    r = rect[0] if rect else 0
    if len(nu) > s or (nu and nu[0] > r):
        raise PartitionError(f"{nu} is not contained in {rect}")
    return Partition(r - nu.part(i) for i in range(s, 0, -1))


def is_horizontal_strip(lam: Partition, mu: Partition, n: int) -> bool:
    if not contains(lam, mu) or lam.weight - mu.weight != n:
        return False
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    return all(lam_c.part(j) - mu_c.part(j) <= 1 for j in range(1, len(lam_c) + 1))


def exp_contains(lam: Partition, mu: Partition) -> bool:
    """Exponential containment: every multiplicity of mu is at most that of lam."""
    lam_m = Counter(lam)
    return all(lam_m[p] >= m for p, m in Counter(mu).items())


def exp_diff(lam: Partition, mu: Partition) -> Partition:
    if not exp_contains(lam, mu):
        raise PartitionError(f"{mu} is not exponentially contained in {lam}")
    remaining = Counter(lam)
    remaining.subtract(Counter(mu))
    return Partition.from_parts(p for p, m in remaining.items() for _ in range(m))


def multiset_binom(lam: Partition, mu: Partition) -> int:
    """prod_i C(m_i(lam), m_i(mu))."""
    if not exp_contains(lam, mu):
        raise PartitionError(f"{mu} is not exponentially contained in {lam}")
    lam_m = Counter(lam)
    value = 1
    for part, mult in Counter(mu).items():
        value *= math.comb(lam_m[part], mult)
    return value


class ExpOps(NamedTuple):
    contains: bool
    diff: Optional[Partition]
    multiset_binom: Optional[int]


def exp_ops(lam: Partition, mu: Partition) -> ExpOps:
    if not exp_contains(lam, mu):
        return ExpOps(False, None, None)
    return ExpOps(True, exp_diff(lam, mu), multiset_binom(lam, mu))


def bounding_rectangle(lam: Partition) -> Partition:
    """The smallest rectangle (lam_1^{l(lam)}) containing lam."""
    if not lam:
        return Partition()
    return Partition([lam[0]] * len(lam))


def rect_filtration(lam: Partition) -> Tuple[Partition, ...]:
    if not lam:
        raise PartitionError("the zero partition has no rectangular filtration")
    rects: List[Partition] = []
    current = lam
    while current:
        rect = bounding_rectangle(current)
        rects.append(rect)
        current = complement(rect, current)
    return tuple(rects)


def _star_vector(values: List[int]) -> List[int]:
    s = len(values)
    star: List[int] = []
    for k in range(1, s + 1):
        i = k // 2
        upper = s - i if k % 2 else s - i + 1
        star.append(sum(values[j - 1] for j in range(i + 1, upper + 1)))
    return star


def filtration_closed_form(lam: Partition) -> Tuple[Partition, ...]:
    """Filtration from the star vectors of the multiplicity types of lam and lam'."""
    if not lam:
        raise PartitionError("the zero partition has no rectangular filtration")
    pairs = _distinct_parts(lam)
    values = [a for a, _ in pairs] + [0]
    n = [m for _, m in pairs]
    s = len(n)
    p = [values[s - i] - values[s + 1 - i] for i in range(1, s + 1)]
    return tuple(
        Partition([width] * height)
        for width, height in zip(_star_vector(p), _star_vector(n))
    )


def upside_down_corner_strip(lam: Partition, mu: Partition) -> Optional[Partition]:
    """Return omega when lam - mu is an upside-down omega inside a single corner of lam."""
    if not lam or not contains(lam, mu) or lam == mu:
        return None
    removed = {i: lam.part(i) - mu.part(i) for i in range(1, len(lam) + 1)}
    for corner in corners(lam):
        height = len(corner.rect)
        width = corner.rect[0]
        rows = range(corner.first_row, corner.first_row + height)
        if any(removed[i] for i in removed if i not in rows):
            continue
        if any(removed[i] > width for i in rows):
            continue
        omega = [removed[corner.first_row + height - j] for j in range(1, height + 1)]
        if all(omega[j] >= omega[j + 1] for j in range(height - 1)):
            return Partition(omega)
    return None


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order (dominance-maximal first)."""
    if n < 0:
        return ()
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_in_box(r: int, s: int) -> Tuple[Partition, ...]:
    """All partitions contained in (r^s)."""
    found = [
        lam
        for n in range(r * s + 1)
        for lam in partitions_of(n)
        if len(lam) <= s and (not lam or lam[0] <= r)
    ]
    return tuple(found)


def dominance_linear_extension(n: int, variant: str = "revlex") -> Tuple[Partition, ...]:
    """A total order on partitions of n in which dominance-larger partitions come first.

    ``revlex`` sorts lexicographically descending; ``conjugate`` sorts by the
    conjugate lexicographically ascending. Both refine dominance.
    """
    parts = partitions_of(n)
    if variant == "revlex":
        return parts
    if variant == "conjugate":
        return tuple(sorted(parts, key=lambda lam: tuple(conjugate(lam))))
    raise ValueError(f"unknown linear extension {variant!r}")


def sort_key(lam: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Fixed total order used for deterministic output: by weight, then reverse lex."""
    return (lam.weight, tuple(-p for p in lam))


__all__ = [
    "BasedSplit",
    "Box",
    "Corner",
    "ExpOps",
    "Partition",
    "based_split",
    "bounding_rectangle",
    "boxes",
    "complement",
    "conjugate",
    "contains",
    "corners",
    "dominance_compare",
    "dominance_linear_extension",
    "dominates",
    "exp_contains",
    "exp_diff",
    "exp_ops",
    "filtration_closed_form",
    "hook",
    "hook_product",
    "is_horizontal_strip",
    "lower_norm",
    "multiset_binom",
    "partitions_in_box",
    "partitions_of",
    "rect_filtration",
    "sort_key",
    "upper_norm",
    "upside_down_corner_strip",
    "z_lambda",
]
