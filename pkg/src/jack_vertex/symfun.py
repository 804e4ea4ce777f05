"""Symmetric functions in the power-sum basis over Q(alpha).

The power-sum basis is the only stored representation. The Jack scalar
product ``<p_lam, p_mu> = delta * z_lam * alpha^{l(lam)}`` and its adjoint
(skew) action supply every other coordinate: the m-coefficient of ``f`` at
``nu`` is ``<f, q_nu>``.

Functions taking ``alpha`` accept either the indeterminate (default) or a
constant :class:`RatFunc`, which is how identities at a specialised
parameter such as ``1/t`` are evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .partitions import (
    Partition,
    exp_contains,
    exp_diff,
    multiset_binom,
    partitions_of,
    sort_key,
    z_lambda,
)
from .ratfield import ALPHA, ONE, ZERO, RatFunc

Coefficient = Union[RatFunc, int, Fraction]


@dataclass(frozen=True)
class SymFun:
    """Sparse map Partition -> RatFunc of power-sum coefficients, zeros never stored."""

    terms: Mapping[Partition, RatFunc] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, terms: Mapping[Partition, Coefficient]) -> "SymFun":
        cleaned: Dict[Partition, RatFunc] = {}
        for key, value in terms.items():
            coeff = RatFunc.coerce(value)
            if not coeff.is_zero():
                cleaned[Partition(key)] = coeff
        return cls(cleaned)

    @classmethod
    def power_sum(cls, lam: Partition) -> "SymFun":
        return cls({Partition(lam): ONE})

    @classmethod
    def constant(cls, value: Coefficient) -> "SymFun":
        return cls.from_terms({Partition(): value})

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Partition) -> RatFunc:
        return self.terms.get(Partition(lam), ZERO)

    def keys_sorted(self) -> Tuple[Partition, ...]:
        return tuple(sorted(self.terms, key=sort_key))

    def items_sorted(self) -> Iterator[Tuple[Partition, RatFunc]]:
        for key in self.keys_sorted():
            yield key, self.terms[key]

    @property
    def degree(self) -> Optional[int]:
        """Common weight of all keys, or None for zero or mixed-degree elements."""
        weights = {lam.weight for lam in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree is not None

    # -- algebra -----------------------------------------------------------
    def __add__(self, other: "SymFun") -> "SymFun":
        if not isinstance(other, SymFun):
            return NotImplemented
        result = dict(self.terms)
        for key, value in other.terms.items():
            total = result.get(key, ZERO) + value
            if total.is_zero():
                result.pop(key, None)
            else:
                result[key] = total
        return SymFun(result)

    def __neg__(self) -> "SymFun":
        return SymFun({key: -value for key, value in self.terms.items()})

    def __sub__(self, other: "SymFun") -> "SymFun":
        if not isinstance(other, SymFun):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Coefficient) -> "SymFun":
        c = RatFunc.coerce(factor)
        if c.is_zero():
            return SymFun()
        return SymFun({key: value * c for key, value in self.terms.items()})

    def __mul__(self, other: Union["SymFun", Coefficient]) -> "SymFun":
        if not isinstance(other, SymFun):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        result: Dict[Partition, RatFunc] = {}
        for lk, lv in self.terms.items():
            for rk, rv in other.terms.items():
                key = lk.union(rk)
                total = result.get(key, ZERO) + lv * rv
                if total.is_zero():
                    result.pop(key, None)
                else:
                    result[key] = total
        return SymFun(result)

    def __rmul__(self, other: Coefficient) -> "SymFun":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other: Coefficient) -> "SymFun":
        return self.scale(RatFunc.coerce(other).inverse())

    def map_coefficients(self, fn) -> "SymFun":
        return SymFun.from_terms({key: fn(value) for key, value in self.terms.items()})

    def specialize(self, x: Union[int, Fraction]) -> "SymFun":
        """Evaluate every coefficient at ``alpha = x``."""
        return self.map_coefficients(lambda c: RatFunc.constant(c.evaluate(x)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({value})*p[{key}]" for key, value in self.items_sorted())


def sf_arith(f: SymFun, g: Union[SymFun, Coefficient], op: str) -> SymFun:
    if op == "add":
        return f + g  # type: ignore[operator]
    if op == "sub":
        return f - g  # type: ignore[operator]
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)  # type: ignore[arg-type]
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=4096)
def _norm(lam: Partition, alpha: RatFunc) -> RatFunc:
    return alpha ** len(lam) * z_lambda(lam)


def inner(f: SymFun, g: SymFun, alpha: RatFunc = ALPHA) -> RatFunc:
    """<f, g> with <p_lam, p_mu> = delta z_lam alpha^{l(lam)}."""
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total = ZERO
    for key, value in small.terms.items():
        other = large.terms.get(key)
        if other is not None:
            total = total + _norm(key, alpha) * value * other
    return total


def skew(f: SymFun, g: SymFun, alpha: RatFunc = ALPHA) -> SymFun:
    """The adjoint f^* applied to g: <f*h, g> = <h, skew(f, g)>."""
    result: Dict[Partition, RatFunc] = {}
    for mu, fv in f.terms.items():
        weight = _norm(mu, alpha) * fv
        for nu, gv in g.terms.items():
            if not exp_contains(nu, mu):
                continue
            key = exp_diff(nu, mu)
            term = weight * gv * multiset_binom(nu, mu)
            total = result.get(key, ZERO) + term
            if total.is_zero():
                result.pop(key, None)
            else:
                result[key] = total
    return SymFun(result)


@lru_cache(maxsize=1024)
def q_n(n: int, alpha: RatFunc = ALPHA) -> SymFun:
    """Generalised complete function: sum over lam |- n of z_lam^{-1} alpha^{-l(lam)} p_lam."""
    if n < 0:
        return SymFun()
    return SymFun({lam: _norm(lam, alpha).inverse() for lam in partitions_of(n)})


@lru_cache(maxsize=4096)
def q_lambda(lam: Partition, alpha: RatFunc = ALPHA) -> SymFun:
    result = SymFun.constant(1)
    for part in lam:
        result = result * q_n(part, alpha)
    return result


def monomial_coeff(f: SymFun, nu: Partition, alpha: RatFunc = ALPHA) -> RatFunc:
    """Coefficient of m_nu in f, read off as <f, q_nu>."""
    return inner(f, q_lambda(Partition(nu), alpha), alpha)


def proportionality(f: SymFun, g: SymFun) -> Optional[RatFunc]:
    """Return c with f = c*g when g is nonzero and f is a multiple of it, else None."""
    if g.is_zero():
        return None
    if set(f.terms) != set(g.terms):
        return ZERO if f.is_zero() else None
    key = next(iter(g.terms))
    ratio = f.terms[key] / g.terms[key]
    if g.scale(ratio) != f:
        return None
    return ratio


@lru_cache(maxsize=None)
def _monomials_in_p(n: int) -> Dict[Partition, "SymFun"]:
    """m_mu for mu |- n in power sums, by inverting the integer matrix p_lam = sum L m_mu."""
    basis = partitions_of(n)
    # L does not depend on the parameter, so it is read off at alpha = 1
    rows = [
        [QQ(int(monomial_coeff(SymFun.power_sum(lam), mu, ONE).constant_value())) for mu in basis]
        for lam in basis
    ]
    inverse = DomainMatrix(rows, (len(basis), len(basis)), QQ).inv().to_list()
    result: Dict[Partition, SymFun] = {}
    for i, mu in enumerate(basis):
        result[mu] = SymFun.from_terms(
            {
                lam: Fraction(int(value.numerator), int(value.denominator))
                for lam, value in zip(basis, inverse[i])
                if value
            }
        )
    return result


def monomial_function(mu: Partition) -> SymFun:
    mu = Partition(mu)
    return _monomials_in_p(mu.weight)[mu]


BASES = ("p", "m", "q")


def coordinates(f: SymFun, basis: str, alpha: RatFunc = ALPHA) -> Dict[Partition, RatFunc]:
    """Nonzero coefficients of f in the power-sum, monomial or q basis."""
    if basis == "p":
        return dict(f.terms)
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    degrees = sorted({lam.weight for lam in f.terms})
    coords: Dict[Partition, RatFunc] = {}
    for n in degrees:
        for nu in partitions_of(n):
            # <m_lam, q_mu> = delta
            partner = q_lambda(nu, alpha) if basis == "m" else monomial_function(nu)
            value = inner(f, partner, alpha)
            if not value.is_zero():
                coords[nu] = value
    return coords


def from_coordinates(
    coords: Mapping[Partition, Coefficient], basis: str, alpha: RatFunc = ALPHA
) -> SymFun:
    if basis == "p":
        return SymFun.from_terms(coords)
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    result = SymFun()
    for nu, value in coords.items():
        element = monomial_function(nu) if basis == "m" else q_lambda(Partition(nu), alpha)
        result = result + element.scale(value)
    return result


__all__ = [
    "BASES",
    "SymFun",
    "coordinates",
    "from_coordinates",
    "inner",
    "monomial_coeff",
    "monomial_function",
    "proportionality",
    "q_lambda",
    "q_n",
    "sf_arith",
    "skew",
]
