"""Exact arithmetic in Q(alpha), the field of rational functions in the Jack parameter.

Polynomials are held in sympy's dense univariate representation over ``QQ``
(descending coefficient lists) so that gcd, exact quotient and evaluation
come from ``sympy.polys`` rather than being re-implemented here. Every
:class:`RatFunc` is kept in canonical form: numerator and denominator are
coprime and the denominator is monic, so equality and hashing are plain
representation equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple, TypeVar, Union

import sympy
from sympy.polys.densearith import (
    dup_add,
    dup_mul,
    dup_mul_ground,
    dup_neg,
    dup_quo,
    dup_quo_ground,
)
from sympy.polys.densebasic import dup_LC, dup_strip
from sympy.polys.densetools import dup_eval, dup_monic
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd, dup_lcm

from .errors import NotPolynomialError, PoleError

Rep = Tuple  # descending tuple of QQ elements, sympy "dup" layout
Scalar = Union[int, Fraction]

ALPHA_SYMBOL = sympy.Symbol("alpha")

_ONE_REP: Rep = (QQ.one,)
_ZERO_REP: Rep = ()


def _qq(value: Scalar) -> object:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(int(value))


def _fraction(value: object) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))  # type: ignore[attr-defined]


def _rep(coeffs: List[object]) -> Rep:
    return tuple(dup_strip(coeffs))


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q with trailing zeros trimmed."""

    rep: Rep = _ZERO_REP

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "Poly":
        """Build from ascending-degree coefficients."""
        ascending = [_qq(c) for c in coeffs]
        return cls(_rep(list(reversed(ascending))))

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Ascending-degree coefficients as :class:`Fraction` values."""
        return tuple(_fraction(c) for c in reversed(self.rep))

    @property
    def degree(self) -> int:
        return len(self.rep) - 1

    def is_zero(self) -> bool:
        return not self.rep

    def evaluate(self, x: Scalar) -> Fraction:
        return _fraction(dup_eval(list(self.rep), _qq(x), QQ))

    def to_expr(self) -> sympy.Expr:
        return sympy.Poly.from_list(list(self.rep), ALPHA_SYMBOL, domain=QQ).as_expr()

    def __str__(self) -> str:
        return str(self.to_expr())


def poly_is_nonneg_int(p: Poly) -> bool:
    """True iff every coefficient of ``p`` is a nonnegative integer."""
    return all(c.denominator == 1 and c >= 0 for c in p.coeffs)


def _canonical(num: List[object], den: List[object]) -> Tuple[Rep, Rep]:
    num = dup_strip(num)
    den = dup_strip(den)
    if not den:
        raise PoleError("denominator is the zero polynomial")
    if not num:
        return _ZERO_REP, _ONE_REP
    if len(den) > 1:
        g = dup_gcd(num, den, QQ)
        if len(g) > 1:
            num = dup_quo(num, g, QQ)
            den = dup_quo(den, g, QQ)
    lc = dup_LC(den, QQ)
    if lc != QQ.one:
        num = dup_quo_ground(num, lc, QQ)
        den = dup_monic(den, QQ)
    return tuple(num), tuple(den)


@dataclass(frozen=True)
class RatFunc:
    """Element of Q(alpha) in canonical reduced form with a monic denominator."""

    num: Poly
    den: Poly

    @classmethod
    def _from_reps(cls, num: Sequence[object], den: Sequence[object]) -> "RatFunc":
        n, d = _canonical(list(num), list(den))
        return cls(Poly(n), Poly(d))

    @classmethod
    def from_polys(cls, num: Poly, den: Poly) -> "RatFunc":
        return cls._from_reps(num.rep, den.rep)

    @classmethod
    def constant(cls, value: Scalar) -> "RatFunc":
        c = _qq(value)
        if not c:
            return ZERO
        return cls(Poly((c,)), Poly(_ONE_REP))

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar) -> "RatFunc":
        """The polynomial ``slope * alpha + intercept``."""
        return cls._from_reps([_qq(slope), _qq(intercept)], _ONE_REP)

    @classmethod
    def coerce(cls, value: Union["RatFunc", Scalar]) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a RatFunc")

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return len(self.den.rep) == 1

    def is_constant(self) -> bool:
        return self.is_polynomial() and len(self.num.rep) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise NotPolynomialError(f"{self} is not a constant")
        if self.num.is_zero():
            return Fraction(0)
        return _fraction(self.num.rep[0])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.constant(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num.rep, self.den.rep))

    # -- field operations -------------------------------------------------
    def __add__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return RatFunc._from_reps(
                dup_add(list(self.num.rep), list(o.num.rep), QQ), self.den.rep
            )
        num = dup_add(
            dup_mul(list(self.num.rep), list(o.den.rep), QQ),
            dup_mul(list(o.num.rep), list(self.den.rep), QQ),
            QQ,
        )
        den = dup_mul(list(self.den.rep), list(o.den.rep), QQ)
        return RatFunc._from_reps(num, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(Poly(tuple(dup_neg(list(self.num.rep), QQ))), self.den)

    def __sub__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        if o.is_constant():
            c = o.num.rep[0]
            return RatFunc(Poly(tuple(dup_mul_ground(list(self.num.rep), c, QQ))), self.den)
        if self.is_constant():
            return o * self
        if self.is_polynomial() and o.is_polynomial():
            product = dup_mul(list(self.num.rep), list(o.num.rep), QQ)
            return RatFunc(Poly(tuple(product)), self.den)
        # cross-cancel so that the product is already reduced
        an, ad = list(self.num.rep), list(self.den.rep)
        bn, bd = list(o.num.rep), list(o.den.rep)
        g1 = dup_gcd(an, bd, QQ)
        g2 = dup_gcd(bn, ad, QQ)
        if len(g1) > 1:
            an, bd = dup_quo(an, g1, QQ), dup_quo(bd, g1, QQ)
        if len(g2) > 1:
            bn, ad = dup_quo(bn, g2, QQ), dup_quo(ad, g2, QQ)
        return RatFunc._from_reps(dup_mul(an, bn, QQ), dup_mul(ad, bd, QQ))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise PoleError("division by the zero rational function")
        return RatFunc._from_reps(self.den.rep, self.num.rep)

    def __truediv__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- evaluation and views ---------------------------------------------
    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at ``alpha = x``; raises :class:`PoleError` at a pole."""
        point = _qq(x)
        d = dup_eval(list(self.den.rep), point, QQ)
        if not d:
            raise PoleError(f"{self} has a pole at alpha={x}")
        n = dup_eval(list(self.num.rep), point, QQ)
        return _fraction(n) / _fraction(d)

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise NotPolynomialError(f"{self} is not a polynomial in alpha")
        return self.num

    def to_expr(self) -> sympy.Expr:
        return self.num.to_expr() / self.den.to_expr()

    def integer_lists(self) -> Tuple[List[int], List[int]]:
        """Primitive integer ascending coefficient lists (num, den), den leading coefficient positive."""
        if self.is_zero():
            return [], [1]
        num = self.num.coeffs
        den = self.den.coeffs
        scale = math.lcm(*(c.denominator for c in num + den))
        num_int = [int(c * scale) for c in num]
        den_int = [int(c * scale) for c in den]
        content = math.gcd(*num_int, *den_int)
        return [c // content for c in num_int], [c // content for c in den_int]

    @classmethod
    def from_integer_lists(cls, num: Sequence[int], den: Sequence[int]) -> "RatFunc":
        return cls.from_polys(Poly.from_coeffs(num), Poly.from_coeffs(den))

    def __str__(self) -> str:
        return _factored_text(self.num.rep, self.den.rep)


ZERO = RatFunc(Poly(_ZERO_REP), Poly(_ONE_REP))
ONE = RatFunc(Poly(_ONE_REP), Poly(_ONE_REP))
ALPHA = RatFunc(Poly((QQ.one, QQ.zero)), Poly(_ONE_REP))


@lru_cache(maxsize=8192)
def _factored_text(num: Rep, den: Rep) -> str:
    expr = Poly(num).to_expr()
    if len(den) > 1:
        expr = expr / Poly(den).to_expr()
    return str(sympy.factor(expr))


K = TypeVar("K", bound=Hashable)


def rf_combine(
    weights: Sequence[RatFunc], rows: Sequence[Mapping[K, RatFunc]]
) -> Dict[K, RatFunc]:
    """sum_i weights[i] * rows[i][key] for every key.

    All weights are put over their least common denominator first, so the
    accumulation runs on numerators and each key is reduced once.
    """
    pairs = [(w, row) for w, row in zip(weights, rows) if not w.is_zero()]
    common: List[object] = [QQ.one]
    for w, _ in pairs:
        if len(w.den.rep) > 1:
            common = dup_lcm(common, list(w.den.rep), QQ)
    buckets: Dict[K, Dict[Rep, List[object]]] = {}
    for w, row in pairs:
        cofactor = dup_quo(common, list(w.den.rep), QQ)
        scaled = dup_mul(list(w.num.rep), cofactor, QQ)
        for key, value in row.items():
            per_den = buckets.setdefault(key, {})
            term = dup_mul(scaled, list(value.num.rep), QQ)
            per_den[value.den.rep] = dup_add(per_den.get(value.den.rep, []), term, QQ)
    result: Dict[K, RatFunc] = {}
    for key, per_den in buckets.items():
        total = ZERO
        for den, num in per_den.items():
            total = total + RatFunc._from_reps(num, dup_mul(common, list(den), QQ))
        if not total.is_zero():
            result[key] = total
    return result


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Dispatch helper mirroring the add/sub/mul/div operation table."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_eval(a: RatFunc, x: Scalar) -> Fraction:
    return a.evaluate(x)


def rf_as_poly(a: RatFunc) -> Poly:
    return a.as_poly()


__all__ = [
    "ALPHA",
    "ALPHA_SYMBOL",
    "ONE",
    "Poly",
    "RatFunc",
    "ZERO",
    "poly_is_nonneg_int",
    "rf_arith",
    "rf_as_poly",
    "rf_combine",
    "rf_eval",
]
