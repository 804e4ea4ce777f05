from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jack_vertex.jack.oracle import jack_J
from jack_vertex.partitions import Partition, partitions_of
from jack_vertex.ratfield import ALPHA, ZERO, RatFunc
from jack_vertex.symfun import (
    SymFun,
    coordinates,
    from_coordinates,
    inner,
    monomial_coeff,
    monomial_function,
    proportionality,
    q_n,
    skew,
)

P = SymFun.power_sum


def _homogeneous(n):
    return st.dictionaries(
        st.sampled_from(partitions_of(n)), st.integers(min_value=-3, max_value=3), max_size=3
    ).map(SymFun.from_terms)


@pytest.mark.unit
def test_inner_product_of_power_sums():
    assert inner(P((1, 1)), P((1, 1))) == 2 * ALPHA * ALPHA
    assert inner(P((2,)), P((1, 1))) == ZERO
    assert inner(P((3,)), P((3,)), RatFunc.constant(2)) == 6


@pytest.mark.unit
def test_skew_removes_parts():
    assert skew(P((1,)), P((1, 1))) == P((1,)).scale(2 * ALPHA)
    assert skew(P((1,)), P((2, 1, 1))) == P((2, 1)).scale(2 * ALPHA)
    assert skew(P((3,)), P((2, 1))).is_zero()


@pytest.mark.unit
@settings(max_examples=30, deadline=None)
@given(_homogeneous(1), _homogeneous(2), _homogeneous(3))
def test_skew_is_adjoint_to_multiplication(f, h, g):
    assert inner(f * h, g) == inner(h, skew(f, g))


@pytest.mark.unit
def test_q_n_in_power_sums():
    expected = SymFun.from_terms(
        {Partition((1, 1)): (2 * ALPHA * ALPHA).inverse(), Partition((2,)): (2 * ALPHA).inverse()}
    )
    assert q_n(2) == expected
    assert q_n(0) == SymFun.constant(1)


@pytest.mark.unit
def test_monomial_coefficients():
    assert monomial_coeff(P((2,)), Partition((1, 1))) == ZERO
    assert monomial_coeff(P((2,)), Partition((2,))) == 1
    assert monomial_coeff(P((1, 1)), Partition((1, 1))) == 2
    assert monomial_coeff(P((1, 1)), Partition((2,))) == 1


@pytest.mark.unit
def test_monomial_function_in_power_sums():
    expected = SymFun.from_terms({Partition((1, 1)): Fraction(1, 2), Partition((2,)): Fraction(-1, 2)})
    assert monomial_function(Partition((1, 1))) == expected
    assert monomial_function(Partition((3,))) == P((3,))


@pytest.mark.unit
def test_coordinates_in_monomial_basis():
    assert coordinates(P((1, 1)), "m") == {Partition((2,)): 1, Partition((1, 1)): 2}
    assert from_coordinates({Partition((1, 1)): 1}, "m") == monomial_function(Partition((1, 1)))
    with pytest.raises(ValueError):
        coordinates(P((1,)), "e")


@pytest.mark.unit
@pytest.mark.parametrize("basis", ["p", "m", "q"])
def test_coordinates_reconstruct_the_function(basis):
    f = jack_J(Partition((2, 1)))
    assert from_coordinates(coordinates(f, basis), basis) == f


@pytest.mark.unit
def test_proportionality():
    assert proportionality(P((1,)).scale(2), P((1,))) == 2
    assert proportionality(P((1,)), P((2,))) is None
    assert proportionality(SymFun(), P((2,))) == ZERO
    assert proportionality(P((1,)), SymFun()) is None


@pytest.mark.unit
def test_specialize_and_arithmetic():
    f = P((1,)).scale(ALPHA) + P((2,))
    assert f.specialize(2) == P((1,)).scale(2) + P((2,))
    assert (f - f).is_zero()
    assert (P((1,)) * P((1,))) == P((1, 1))
    assert f.degree is None
    assert (P((2,)) / 2).coefficient(Partition((2,))) == Fraction(1, 2)
