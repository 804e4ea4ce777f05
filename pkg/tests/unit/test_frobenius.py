from fractions import Fraction

import pytest

from jack_vertex.errors import PartitionError
from jack_vertex.frobenius import (
    GCoeffKey,
    brute_force_chains,
    chain_weights,
    cor35_check,
    enumerate_chains,
    frobenius_rect_check,
    g_coeff,
    g_coeff_by_chains,
    general_frobenius,
    general_frobenius_check,
    rect_frobenius,
    rect_g_coefficients,
    sub_multisets,
)
from jack_vertex.jack.oracle import jack_Q
from jack_vertex.partitions import Partition, partitions_of
from jack_vertex.symfun import proportionality
from jack_vertex.vandermonde import parameter


@pytest.mark.unit
def test_single_box():
    assert g_coeff(GCoeffKey(Partition((1,)), Partition((1,)), 1)) == 1


@pytest.mark.unit
def test_column_of_two():
    assert rect_g_coefficients(1, 2, 1) == {
        Partition((1, 1)): Fraction(1, 2),
        Partition((2,)): Fraction(-1, 2),
    }
    assert rect_g_coefficients(1, 2, 2) == {
        Partition((1, 1)): Fraction(4, 3),
        Partition((2,)): Fraction(-4, 3),
    }


@pytest.mark.unit
@pytest.mark.parametrize("k,s,t", [(1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 1, 2), (1, 3, 1)])
def test_rectangular_expansion_is_Q(k, s, t):
    comparison = frobenius_rect_check(k, s, t)
    assert comparison.match
    assert comparison.diff().is_zero()


@pytest.mark.unit
def test_key_validation():
    with pytest.raises(PartitionError):
        GCoeffKey(Partition((2, 1)), Partition((3,)), 1)
    with pytest.raises(PartitionError):
        GCoeffKey(Partition((2, 2)), Partition((3,)), 1)
    with pytest.raises(ValueError):
        GCoeffKey(Partition((1,)), Partition((1,)), 0)
    key = GCoeffKey(Partition((3, 3)), Partition((6,)), 2)
    assert (key.k, key.s) == (3, 2)


@pytest.mark.unit
def test_chain_helpers():
    assert chain_weights(2, 2, 1) == (0, 3, 4)
    assert sorted(sub_multisets(Partition((2, 1, 1)))) == sorted(
        Partition(p) for p in [(), (1,), (1, 1), (2,), (2, 1), (2, 1, 1)]
    )


@pytest.mark.unit
@pytest.mark.parametrize("k,s,t", [(1, 2, 1), (2, 2, 1), (1, 2, 2)])
def test_chain_enumeration_matches_brute_force(k, s, t):
    rect = Partition([k] * s)
    for mu in partitions_of(rect.weight):
        key = GCoeffKey(rect, mu, t)
        assert len(list(enumerate_chains(key))) == len(brute_force_chains(key))
        assert g_coeff_by_chains(key) == g_coeff(key)


@pytest.mark.unit
@pytest.mark.parametrize("t,expected", [(1, -4), (2, 32)])
def test_two_row_scalar_identity(t, expected):
    result = cor35_check(t)
    assert result["lhs"] == result["rhs"] == expected
    assert result["match"] is True


@pytest.mark.unit
def test_general_expansion_of_a_rectangle_is_rectangular():
    assert general_frobenius(Partition((2, 2)), 1) == rect_frobenius(2, 2, 1)
    with pytest.raises(PartitionError):
        general_frobenius(Partition(), 1)


@pytest.mark.unit
@pytest.mark.parametrize("lam,t", [((2, 1), 1), ((2, 1), 2), ((3, 1), 1), ((2, 1, 1), 1)])
def test_general_expansion_is_proportional_to_Q(lam, t):
    lam = Partition(lam)
    comparison = general_frobenius_check(lam, t)
    assert comparison.match
    assert comparison.lhs.scale(comparison.scalar) == jack_Q(lam, parameter(t))
    assert proportionality(comparison.rhs, comparison.lhs) == comparison.scalar
