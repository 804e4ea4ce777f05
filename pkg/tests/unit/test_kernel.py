import pytest

from jack_vertex.errors import ResourceGuardError
from jack_vertex.partitions import Partition
from jack_vertex.vandermonde import expand_H1, kernel_violations


@pytest.mark.unit
def test_single_variable_kernel_is_geometric():
    assert expand_H1(1, 1, 3) == {
        (Partition((n,)), Partition((n,))): 1 for n in (1, 2, 3)
    }


@pytest.mark.unit
def test_two_by_two_examples():
    coefficients = expand_H1(2, 2, 4)
    assert coefficients[(Partition((2, 1)), Partition((2, 1)))] == 1
    assert coefficients[(Partition((2, 2)), Partition((2, 2)))] == 2
    assert coefficients[(Partition((3, 1)), Partition((3, 1)))] == 1
    assert (Partition((2, 1)), Partition((3,))) not in coefficients


@pytest.mark.unit
@pytest.mark.parametrize("s,t,cutoff", [(1, 2, 4), (2, 2, 4), (1, 1, 6), (2, 2, 6)])
def test_coefficients_are_positive_and_dominant(s, t, cutoff):
    coefficients = expand_H1(s, t, cutoff)
    assert coefficients
    assert kernel_violations(coefficients) == []
    for lam, mu in coefficients:
        assert len(lam) == s and len(mu) <= t


@pytest.mark.unit
@pytest.mark.parametrize("s,t,cutoff", [(2, 1, 4), (3, 2, 4), (3, 1, 6)])
def test_kernel_vanishes_when_t_is_below_s(s, t, cutoff):
    # l(lam) = s > t >= l(mu) rules out lam dominating mu
    assert expand_H1(s, t, cutoff) == {}


@pytest.mark.unit
def test_violations_are_reported():
    bad = {(Partition((1, 1)), Partition((2,))): 3, (Partition((2,)), Partition((2,))): -1}
    assert [v["lambda"] for v in kernel_violations(bad)] == ["1,1", "2"]


@pytest.mark.unit
def test_kernel_guards():
    with pytest.raises(ResourceGuardError):
        expand_H1(1, 1, 20, max_cutoff=10)
    with pytest.raises(ValueError):
        expand_H1(0, 1, 3)
