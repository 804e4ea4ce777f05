import pytest

from jack_vertex.errors import PartitionError
from jack_vertex.jack.filtration import jack_Q_filtration, nested_skew, rect_removal_check
from jack_vertex.jack.oracle import jack_Q
from jack_vertex.partitions import Partition, partitions_of, rect_filtration
from jack_vertex.ratfield import RatFunc
from jack_vertex.symfun import SymFun, skew


@pytest.mark.unit
def test_nested_skew_single_and_pair():
    f = SymFun.power_sum(Partition((1, 1)))
    g = SymFun.power_sum(Partition((1,)))
    assert nested_skew((f,)) == f
    assert nested_skew((f, g)) == skew(g, f)


@pytest.mark.unit
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_filtration_reproduces_Q_up_to_scalar(n):
    for lam in partitions_of(n):
        raw, scalar = jack_Q_filtration(lam)
        assert not scalar.is_zero()
        assert raw.scale(scalar) == jack_Q(lam)


@pytest.mark.unit
def test_rectangle_is_its_own_filtration():
    raw, scalar = jack_Q_filtration(Partition((2, 2)))
    assert scalar == 1
    assert raw == jack_Q(Partition((2, 2)))


@pytest.mark.unit
def test_filtration_at_a_specialized_parameter():
    half = RatFunc.constant(1) / 2
    raw, scalar = jack_Q_filtration(Partition((3, 1)), half)
    assert raw.scale(scalar) == jack_Q(Partition((3, 1)), half)


@pytest.mark.unit
@pytest.mark.parametrize("k,s,n", [(1, 2, 1), (1, 2, 2), (2, 2, 1), (1, 3, 1)])
def test_removing_from_a_rectangle(k, s, n):
    assert not rect_removal_check(k, s, n).is_zero()


@pytest.mark.unit
def test_removal_rejects_bad_arguments():
    with pytest.raises(PartitionError):
        rect_removal_check(1, 2, 3)
    with pytest.raises(PartitionError):
        rect_removal_check(1, 0, 1)


@pytest.mark.unit
@pytest.mark.parametrize("lam", [(2, 1), (3, 1, 1), (3, 2, 1), (4, 2)])
def test_raw_matches_nested_skew_of_rectangle_Qs(lam):
    lam = Partition(lam)
    raw, _ = jack_Q_filtration(lam)
    expected = nested_skew(tuple(jack_Q(rect) for rect in rect_filtration(lam)))
    assert raw == expected
