import pytest

from jack_vertex.jack.pieri import (
    PIERI_ASSIGNMENT,
    candidate_assignments,
    fit_pieri_assignment,
    pieri_coeff,
    pieri_oracle,
    pieri_triples,
)
from jack_vertex.partitions import Partition
from jack_vertex.ratfield import ALPHA, ZERO


@pytest.mark.unit
@pytest.mark.parametrize(
    "mu,n,lam",
    [((1,), 1, (2,)), ((1,), 1, (1, 1))],
)
def test_small_pieri_values(mu, n, lam):
    expected = 2 * ALPHA * ALPHA
    assert pieri_coeff(Partition(mu), n, Partition(lam)) == expected
    assert pieri_oracle(Partition(mu), n, Partition(lam)) == expected


@pytest.mark.unit
def test_pieri_vanishes_off_horizontal_strips():
    assert pieri_coeff(Partition((1,)), 2, Partition((1, 1, 1))) == ZERO
    assert pieri_oracle(Partition((1,)), 2, Partition((1, 1, 1))) == ZERO
    assert pieri_coeff(Partition((2,)), 1, Partition((2, 2))) == ZERO
    assert pieri_oracle(Partition((2,)), 1, Partition((2, 2))) == ZERO


@pytest.mark.unit
def test_closed_form_matches_oracle_up_to_weight_five():
    for mu, n, lam in pieri_triples(5):
        assert pieri_coeff(mu, n, lam) == pieri_oracle(mu, n, lam), (mu, n, lam)


@pytest.mark.unit
def test_fit_keeps_the_published_assignment():
    assert len(candidate_assignments()) == 16
    assert PIERI_ASSIGNMENT in fit_pieri_assignment(4)
