from fractions import Fraction

import pytest

from jack_vertex.jack.oracle import (
    JackCache,
    gram_schmidt,
    jack_in_qbasis,
    jack_J,
    jack_P,
    jack_Q,
    jack_triple,
)
from jack_vertex.partitions import Partition, dominates, lower_norm, partitions_of, upper_norm
from jack_vertex.ratfield import ALPHA, ZERO, RatFunc
from jack_vertex.symfun import (
    SymFun,
    coordinates,
    from_coordinates,
    inner,
    monomial_coeff,
    proportionality,
    q_lambda,
)


@pytest.mark.unit
def test_J_of_a_two_row_in_monomials():
    assert coordinates(jack_J(Partition((2,))), "m") == {
        Partition((2,)): ALPHA + 1,
        Partition((1, 1)): 2,
    }


@pytest.mark.unit
def test_P_of_a_column():
    expected = SymFun.from_terms({Partition((1, 1)): Fraction(1, 2), Partition((2,)): Fraction(-1, 2)})
    assert jack_P(Partition((1, 1))) == expected


@pytest.mark.unit
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_norms_and_orthogonality(n):
    lams = partitions_of(n)
    for i, lam in enumerate(lams):
        J = jack_J(lam)
        assert inner(J, J) == lower_norm(lam) * upper_norm(lam)
        assert inner(jack_P(lam), jack_Q(lam)) == 1
        for mu in lams[i + 1 :]:
            assert inner(J, jack_J(mu)) == ZERO


@pytest.mark.unit
@pytest.mark.parametrize("n", [3, 4, 5])
def test_P_is_monic_and_triangular_in_monomials(n):
    for lam in partitions_of(n):
        P = jack_P(lam)
        assert monomial_coeff(P, lam) == 1
        for nu in coordinates(P, "m"):
            assert dominates(lam, nu)


@pytest.mark.unit
def test_result_does_not_depend_on_the_refinement():
    revlex = gram_schmidt(5, variant="revlex")
    conjugate = gram_schmidt(5, variant="conjugate")
    for lam in partitions_of(5):
        assert revlex[lam].J == conjugate[lam].J


@pytest.mark.unit
@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_q_basis_coordinates(lam):
    lam = Partition(lam)
    coords = jack_in_qbasis(lam)
    assert coords[lam] == 1
    assert all(dominates(mu, lam) for mu in coords)
    assert from_coordinates(coords, "q") == jack_Q(lam)


@pytest.mark.unit
@pytest.mark.parametrize("alpha", [ALPHA, RatFunc.constant(Fraction(1, 2))])
def test_q_basis_coordinates_reproduce_monomial_coefficients(alpha):
    for n in range(1, 6):
        for lam in partitions_of(n):
            coords = jack_in_qbasis(lam, alpha)
            Q = jack_Q(lam, alpha)
            for nu in partitions_of(n):
                via_q = ZERO
                for mu, a in coords.items():
                    via_q = via_q + a * monomial_coeff(q_lambda(mu, alpha), nu, alpha)
                assert via_q == monomial_coeff(Q, nu, alpha), (lam, nu)


@pytest.mark.unit
def test_q_basis_coordinates_are_not_monomial_coefficients():
    coords = jack_in_qbasis(Partition((1, 1)))
    assert coords[Partition((2,))] == -2 / (ALPHA + 1)
    assert monomial_coeff(jack_P(Partition((1, 1))), Partition((2,))) == ZERO


@pytest.mark.unit
def test_schur_specialization():
    schur_21 = SymFun.from_terms({Partition((1, 1, 1)): Fraction(1, 3), Partition((3,)): Fraction(-1, 3)})
    assert proportionality(jack_J(Partition((2, 1)), RatFunc.constant(1)), schur_21) is not None


@pytest.mark.unit
def test_specialized_parameter_matches_evaluation():
    half = RatFunc.constant(Fraction(1, 2))
    assert jack_Q(Partition((2, 1)), half) == jack_Q(Partition((2, 1))).specialize(Fraction(1, 2))
    assert jack_triple(Partition((1, 1)), half).upper_norm == Fraction(3, 4)


@pytest.mark.unit
def test_cache_computes_a_whole_weight_once():
    cache = JackCache()
    assert cache.peek(Partition((2, 1))) is None
    first = cache.get(Partition((2, 1)))
    assert len(cache) == 3
    assert cache.get(Partition((2, 1))) is first
    assert cache.peek(Partition((3,))) is not None
    cache.clear()
    assert len(cache) == 0


@pytest.mark.unit
def test_unknown_normalization():
    with pytest.raises(ValueError):
        jack_triple(Partition((1,))).normalization("S")
