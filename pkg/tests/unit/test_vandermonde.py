from fractions import Fraction
from itertools import permutations, product

import pytest

from jack_vertex.errors import ResourceGuardError
from jack_vertex.jack.oracle import jack_Q
from jack_vertex.partitions import Partition
from jack_vertex.symfun import SymFun
from jack_vertex.vandermonde import (
    apply_delta_q,
    delta_coefficient,
    dyson_constant,
    qbasis_delta_coefficient,
    expand_delta,
    expand_delta_above,
    measured_scalar,
    paired_coefficient,
    parameter,
    printed_near_rectangle_scalar,
    prop39_exponent,
    prop39_values,
    x_prime_image,
    x_prime_rank,
)
from jack_vertex.vandermonde.action import delta_q_terms


@pytest.mark.unit
def test_expansion_for_two_variables():
    assert dict(expand_delta(2, 1).terms) == {(0, 0): 2, (1, -1): -1, (-1, 1): -1}


@pytest.mark.unit
@pytest.mark.parametrize("s,t,expected", [(3, 1, 6), (3, 2, 90), (4, 2, 2520), (2, 3, 20)])
def test_constant_term_is_the_dyson_number(s, t, expected):
    assert expand_delta(s, t).constant_term() == expected
    assert dyson_constant(s, t) == expected


@pytest.mark.unit
def test_expansion_is_symmetric_and_balanced():
    terms = expand_delta(3, 2).terms
    for beta, coeff in terms.items():
        assert sum(beta) == 0
        assert terms[tuple(-b for b in beta)] == coeff
        for perm in permutations(beta):
            assert terms[perm] == coeff


@pytest.mark.unit
def test_guard_and_argument_checks():
    with pytest.raises(ResourceGuardError) as info:
        expand_delta(5, 3, max_st=12)
    assert (info.value.requested, info.value.bound) == (15, 12)
    with pytest.raises(ValueError):
        delta_coefficient((1, 0), 2, 1)
    with pytest.raises(ValueError):
        delta_coefficient((1, -1, 0), 2, 1)
    with pytest.raises(ValueError):
        expand_delta(0, 1)


@pytest.mark.unit
@pytest.mark.parametrize(
    "s,t,which,i,expected",
    [
        (2, 1, "general_i", 1, -1),
        (3, 2, "general_i", 1, -36),
        (4, 1, "general_i", 2, 4),
        (3, 1, "two_two", 1, -1),
        (3, 2, "two_two", 1, -22),
        (3, 1, "one_one_two", 1, 2),
        (3, 2, "one_one_two", 1, 48),
        (4, 1, "one_one_two", 1, 4),
    ],
)
def test_closed_forms_match_direct_expansion(s, t, which, i, expected):
    assert prop39_values(s, t, which, i) == expected
    assert delta_coefficient(prop39_exponent(s, which, i), s, t) == expected


@pytest.mark.unit
@pytest.mark.parametrize(
    "s,t,expected", [(3, 1, Fraction(4, 3)), (3, 2, Fraction(32)), (4, 1, Fraction(5, 2))]
)
def test_printed_one_one_two_reading_disagrees(s, t, expected):
    printed = prop39_values(s, t, "one_one_two", reading="printed")
    assert printed == expected
    assert printed != delta_coefficient(prop39_exponent(s, "one_one_two"), s, t)


@pytest.mark.unit
def test_closed_form_argument_checks():
    with pytest.raises(ValueError):
        prop39_exponent(3, "general_i", 2)
    with pytest.raises(ValueError):
        prop39_exponent(2, "one_one_two")
    with pytest.raises(ValueError):
        prop39_values(3, 1, "one_one_two", reading="other")


@pytest.mark.unit
def test_delta_acting_on_q_products():
    assert delta_q_terms((1, 1), 1) == {Partition((1, 1)): 2, Partition((2,)): -2}
    one = parameter(1)
    expected = SymFun.from_terms({Partition((1, 1)): 1, Partition((2,)): -1})
    assert apply_delta_q((1, 1), 1) == expected
    assert delta_q_terms((), 1) == {Partition(): 1}
    assert one == 1
    with pytest.raises(ValueError):
        apply_delta_q((1, -1), 1)
    with pytest.raises(ValueError):
        parameter(0)


@pytest.mark.unit
def test_x_prime_image_of_a_column():
    expected = SymFun.from_terms({Partition((1, 1)): Fraction(1, 2), Partition((2,)): Fraction(-1, 2)})
    assert x_prime_image(Partition((1, 1)), 1) == expected


@pytest.mark.unit
@pytest.mark.parametrize("t", [1, 2])
def test_x_prime_of_a_rectangle_is_Q(t):
    assert x_prime_image(Partition((2, 2)), t) == jack_Q(Partition((2, 2)), parameter(t))
    assert measured_scalar(Partition((1, 1)), t) == 1


@pytest.mark.unit
def test_near_rectangle_scalar_is_measured_not_printed():
    assert measured_scalar(Partition((2, 1)), 1) == Fraction(1, 2)
    assert measured_scalar(Partition((2, 1)), 2) == Fraction(1, 3)
    assert printed_near_rectangle_scalar(1, 1) == Fraction(-1, 4)
    assert printed_near_rectangle_scalar(1, 2) == Fraction(-2, 5)
    assert measured_scalar(Partition((2, 1)), 1) != printed_near_rectangle_scalar(1, 1)


@pytest.mark.unit
@pytest.mark.parametrize("n,expected", [(2, 2), (3, 3), (4, 5)])
def test_x_prime_images_are_independent(n, expected):
    assert x_prime_rank(n, 1) == expected


@pytest.mark.unit
def test_coefficient_from_q_expansion_of_a_rectangle():
    assert qbasis_delta_coefficient((1, -1), 2, 1) == -1
    assert qbasis_delta_coefficient((-1, 1), 2, 1) == delta_coefficient((1, -1), 2, 1)
    with pytest.raises(ValueError):
        qbasis_delta_coefficient((1, 0), 2, 1)


@pytest.mark.unit
@pytest.mark.parametrize("s,t", [(2, 1), (3, 1), (3, 2)])
def test_q_route_agrees_on_unsorted_exponents(s, t):
    checked = 0
    for beta in product(range(-2, 3), repeat=s):
        if sum(beta) != 0 or list(beta) == sorted(beta, reverse=True):
            continue
        assert qbasis_delta_coefficient(beta, s, t) == delta_coefficient(beta, s, t), beta
        checked += 1
    assert checked > 0
    assert delta_coefficient((-1, 1), 2, 1) == qbasis_delta_coefficient((-1, 1), 2, 1) == -1


@pytest.mark.unit
@pytest.mark.parametrize("s,t,floor", [(3, 1, (-1, -1, -1)), (3, 2, (-1, 0, -2)), (4, 1, (0, -1, -1, 0))])
def test_truncated_expansion_keeps_exactly_the_terms_above_the_floor(s, t, floor):
    full = expand_delta(s, t).terms
    expected = {
        beta: coeff for beta, coeff in full.items() if all(b >= f for b, f in zip(beta, floor))
    }
    assert dict(expand_delta_above(s, t, floor).terms) == expected
    with pytest.raises(ValueError):
        expand_delta_above(s, t, floor[:-1])


@pytest.mark.unit
def test_paired_coefficient_routes_agree():
    direct, via_q = paired_coefficient(Partition((1,)), Partition((1,)), 2, 1)
    assert direct == via_q == -1
    direct, via_q = paired_coefficient(Partition((1,)), Partition((1,)), 3, 2)
    assert direct == via_q
    with pytest.raises(ValueError):
        paired_coefficient(Partition((2,)), Partition((1,)), 2, 1)
