import pytest

from jack_vertex.errors import PartitionError, ResourceGuardError
from jack_vertex.jack.oracle import jack_J
from jack_vertex.lr import (
    conjugate_duality_check,
    j_n1_in_qbasis,
    complement_dominance_check,
    lr_oracle,
    make_report,
    marked_rect_lr,
    marked_rectangle,
    marked_representations,
    positivity_sweep,
    rect_lr,
)
from jack_vertex.partitions import Partition, complement, lower_norm, partitions_of, upper_norm
from jack_vertex.ratfield import ALPHA, ZERO

a = ALPHA


@pytest.mark.unit
def test_oracle_small_values():
    assert lr_oracle(Partition((1,)), Partition((1,)), Partition((1, 1))) == 2 * a * a
    assert lr_oracle(Partition((2,)), Partition((1,)), Partition((2, 2))) == ZERO
    assert lr_oracle(Partition((2,)), Partition((1,)), Partition((1, 1, 1))) == ZERO


@pytest.mark.unit
def test_oracle_is_symmetric_in_mu_and_nu():
    mu, nu, lam = Partition((2,)), Partition((1, 1)), Partition((3, 1))
    assert lr_oracle(mu, nu, lam) == lr_oracle(nu, mu, lam)


@pytest.mark.unit
@pytest.mark.parametrize(
    "rect,nu,mu,expected",
    [
        ((1, 1), (1,), (1,), 2 * a**2),
        ((2, 2), (2,), (2,), 8 * a**4 * (a + 1) * (a + 2)),
        ((2, 2), (1, 1), (1, 1), 8 * a**2 * (a + 1) * (2 * a + 1)),
        ((2, 2), (1,), (2, 1), 4 * a**3 * (a + 2) * (2 * a + 1)),
    ],
)
def test_rectangular_closed_form(rect, nu, mu, expected):
    got_mu, value = rect_lr(Partition(rect), Partition(nu))
    assert got_mu == Partition(mu)
    assert value == expected
    assert lr_oracle(Partition(mu), Partition(nu), Partition(rect)) == expected


@pytest.mark.unit
def test_rectangular_closed_form_with_empty_nu_is_the_norm():
    rect = Partition((3, 3))
    mu, value = rect_lr(rect, Partition())
    assert mu == rect
    assert value == lower_norm(rect) * upper_norm(rect)


@pytest.mark.unit
def test_rectangular_closed_form_rejects_bad_input():
    with pytest.raises(PartitionError):
        rect_lr(Partition((2, 1)), Partition((1,)))
    with pytest.raises(PartitionError):
        rect_lr(Partition((2, 2)), Partition((3,)))


@pytest.mark.unit
def test_only_the_complement_pairs_with_nu():
    rect, nu = Partition((2, 2)), Partition((1,))
    mu_bar = complement(rect, nu)
    assert lr_oracle(Partition((3,)), nu, rect) == ZERO
    assert not lr_oracle(mu_bar, nu, rect).is_zero()


@pytest.mark.unit
@pytest.mark.parametrize(
    "mu,nu,expected",
    [
        ((1,), (1, 1), 2 * a**2 * (2 * a + 1)),
        ((2,), (1,), 2 * a**3 * (a + 2)),
    ],
)
def test_marked_rectangle_resolved_reading(mu, nu, expected):
    value = marked_rect_lr(2, 2, 1, Partition(mu), Partition(nu))
    assert value == expected
    assert value == lr_oracle(Partition(mu), Partition(nu), Partition((2, 1)))


@pytest.mark.unit
def test_marked_rectangle_printed_reading_disagrees():
    printed = marked_rect_lr(2, 2, 1, Partition((1,)), Partition((1, 1)), reading="printed")
    assert printed == 2 * a**3 * (a + 1) ** 2 * (2 * a + 1)
    assert printed != lr_oracle(Partition((1,)), Partition((1, 1)), Partition((2, 1)))
    with pytest.raises(ValueError):
        marked_rect_lr(2, 2, 1, Partition((1,)), Partition((1, 1)), reading="other")


@pytest.mark.unit
def test_marked_rectangle_without_removal_is_rectangular():
    nu = Partition((1,))
    mu, value = rect_lr(Partition((2, 2)), nu)
    assert marked_rect_lr(2, 2, 0, mu, nu) == value


@pytest.mark.unit
def test_marked_rectangle_matches_oracle_everywhere():
    lam = Partition((2, 1))
    for k in range(4):
        for mu in partitions_of(k):
            for nu in partitions_of(3 - k):
                assert marked_rect_lr(2, 2, 1, mu, nu) == lr_oracle(mu, nu, lam), (mu, nu)
    assert marked_rect_lr(2, 2, 1, Partition((2,)), Partition((2,))) == ZERO


@pytest.mark.unit
def test_marked_rectangle_shapes():
    assert marked_rectangle(3, 2, 1) == Partition((3, 2))
    with pytest.raises(PartitionError):
        marked_rectangle(2, 2, 3)
    assert marked_representations(Partition((2, 2))) == [(2, 2, 0), (2, 3, 2)]
    assert marked_representations(Partition((2, 1))) == [(2, 2, 1)]
    assert marked_representations(Partition((3, 2, 1))) == []
    assert marked_representations(Partition()) == []


@pytest.mark.unit
@pytest.mark.parametrize("n", [1, 2, 3])
def test_hook_shape_in_q_basis(n):
    assert j_n1_in_qbasis(n) == jack_J(Partition((n, 1)))
    with pytest.raises(ValueError):
        j_n1_in_qbasis(0)


@pytest.mark.unit
@pytest.mark.parametrize("r,s,nu", [(2, 2, (1,)), (2, 2, (1, 1)), (3, 2, (2,))])
def test_q_pairings_against_a_rectangle_dominate_the_complement(r, s, nu):
    assert complement_dominance_check(r, s, Partition(nu)) == []


@pytest.mark.unit
@pytest.mark.parametrize(
    "mu,nu,lam",
    [((1,), (1,), (2,)), ((1,), (1,), (1, 1)), ((2,), (1,), (2, 1)), ((1,), (2,), (1, 1, 1))],
)
def test_conjugate_duality(mu, nu, lam):
    assert conjugate_duality_check(Partition(mu), Partition(nu), Partition(lam))


@pytest.mark.unit
def test_make_report_flags():
    report = make_report(Partition((1,)), Partition((1,)), Partition((2,)), 2 * a * a)
    assert report.is_polynomial and report.is_nonneg_int
    assert report.key == "1|1|2|oracle"
    negative = make_report(Partition((1,)), Partition((1,)), Partition((2,)), a - 1)
    assert negative.is_polynomial and not negative.is_nonneg_int
    with pytest.raises(ValueError):
        make_report(Partition(), Partition(), Partition(), ZERO, route="guess")


@pytest.mark.unit
def test_positivity_sweep_for_a_single_box():
    reports = positivity_sweep(Partition((1,)), 4)
    assert len(reports) == 24
    assert all(r.status == "ok" for r in reports)
    for r in reports:
        if not r.value.is_zero():
            assert r.is_nonneg_int
            assert r.corner_omega == Partition((1,))


@pytest.mark.unit
def test_positivity_sweep_for_two_one():
    seen = []
    reports = positivity_sweep(Partition((2, 1)), 5, on_report=seen.append)
    assert seen == reports
    assert all(r.status == "ok" for r in reports)
    for r in reports:
        if not r.value.is_zero() and r.corner_omega is not None:
            assert r.corner_omega == Partition((2, 1))


@pytest.mark.unit
def test_positivity_sweep_skips_known_keys_and_guards():
    first = positivity_sweep(Partition((1,)), 3)
    assert positivity_sweep(Partition((1,)), 3, skip={r.key for r in first}) == []
    with pytest.raises(ResourceGuardError):
        positivity_sweep(Partition((1,)), 500)
