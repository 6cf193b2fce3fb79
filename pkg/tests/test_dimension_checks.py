from fractions import Fraction

import pytest

from core.dimension_checks import (
    check_brauer_presentation,
    check_centralizer_duality,
    check_hecke_rank,
    check_q1_specialization,
    constraining_blocks,
    duality_dimensions,
    hecke_dimension,
    validate_q_points,
)
from core.errors import GenericityError, GuardExceededError, InvalidIndexError
from core.linalg import RingMatrix, commutant_dimension
from core.rep import rep_s_blocks
from core.report import Verdict
from tests.conftest import assert_all_pass, verdicts

POINTS = [Fraction(5, 3), Fraction(7, 2)]


def test_validate_q_points():
    assert validate_q_points(["5/3", 2]) == [Fraction(5, 3), Fraction(2)]
    with pytest.raises(GenericityError):
        validate_q_points([2])
    with pytest.raises(GenericityError):
        validate_q_points([2, 1])
    with pytest.raises(GenericityError):
        validate_q_points([2, -1])
    with pytest.raises(GenericityError):
        validate_q_points(["2", "4/2"])
    assert validate_q_points([3], minimum=1) == [Fraction(3)]


def test_brauer_presentation_symbolic_loop():
    reports = check_brauer_presentation(3)
    assert_all_pass(reports)
    ids = verdicts(reports)
    assert ids["brauer.diagram_count"] == Verdict.PASS.value
    assert ids["brauer_single_e.tau_is_permutation"] == Verdict.SKIPPED.value
    associativity = [r for r in reports if r.relation_id == "brauer.associativity"][0]
    assert associativity.detail == "3375 triples"
    assert all(r.n is None for r in reports)


def test_brauer_presentation_at_four_strands():
    reports = check_brauer_presentation(4, 4)
    assert_all_pass(reports, allow_skipped=False)
    ids = verdicts(reports)
    for name in ("tau_is_permutation", "tau_conjugates_e", "e_far_equivalence"):
        assert ids[f"brauer_single_e.{name}"] == Verdict.PASS.value
    associativity = [r for r in reports if r.relation_id == "brauer.associativity"][0]
    assert associativity.detail == "500 triples"


@pytest.mark.parametrize("l", [2, 6])
def test_brauer_presentation_range(l):
    with pytest.raises(InvalidIndexError):
        check_brauer_presentation(l)


@pytest.mark.parametrize("l,n", [(2, 2), (3, 2), (2, 3)])
def test_q1_specialization(l, n):
    reports = check_q1_specialization(l, n)
    assert_all_pass(reports, allow_skipped=False)
    assert all(r.q == "1" for r in reports)


def test_q1_homomorphism_covers_all_pairs():
    reports = check_q1_specialization(3, 3)
    phi = [r for r in reports if r.relation_id == "q1.phi_homomorphism"][0]
    assert phi.passed
    assert phi.detail == "225 diagram pairs, 0 inconsistent"


def test_q1_homomorphism_skipped_for_large_l():
    reports = check_q1_specialization(4, 2)
    assert verdicts(reports)["q1.phi_homomorphism"] == Verdict.SKIPPED.value


@pytest.mark.parametrize("l,n,dim", [(2, 3, 2), (3, 4, 6)])
def test_hecke_rank(l, n, dim):
    assert hecke_dimension(l, n, Fraction(5, 3)) == dim
    report = check_hecke_rank(l, n, POINTS)
    assert report.passed
    assert report.detail == f"dim={dim} expected={dim}"
    assert report.q == "5/3,7/2"


def test_hecke_rank_requires_generic_points():
    with pytest.raises(GenericityError):
        check_hecke_rank(2, 3, [1])
    with pytest.raises(InvalidIndexError):
        check_hecke_rank(3, 3, POINTS)


def test_duality_observed_when_n_exceeds_l():
    assert duality_dimensions(2, 3, Fraction(5, 3)) == (3, 3)
    report = check_centralizer_duality(2, 3, POINTS)
    assert report.passed
    assert report.detail == "A=3 C=3 duality observed"


@pytest.mark.parametrize("l,n,algebra,commutant", [(2, 2, 3, 6), (3, 2, 10, 20)])
def test_duality_containment_without_equality(l, n, algebra, commutant):
    for q in POINTS:
        assert duality_dimensions(l, n, q) == (algebra, commutant)
    report = check_centralizer_duality(l, n, POINTS)
    assert report.passed
    assert report.detail == f"A={algebra} C={commutant} duality not observed"


def test_constraining_blocks_drop_trivial_ones():
    q = Fraction(5, 3)
    identity = RingMatrix.identity(4, "rational")
    kept = constraining_blocks(2, 2, q)
    assert kept
    assert all(not b.is_zero() and b != identity for b in kept)
    every_block = [b.specialize(q) for row in rep_s_blocks(2, 2) for b in row]
    assert commutant_dimension(kept) == commutant_dimension(every_block) == 6


def test_duality_guards():
    with pytest.raises(InvalidIndexError):
        duality_dimensions(1, 2, Fraction(2))
    with pytest.raises(GuardExceededError):
        duality_dimensions(4, 3, Fraction(2))
    with pytest.raises(GuardExceededError):
        duality_dimensions(5, 2, Fraction(2))
