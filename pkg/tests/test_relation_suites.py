import pytest

from core.errors import InvalidIndexError
from core.relation_suites import (
    def_2_3,
    derived_2_4,
    proof_identities,
    prop_4_1,
    reflection_S,
    rtt_vector,
    s_shape,
    thm_4_2_commute,
    yang_baxter,
)
from core.report import SuiteHooks, Verdict, evaluate_checks
from tests.conftest import assert_all_pass, verdicts


def _run(builder, n, l, hooks=SuiteHooks()):
    return evaluate_checks(builder(n, l, hooks), builder.__name__, n, l)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_yang_baxter_suite(n):
    reports = _run(yang_baxter, n, None)
    assert_all_pass(reports, allow_skipped=False)
    assert "ybe.R" in verdicts(reports)


def test_perturbed_r_is_detected():
    reports = _run(yang_baxter, 2, None, SuiteHooks(r_perturbation=(1, 2)))
    assert verdicts(reports)["ybe.R"] == Verdict.FAIL.value
    failing = [r for r in reports if r.failed]
    assert failing[0].residual_nonzeros > 0
    assert failing[0].residual_sample


def test_perturbation_outside_r_is_rejected():
    with pytest.raises(InvalidIndexError):
        yang_baxter(2, None, SuiteHooks(r_perturbation=(5, 1)))


@pytest.mark.parametrize("n,l", [(2, 1), (3, 1), (2, 2)])
def test_rtt_vector(n, l):
    reports = _run(rtt_vector, n, l)
    assert_all_pass(reports, allow_skipped=False)
    assert {"rtt.T_T", "rtt.Tbar_Tbar", "rtt.Tbar_T"} <= set(verdicts(reports))


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (3, 1)])
def test_reflection_equation(n, l):
    assert_all_pass(_run(reflection_S, n, l), allow_skipped=False)


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (3, 2)])
def test_s_shape(n, l):
    reports = _run(s_shape, n, l)
    assert_all_pass(reports, allow_skipped=False)
    assert "s_shape.upper_zero[1,2]" in verdicts(reports)


@pytest.mark.parametrize("n,l", [(2, 3), (2, 4), (3, 3), (4, 3), (2, 5), (3, 4)])
def test_quantum_brauer_relations(n, l):
    reports = _run(def_2_3, n, l)
    assert_all_pass(reports)
    expected = Verdict.PASS.value if l >= 4 else Verdict.SKIPPED.value
    assert verdicts(reports)["def23.tau_relation"] == expected


def test_tau_relation_skip_reason():
    reports = _run(def_2_3, 2, 3)
    tau = [r for r in reports if r.relation_id == "def23.tau_relation"][0]
    assert tau.detail == "needs l >= 4"


def test_wrong_loop_parameter_fails_e_square():
    reports = _run(def_2_3, 2, 3, SuiteHooks(z_shift=1))
    assert verdicts(reports)["def23.e_square"] == Verdict.FAIL.value


@pytest.mark.parametrize("n,l", [(2, 3), (2, 4), (3, 3), (4, 3), (2, 5), (3, 4)])
def test_derived_relations(n, l):
    reports = _run(derived_2_4, n, l)
    assert_all_pass(reports)
    ids = verdicts(reports)
    assert ids["eq24.e_sigma_next_e[1]"] == Verdict.PASS.value
    assert ids["eq24.e_sigmainv_prev_e[2]"] == Verdict.PASS.value


def test_far_e_commutation_is_only_observed():
    reports = _run(derived_2_4, 2, 4)
    far = [r for r in reports if r.relation_id.startswith("eq24.e_far")]
    assert far
    assert all(r.verdict == Verdict.OBSERVED.value for r in far)


@pytest.mark.parametrize("n,l", [(2, 2), (2, 3), (3, 2)])
def test_prop_4_1(n, l):
    assert_all_pass(_run(prop_4_1, n, l), allow_skipped=False)


@pytest.mark.parametrize("n,l", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_generators_commute_with_s(n, l):
    reports = _run(thm_4_2_commute, n, l)
    assert_all_pass(reports, allow_skipped=False)
    assert len(reports) == 2 * (l - 1)


@pytest.mark.parametrize("n", [2, 3])
def test_proof_chain(n):
    reports = _run(proof_identities, n, None)
    assert_all_pass(reports, allow_skipped=False)
    ids = verdicts(reports)
    for name in ("proof.degree4_forward", "proof.degree4_inverse", "proof.D_expansion",
                 "proof.combined", "proof.completion_left", "proof.completion_right", "proof.VW_identity",
                 "proof.projector_chain[5]", "proof.Qbar24_Qbar34_move"):
        assert ids[name] == Verdict.PASS.value


def test_suites_reject_too_few_legs():
    with pytest.raises(InvalidIndexError):
        def_2_3(2, 1)
    with pytest.raises(InvalidIndexError):
        rtt_vector(2, None)
