"""
Verification engine: dispatches a suite at (n, l) and returns its relation reports.
"""
import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from config import verify_config as cfg
from core import dimension_checks, relation_suites
from core.errors import InvalidIndexError, UnknownNameError
from core.report import Check, RelationReport, SuiteHooks, SuiteId, Verdict, evaluate_checks
from core.ring import Q, parse_rational

logger = logging.getLogger("QBrauer.verify")

_INDEX_RE = re.compile(r"\[[^\]]*\]$")


@dataclass(frozen=True)
class SuiteSpec:
    builder: Callable
    uses_n: bool = True
    uses_l: bool = True
    min_l: int = 1
    symbolic: bool = True   # builder returns Checks rather than reports


SUITES: Dict[SuiteId, SuiteSpec] = {
    SuiteId.YANG_BAXTER: SuiteSpec(relation_suites.yang_baxter, uses_l=False),
    SuiteId.RTT_VECTOR: SuiteSpec(relation_suites.rtt_vector),
    SuiteId.REFLECTION_S: SuiteSpec(relation_suites.reflection_S),
    SuiteId.S_SHAPE: SuiteSpec(relation_suites.s_shape),
    SuiteId.DEF_2_3: SuiteSpec(relation_suites.def_2_3, min_l=2),
    SuiteId.DERIVED_2_4: SuiteSpec(relation_suites.derived_2_4, min_l=2),
    SuiteId.PROP_4_1: SuiteSpec(relation_suites.prop_4_1, min_l=2),
    SuiteId.THM_4_2_COMMUTE: SuiteSpec(relation_suites.thm_4_2_commute, min_l=2),
    SuiteId.PROOF_IDENTITIES: SuiteSpec(relation_suites.proof_identities, uses_l=False),
    SuiteId.BRAUER_PRESENTATION: SuiteSpec(dimension_checks.check_brauer_presentation, uses_n=False,
                                           min_l=3, symbolic=False),
    SuiteId.Q1_SPECIALIZATION: SuiteSpec(dimension_checks.check_q1_specialization, min_l=2, symbolic=False),
    SuiteId.HECKE_RANK: SuiteSpec(dimension_checks.check_hecke_rank, min_l=2, symbolic=False),
    SuiteId.CENTRALIZER_DUALITY: SuiteSpec(dimension_checks.check_centralizer_duality, min_l=2, symbolic=False),
}


def default_q_points() -> List:
    return [parse_rational(p) for p in cfg.Q_POINTS.split(",") if p.strip()]


def cell_parameters(suite: SuiteId, n: int, l: int):
    """(n, l) as recorded in reports: parameters a suite ignores are dropped"""
    spec = SUITES[suite]
    return (n if spec.uses_n else None), (l if spec.uses_l else None)


def _skip(suite: SuiteId, n, l, reason: str) -> List[RelationReport]:
    logger.info("skipped %s (n=%s l=%s): %s", suite.value, n, l, reason)
    return [RelationReport(suite.value, "*", n, l, Verdict.SKIPPED.value, detail=reason)]


def _admissibility(suite: SuiteId, n: int, l: Optional[int]) -> Optional[str]:
    spec = SUITES[suite]
    if spec.uses_l and (l is None or l < spec.min_l):
        return f"needs l >= {spec.min_l}"
    if suite is SuiteId.BRAUER_PRESENTATION and l > 5:
        return "needs l <= 5"
    if suite is SuiteId.HECKE_RANK and l >= n:
        return "needs l < n"
    if suite is SuiteId.CENTRALIZER_DUALITY and n ** l > cfg.MAX_DUALITY_SPACE:
        return f"needs n^l <= {cfg.MAX_DUALITY_SPACE}"
    return None


def suite_checks(suite: SuiteId, n: int, l: Optional[int], hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    spec = SUITES[suite]
    if not spec.symbolic:
        raise UnknownNameError(f"{suite.value} does not produce symbolic residuals")
    return spec.builder(n, l, hooks)


def verify_relation_suite(suite, n: int, l: Optional[int] = None, hooks: SuiteHooks = SuiteHooks(),
                          q_points: Optional[Sequence] = None) -> List[RelationReport]:
    """
    One report per relation instance. Cells the suite cannot run at (index requirements,
    l >= n for the Hecke rank, commutant size) give a single skipped report.
    """
    suite = SuiteId.parse(suite) if isinstance(suite, str) else suite
    if n < cfg.MIN_LOCAL_DIM:
        raise InvalidIndexError(f"n must be >= {cfg.MIN_LOCAL_DIM}, got {n}")
    spec = SUITES[suite]
    rn, rl = cell_parameters(suite, n, l)
    reason = _admissibility(suite, n, l)
    if reason is not None:
        return _skip(suite, rn, rl, reason)

    logger.debug("running %s at n=%s l=%s", suite.value, rn, rl)
    if spec.symbolic:
        return evaluate_checks(suite_checks(suite, n, l, hooks), suite.value, rn, rl)
    if suite is SuiteId.BRAUER_PRESENTATION:
        return spec.builder(l, Q)
    if suite is SuiteId.Q1_SPECIALIZATION:
        return spec.builder(l, n)
    points = list(q_points) if q_points is not None else default_q_points()
    return [spec.builder(l, n, points)]


def relation_residual(suite, n: int, l: Optional[int], relation_id: str, hooks: SuiteHooks = SuiteHooks()):
    """Full residual of one symbolic relation instance, e.g. ("def_2_3", 2, 4, "def23.tau_relation")"""
    suite = SuiteId.parse(suite) if isinstance(suite, str) else suite
    for check in suite_checks(suite, n, l, hooks):
        if check.relation_id == relation_id:
            if check.residual_fn is None:
                raise InvalidIndexError(f"{relation_id} is skipped at n={n} l={l}: {check.skip_reason}")
            return check.residual_fn()
    raise UnknownNameError(f"no relation {relation_id!r} in {suite.value} at n={n} l={l}")


# widest cell every symbolic family is admissible at; builders are lazy so this is cheap
_LEDGER_CELL = (2, 5)

STRUCTURAL_RELATIONS = {
    SuiteId.BRAUER_PRESENTATION: ["brauer_single_e.tau_is_permutation", "brauer_single_e.tau_conjugates_e",
                                  "brauer_single_e.e_far_equivalence",
                                  "brauer.diagram_count", "brauer.associativity"],
    SuiteId.Q1_SPECIALIZATION: ["q1.sigma_is_P", "q1.e_is_Qbar", "q1.sigma_matches_diagram",
                                "q1.e_matches_diagram", "q1.Qbar_square", "q1.phi_homomorphism"],
    SuiteId.HECKE_RANK: ["hecke.span_dimension"],
    SuiteId.CENTRALIZER_DUALITY: ["duality.containment"],
}


def _family_ids(checks: Sequence[Check]) -> List[str]:
    seen: List[str] = []
    for check in checks:
        name = _INDEX_RE.sub("", check.relation_id)
        if name not in seen:
            seen.append(name)
    return seen


def coverage_ledger() -> Dict[str, List[str]]:
    """Relation family ids per suite; observational families carry an '(observed)' suffix"""
    from core.diagram import DiagramAlgebra
    from core.presentation import brauer_relations, brauer_relations_single_e

    n, l = _LEDGER_CELL
    ledger: Dict[str, List[str]] = {}
    for suite, spec in SUITES.items():
        if spec.symbolic:
            checks = spec.builder(n, l if spec.uses_l else None, SuiteHooks())
            ids = _family_ids([c for c in checks if not c.observation])
            ids += [f"{name} (observed)" for name in _family_ids([c for c in checks if c.observation])]
        else:
            ids = []
            if suite is SuiteId.BRAUER_PRESENTATION:
                alg = DiagramAlgebra(l, Q)
                ids = _family_ids(brauer_relations(alg, Q) + brauer_relations_single_e(alg, Q))
            elif suite is SuiteId.Q1_SPECIALIZATION:
                ids = _family_ids(brauer_relations(DiagramAlgebra(l, Q), Q, "q1.brauer"))
            ids += STRUCTURAL_RELATIONS[suite]
        ledger[suite.value] = ids
    return ledger
