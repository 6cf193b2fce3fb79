"""
Checks that need diagrams, rational specializations or rank computations rather than a
single symbolic residual.
"""
import logging
import math
import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from config import verify_config as cfg
from core.diagram import (
    DiagramAlgebra,
    DiagramElement,
    brauer_generator,
    diagram_compose,
    diagram_to_operator,
    double_factorial_odd,
    enumerate_diagrams,
    permutation_diagram,
)
from core.errors import GenericityError, GuardExceededError, InvalidIndexError
from core.linalg import RingMatrix, commutant_dimension, embed, span_dimension
from core.presentation import brauer_relations, brauer_relations_single_e, family, single
from core.report import RelationReport, Verdict, evaluate_checks
from core.rep import ImageAlgebra, RepContext, rep_s_blocks
from core.ring import Q
from core.rmatrix import operator

logger = logging.getLogger("QBrauer.dimensions")

ASSOCIATIVITY_SAMPLES = 500
ASSOCIATIVITY_SEED = 20240229


def validate_q_points(q_points: Sequence, minimum: int = 2) -> List[Fraction]:
    points = [Fraction(p) for p in q_points]
    if len(points) < minimum:
        raise GenericityError(f"need at least {minimum} specialization points, got {len(points)}")
    bad = [p for p in points if p in cfg.FORBIDDEN_Q_POINTS]
    if bad:
        raise GenericityError(f"q = {', '.join(str(p) for p in bad)} is not a generic specialization")
    if len(set(points)) != len(points):
        raise GenericityError("specialization points must be distinct")
    return points


def _points_text(points: Sequence[Fraction]) -> str:
    return ",".join(str(p) for p in points)


def _counted_report(suite: str, relation_id: str, n, l, mismatches: int, sample: List[str],
                    detail: str, q=None) -> RelationReport:
    verdict = Verdict.PASS if mismatches == 0 else Verdict.FAIL
    return RelationReport(suite=suite, relation_id=relation_id, n=n, l=l, verdict=verdict.value, q=q,
                          residual_nonzeros=mismatches, residual_sample=sample[: cfg.RESIDUAL_SAMPLE_SIZE],
                          detail=detail)


# ----------------------------------------------------------------------
# classical Brauer algebra on diagrams
# ----------------------------------------------------------------------


def _associativity(l: int, eta) -> RelationReport:
    alg = DiagramAlgebra(l, eta)
    diagrams = enumerate_diagrams(l)
    if l <= cfg.MAX_PAIRWISE_DIAGRAM_SIZE:
        triples = [(a, b, c) for a in diagrams for b in diagrams for c in diagrams]
    else:
        rng = random.Random(ASSOCIATIVITY_SEED)
        triples = [tuple(rng.choice(diagrams) for _ in range(3)) for _ in range(ASSOCIATIVITY_SAMPLES)]
    bad = []
    for a, b, c in triples:
        x, y, z = DiagramElement.of(a), DiagramElement.of(b), DiagramElement.of(c)
        if alg.mul(alg.mul(x, y), z) != alg.mul(x, alg.mul(y, z)):
            bad.append(f"({a}) ({b}) ({c})")
    return _counted_report("brauer_presentation", "brauer.associativity", None, l, len(bad), bad,
                           f"{len(triples)} triples")


def check_brauer_presentation(l: int, eta=Q) -> List[RelationReport]:
    """Both diagram presentations of B_l(eta), the tau identities and structural sanity"""
    if not 3 <= l <= 5:
        raise InvalidIndexError(f"brauer presentation checks need 3 <= l <= 5, got l={l}")
    alg = DiagramAlgebra(l, eta)
    k = l - 1

    def tau_is_permutation():
        perm = list(range(1, l + 1))
        perm[k - 3], perm[k - 1] = perm[k - 1], perm[k - 3]
        perm[k - 2], perm[k] = perm[k], perm[k - 2]
        return alg.tau() - DiagramElement.of(permutation_diagram(perm))

    def e_shifted():
        return alg.mul(alg.tau(), alg.e(k), alg.tau())

    checks = brauer_relations(alg, eta) + brauer_relations_single_e(alg, eta)
    need_four = "needs l >= 4"
    checks += single("brauer_single_e", "tau_is_permutation", tau_is_permutation, admissible=l >= 4, need=need_four)
    checks += single("brauer_single_e", "tau_conjugates_e", lambda: e_shifted() - alg.e(k - 2),
                     admissible=l >= 4, need=need_four)
    checks += single("brauer_single_e", "e_far_equivalence",
                     lambda: alg.mul(e_shifted(), alg.e(k)) - alg.mul(alg.e(k), e_shifted()),
                     admissible=l >= 4, need=need_four)
    reports = evaluate_checks(checks, "brauer_presentation", None, l)

    count = len(enumerate_diagrams(l))
    expected = double_factorial_odd(l)
    reports.append(_counted_report("brauer_presentation", "brauer.diagram_count", None, l,
                                   abs(count - expected), [f"count={count}"] if count != expected else [],
                                   f"{count} diagrams, expected {expected}"))
    reports.append(_associativity(l, eta))
    return reports


# ----------------------------------------------------------------------
# q = 1
# ----------------------------------------------------------------------


def _phi_homomorphism(l: int, n: int) -> RelationReport:
    diagrams = enumerate_diagrams(l)
    images = {d: diagram_to_operator(d, n) for d in diagrams}
    bad, total = [], 0
    for d1 in diagrams:
        for d2 in diagrams:
            loops, d = diagram_compose(d1, d2)
            residual = images[d1] @ images[d2] - images[d].scale(Fraction(n) ** loops)
            if not residual.is_zero():
                total += residual.nnz
                bad.append(f"({d1}) ({d2})")
    pairs = len(diagrams) ** 2
    return _counted_report("q1_specialization", "q1.phi_homomorphism", n, l, total, bad,
                           f"{pairs} diagram pairs, {len(bad)} inconsistent", q="1")


def check_q1_specialization(l: int, n: int) -> List[RelationReport]:
    ctx = RepContext(n, l)
    alg = ImageAlgebra(ctx, at=1)
    space = ctx.space
    p_one = operator("P", n).specialize(1)
    qbar_one = operator("Qbar", n).specialize(1)

    def qbar_square():
        return qbar_one @ qbar_one - qbar_one.scale(n)

    gens = range(1, l)
    checks = family("q1", "sigma_is_P", gens, lambda i: alg.sigma(i) - embed(p_one, (i, i + 1), space),
                    "needs l >= 2")
    checks += family("q1", "e_is_Qbar", gens, lambda i: alg.e(i) - embed(qbar_one, (i, i + 1), space),
                     "needs l >= 2")
    checks += family("q1", "sigma_matches_diagram", gens,
                     lambda i: alg.sigma(i) - diagram_to_operator(brauer_generator("sigma", i, l), n),
                     "needs l >= 2")
    checks += family("q1", "e_matches_diagram", gens,
                     lambda i: alg.e(i) - diagram_to_operator(brauer_generator("e", i, l), n),
                     "needs l >= 2")
    checks += single("q1", "Qbar_square", qbar_square)
    checks += brauer_relations(alg, n, "q1.brauer")
    reports = evaluate_checks(checks, "q1_specialization", n, l, q="1")

    if l <= cfg.MAX_PAIRWISE_DIAGRAM_SIZE:
        reports.append(_phi_homomorphism(l, n))
    else:
        reports.append(RelationReport("q1_specialization", "q1.phi_homomorphism", n, l, Verdict.SKIPPED.value,
                                      q="1", detail=f"needs l <= {cfg.MAX_PAIRWISE_DIAGRAM_SIZE}"))
    return reports


# ----------------------------------------------------------------------
# ranks at rational points
# ----------------------------------------------------------------------


def _agreeing(values: List, points: Sequence[Fraction], what: str):
    if len(set(values)) > 1:
        found = ", ".join(f"q={p}: {v}" for p, v in zip(points, values))
        raise GenericityError(f"{what} differs between specialization points ({found})")
    return values[0]


def hecke_dimension(l: int, n: int, at) -> int:
    alg = ImageAlgebra(RepContext(n, l), at=at)
    return span_dimension([alg.sigma(i) for i in range(1, l)])


def check_hecke_rank(l: int, n: int, q_points: Sequence) -> RelationReport:
    points = validate_q_points(q_points)
    if not 2 <= l < n:
        raise InvalidIndexError(f"hecke rank check needs 2 <= l < n, got l={l} n={n}")
    dim = _agreeing([hecke_dimension(l, n, p) for p in points], points, "Hecke image dimension")
    expected = math.factorial(l)
    logger.info("hecke image n=%d l=%d: %d (expected %d)", n, l, dim, expected)
    sample = [] if dim == expected else [f"dim={dim}", f"expected={expected}"]
    return _counted_report("hecke_rank", "hecke.span_dimension", n, l, abs(dim - expected), sample,
                           f"dim={dim} expected={expected}", q=_points_text(points))


def duality_dimensions(l: int, n: int, at) -> Tuple[int, int]:
    """(A, C): dimension of the B_l(q^n, q) image and of the commutant of the s_ij images"""
    if l < 2:
        raise InvalidIndexError(f"duality dimensions need l >= 2, got l={l}")
    if n ** l > cfg.MAX_DUALITY_SPACE:
        raise GuardExceededError(f"duality cell on n^l = {n ** l} exceeds {cfg.MAX_DUALITY_SPACE}")
    alg = ImageAlgebra(RepContext(n, l), at=at)
    generators = [alg.sigma(i) for i in range(1, l)] + [alg.e(l - 1)]
    algebra_dim = span_dimension(generators)
    commutant_dim = commutant_dimension(constraining_blocks(n, l, at))
    logger.debug("duality n=%d l=%d q=%s: A=%d C=%d", n, l, at, algebra_dim, commutant_dim)
    return algebra_dim, commutant_dim


def constraining_blocks(n: int, l: int, at) -> List[RingMatrix]:
    """Specialized s_ij blocks minus the zero and identity ones, which every X commutes with"""
    identity = RingMatrix.identity(n ** l, "rational")
    blocks = [b.specialize(at) for row in rep_s_blocks(n, l) for b in row]
    kept = [b for b in blocks if not b.is_zero() and b != identity]
    return kept or [identity]


def check_centralizer_duality(l: int, n: int, q_points: Sequence) -> RelationReport:
    points = validate_q_points(q_points)
    pairs = [duality_dimensions(l, n, p) for p in points]
    a, c = _agreeing(pairs, points, "(algebra, commutant) dimension")
    observed = "duality observed" if a == c else "duality not observed"
    sample = [] if a <= c else [f"A={a}", f"C={c}"]
    return _counted_report("centralizer_duality", "duality.containment", n, l, 0 if a <= c else a - c, sample,
                           f"A={a} C={c} {observed}", q=_points_text(points))
