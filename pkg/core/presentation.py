"""
Relation builders shared by the diagram algebra and the representation images.

Each builder takes an adapter exposing l, identity(), sigma(i), sigma_inv(i), e(i), tau(),
tau_inv(), mul(*xs), add(*xs), sub(a, b) and scale(c, x), and returns Check objects whose
residual is lhs - rhs. Indexed families produce one check per admissible index; a family
with no admissible index produces a single skipped check.
"""
from functools import partial
from typing import Callable, Iterable, List, Sequence, Tuple, Union

from core.report import Check
from core.ring import Q, Q_INV, QUANTUM_DIFF, LaurentPoly, loop_value

Index = Union[int, Tuple[int, ...]]


def _fmt(index: Index) -> str:
    if isinstance(index, tuple):
        return ",".join(str(i) for i in index)
    return str(index)


def family(prefix: str, name: str, indices: Iterable[Index], build: Callable, need: str,
           observation: bool = False) -> List[Check]:
    indices = list(indices)
    if not indices:
        return [Check(f"{prefix}.{name}", skip_reason=need)]
    return [
        Check(f"{prefix}.{name}[{_fmt(idx)}]", residual_fn=partial(build, idx), observation=observation)
        for idx in indices
    ]


def single(prefix: str, name: str, build: Callable, admissible: bool = True, need: str = "") -> List[Check]:
    if not admissible:
        return [Check(f"{prefix}.{name}", skip_reason=need)]
    return [Check(f"{prefix}.{name}", residual_fn=build)]


def far_pairs(l: int) -> List[Tuple[int, int]]:
    """i < j <= l-1 with |i - j| > 1"""
    return [(i, j) for i in range(1, l) for j in range(i + 2, l)]


def far_ordered_pairs(l: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, l) for j in range(1, l) if abs(i - j) > 1]


def _commutator(alg, x, y):
    return alg.sub(alg.mul(x, y), alg.mul(y, x))


# ----------------------------------------------------------------------
# classical presentation with all e_i as generators
# ----------------------------------------------------------------------


def brauer_relations(alg, eta, prefix: str = "brauer") -> List[Check]:
    l = alg.l
    gens = range(1, l)
    inner = range(1, l - 1)
    s, e, mul, sub = alg.sigma, alg.e, alg.mul, alg.sub

    checks: List[Check] = []
    checks += family(prefix, "sigma_square", gens,
                     lambda i: sub(mul(s(i), s(i)), alg.identity()), "needs l >= 2")
    checks += family(prefix, "e_square", gens,
                     lambda i: sub(mul(e(i), e(i)), alg.scale(eta, e(i))), "needs l >= 2")
    checks += family(prefix, "sigma_e", gens, lambda i: sub(mul(s(i), e(i)), e(i)), "needs l >= 2")
    checks += family(prefix, "e_sigma", gens, lambda i: sub(mul(e(i), s(i)), e(i)), "needs l >= 2")
    checks += family(prefix, "sigma_far", far_pairs(l),
                     lambda ij: _commutator(alg, s(ij[0]), s(ij[1])), "needs l >= 4")
    checks += family(prefix, "e_far", far_pairs(l),
                     lambda ij: _commutator(alg, e(ij[0]), e(ij[1])), "needs l >= 4")
    checks += family(prefix, "sigma_e_far", far_ordered_pairs(l),
                     lambda ij: _commutator(alg, s(ij[0]), e(ij[1])), "needs l >= 4")
    checks += family(prefix, "sigma_braid", inner,
                     lambda i: sub(mul(s(i), s(i + 1), s(i)), mul(s(i + 1), s(i), s(i + 1))), "needs l >= 3")
    checks += family(prefix, "e_e_e", inner, lambda i: sub(mul(e(i), e(i + 1), e(i)), e(i)), "needs l >= 3")
    checks += family(prefix, "e_next_e_next", inner,
                     lambda i: sub(mul(e(i + 1), e(i), e(i + 1)), e(i + 1)), "needs l >= 3")
    checks += family(prefix, "sigma_e_e", inner,
                     lambda i: sub(mul(s(i), e(i + 1), e(i)), mul(s(i + 1), e(i))), "needs l >= 3")
    checks += family(prefix, "e_e_sigma", inner,
                     lambda i: sub(mul(e(i + 1), e(i), s(i + 1)), mul(e(i + 1), s(i))), "needs l >= 3")
    return checks


# ----------------------------------------------------------------------
# classical presentation with a single e_{l-1}
# ----------------------------------------------------------------------


def brauer_relations_single_e(alg, eta, prefix: str = "brauer_single_e") -> List[Check]:
    l = alg.l
    k = l - 1
    s, e, mul, sub = alg.sigma, alg.e, alg.mul, alg.sub

    checks: List[Check] = []
    checks += family(prefix, "sigma_square", range(1, l),
                     lambda i: sub(mul(s(i), s(i)), alg.identity()), "needs l >= 2")
    checks += family(prefix, "sigma_far", far_pairs(l),
                     lambda ij: _commutator(alg, s(ij[0]), s(ij[1])), "needs l >= 4")
    checks += family(prefix, "sigma_braid", range(1, l - 1),
                     lambda i: sub(mul(s(i), s(i + 1), s(i)), mul(s(i + 1), s(i), s(i + 1))), "needs l >= 3")
    checks += single(prefix, "e_square", lambda: sub(mul(e(k), e(k)), alg.scale(eta, e(k))))
    checks += single(prefix, "sigma_e", lambda: sub(mul(s(k), e(k)), e(k)))
    checks += single(prefix, "e_sigma", lambda: sub(mul(e(k), s(k)), e(k)))
    checks += single(prefix, "e_sigma_e", lambda: sub(mul(e(k), s(k - 1), e(k)), e(k)),
                     admissible=l >= 3, need="needs l >= 3")
    checks += family(prefix, "sigma_e_far", range(1, k - 1),
                     lambda i: _commutator(alg, s(i), e(k)), "needs l >= 4")
    checks += single(
        prefix, "tau_relation",
        lambda: sub(mul(e(k), alg.tau(), e(k), alg.tau()), mul(alg.tau(), e(k), alg.tau(), e(k))),
        admissible=l >= 4, need="needs l >= 4",
    )
    return checks


# ----------------------------------------------------------------------
# quantum Brauer algebra with z = q^m
# ----------------------------------------------------------------------


def _z(z_exponent: int) -> Tuple[LaurentPoly, LaurentPoly]:
    return LaurentPoly.monomial(z_exponent), LaurentPoly.monomial(-z_exponent)


def quantum_relations(alg, z_exponent: int, prefix: str = "def23") -> List[Check]:
    """Defining relations with generators s_1..s_{l-1}, e_{l-1}"""
    l = alg.l
    k = l - 1
    z, z_inv = _z(z_exponent)
    loop = loop_value(z_exponent)
    s, e, mul, sub, scale = alg.sigma, alg.e, alg.mul, alg.sub, alg.scale

    def hecke(i):
        return sub(mul(s(i), s(i)), alg.add(scale(QUANTUM_DIFF, s(i)), alg.identity()))

    def tau_relation():
        tau, tau_inv = alg.tau(), alg.tau_inv()
        weighted = alg.add(scale(z * Q, tau_inv), scale(z_inv * Q_INV, tau))
        plain = alg.add(scale(Q, tau_inv), scale(Q_INV, tau))
        return sub(mul(e(k), weighted, e(k), plain), mul(plain, e(k), weighted, e(k)))

    checks: List[Check] = []
    checks += family(prefix, "hecke_quadratic", range(1, l), hecke, "needs l >= 2")
    checks += family(prefix, "sigma_far", far_pairs(l),
                     lambda ij: _commutator(alg, s(ij[0]), s(ij[1])), "needs l >= 4")
    checks += family(prefix, "sigma_braid", range(1, l - 1),
                     lambda i: sub(mul(s(i), s(i + 1), s(i)), mul(s(i + 1), s(i), s(i + 1))), "needs l >= 3")
    checks += single(prefix, "e_square", lambda: sub(mul(e(k), e(k)), scale(loop, e(k))))
    checks += single(prefix, "sigma_e", lambda: sub(mul(s(k), e(k)), scale(Q, e(k))))
    checks += single(prefix, "e_sigma", lambda: sub(mul(e(k), s(k)), scale(Q, e(k))))
    checks += single(prefix, "e_sigma_e", lambda: sub(mul(e(k), s(k - 1), e(k)), scale(z, e(k))),
                     admissible=l >= 3, need="needs l >= 3")
    checks += family(prefix, "sigma_e_far", range(1, k - 1),
                     lambda i: _commutator(alg, s(i), e(k)), "needs l >= 4")
    checks += single(prefix, "tau_relation", tau_relation, admissible=l >= 4, need="needs l >= 4")
    return checks


def derived_relations(alg, z_exponent: int, prefix: str = "eq24") -> List[Check]:
    """Consequences for the inductively defined e_1..e_{l-1}"""
    l = alg.l
    z, z_inv = _z(z_exponent)
    zq = z * Q
    loop = loop_value(z_exponent)
    s, si, e, mul, sub, scale = alg.sigma, alg.sigma_inv, alg.e, alg.mul, alg.sub, alg.scale
    gens = range(1, l)
    inner = range(1, l - 1)
    upper = range(2, l)

    checks: List[Check] = []
    checks += family(prefix, "e_square", gens, lambda i: sub(mul(e(i), e(i)), scale(loop, e(i))), "needs l >= 2")
    checks += family(prefix, "sigma_e", gens, lambda i: sub(mul(s(i), e(i)), scale(Q, e(i))), "needs l >= 2")
    checks += family(prefix, "e_sigma", gens, lambda i: sub(mul(e(i), s(i)), scale(Q, e(i))), "needs l >= 2")
    checks += family(prefix, "sigma_e_far", far_ordered_pairs(l),
                     lambda ij: _commutator(alg, s(ij[0]), e(ij[1])), "needs l >= 4")
    checks += family(prefix, "e_e_e", inner, lambda i: sub(mul(e(i), e(i + 1), e(i)), e(i)), "needs l >= 3")
    checks += family(prefix, "e_next_e_next", inner,
                     lambda i: sub(mul(e(i + 1), e(i), e(i + 1)), e(i + 1)), "needs l >= 3")
    checks += family(prefix, "e_sigma_next_e", inner,
                     lambda i: sub(mul(e(i), s(i + 1), e(i)), scale(z, e(i))), "needs l >= 3")
    checks += family(prefix, "e_sigma_prev_e", upper,
                     lambda i: sub(mul(e(i), s(i - 1), e(i)), scale(z, e(i))), "needs l >= 3")
    checks += family(prefix, "e_sigmainv_next_e", inner,
                     lambda i: sub(mul(e(i), si(i + 1), e(i)), scale(z_inv, e(i))), "needs l >= 3")
    checks += family(prefix, "e_sigmainv_prev_e", upper,
                     lambda i: sub(mul(e(i), si(i - 1), e(i)), scale(z_inv, e(i))), "needs l >= 3")
    checks += family(prefix, "sigma_e_e", inner,
                     lambda i: sub(mul(s(i), e(i + 1), e(i)), scale(zq, mul(si(i + 1), e(i)))), "needs l >= 3")
    checks += family(prefix, "e_e_sigma", inner,
                     lambda i: sub(mul(e(i + 1), e(i), s(i + 1)), scale(zq, mul(e(i + 1), si(i)))), "needs l >= 3")
    checks += family(prefix, "e_far", far_pairs(l),
                     lambda ij: _commutator(alg, e(ij[0]), e(ij[1])), "needs l >= 4", observation=True)
    return checks


def relation_ids(checks: Sequence[Check]) -> List[str]:
    return [c.relation_id for c in checks]
