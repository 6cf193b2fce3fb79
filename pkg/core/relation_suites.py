"""
Symbolic relation suites over Z[q, q^-1].

Every builder returns lazily evaluated Check objects; core.verify turns them into reports.
Suites that do not depend on l take l=None.
"""
from functools import partial
from typing import Hashable, List, Optional, Union

from core.errors import InvalidIndexError
from core.linalg import LegSpace, RingMatrix, embed, mat_product, partial_transpose
from core.presentation import derived_relations, family, quantum_relations, single
from core.report import Check, SuiteHooks
from core.rep import ImageAlgebra, RepContext, lift_to_aux, rep_S, rep_s_blocks, s_image
from core.ring import Q, Q_INV, QUANTUM_DIFF, LaurentPoly, quantum_integer
from core.rmatrix import operator

Operand = Union[str, RingMatrix]


class _Legs:
    """Shorthand for embedded operators: legs("R", 1, 3) is R_13 on the given space"""

    def __init__(self, space: LegSpace, overrides: Optional[dict] = None):
        self.space = space
        self.n = space.n
        self._overrides = overrides or {}
        self._cache = {}

    def matrix(self, op: Operand) -> RingMatrix:
        if isinstance(op, RingMatrix):
            return op
        if op in self._overrides:
            return self._overrides[op]
        return operator(op, self.n)

    def __call__(self, op: Operand, *legs: Hashable) -> RingMatrix:
        key = (op, legs) if isinstance(op, str) else None
        if key is not None and key in self._cache:
            return self._cache[key]
        result = embed(self.matrix(op), legs, self.space)
        if key is not None:
            self._cache[key] = result
        return result

    @property
    def identity(self) -> RingMatrix:
        return self.space.identity()


def _prod(*factors: RingMatrix) -> RingMatrix:
    return mat_product(list(factors))


def _eq(lhs, rhs) -> RingMatrix:
    return lhs - rhs


def _perturbed_r(n: int, hooks: SuiteHooks) -> RingMatrix:
    r = operator("R", n)
    if hooks.r_perturbation is None:
        return r
    row, col = hooks.r_perturbation
    if not (1 <= row <= n * n and 1 <= col <= n * n):
        raise InvalidIndexError(f"perturbed entry ({row},{col}) outside 1..{n * n}")
    return r + RingMatrix.matrix_unit(n * n, row, col)


def _require_l(l: Optional[int], minimum: int, suite: str) -> int:
    if l is None or l < minimum:
        raise InvalidIndexError(f"{suite} needs l >= {minimum}, got l={l}")
    return l


# ----------------------------------------------------------------------
# R-matrix level
# ----------------------------------------------------------------------


def yang_baxter(n: int, l: Optional[int] = None, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    r = _perturbed_r(n, hooks)
    three = _Legs(LegSpace(n, 3), {"R": r})
    two = _Legs(LegSpace(n, 2), {"R": r})

    def ybe(name):
        return _eq(_prod(three(name, 1, 2), three(name, 1, 3), three(name, 2, 3)),
                   _prod(three(name, 2, 3), three(name, 1, 3), three(name, 1, 2)))

    def rtilde_inverse():
        p = two.matrix("P")
        return _eq(_prod(two.matrix("R"), p, two.matrix("Rtilde"), p), two.identity)

    def rcheck_is_pr():
        return _eq(operator("Rcheck", n), _prod(operator("P", n), operator("R", n)))

    def rcheck_inverse():
        return _eq(_prod(operator("RcheckInv", n), operator("Rcheck", n)), two.identity)

    def rcheck_quadratic():
        rc = operator("Rcheck", n)
        return _eq(_prod(rc, rc), rc.scale(QUANTUM_DIFF) + two.identity)

    def rprime_transposes_r():
        return _eq(operator("Rprime", n), partial_transpose(operator("R", n), "first"))

    def q_square():
        q_op = operator("Q", n)
        return _eq(_prod(q_op, q_op), q_op.scale(quantum_integer(n)))

    return (
        single("ybe", "R", partial(ybe, "R"))
        + single("ybe", "Rtilde", partial(ybe, "Rtilde"))
        + single("ybe", "R_P_Rtilde_P", rtilde_inverse)
        + single("ybe", "Rcheck_is_PR", rcheck_is_pr)
        + single("ybe", "Rcheck_quadratic", rcheck_quadratic)
        + single("ybe", "RcheckInv_Rcheck", rcheck_inverse)
        + single("ybe", "Rprime_is_partial_transpose", rprime_transposes_r)
        + single("ybe", "Q_square", q_square)
    )


def rtt_vector(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    """
    T -> 'R_{a1}...'R_{al}, Tbar -> 'Rt_{a1}...'Rt_{al} on aux legs a, b, checked against
    R T_a T_b = T_b T_a R and its Tbar and mixed forms, plus the triangular shape of T.
    """
    _require_l(l, 1, "rtt_vector")
    space = LegSpace(n, l, aux=("a", "b"))
    r_prime_tilde = partial_transpose(operator("Rtilde", n), "first")
    legs = _Legs(space, {"RprimeTilde": r_prime_tilde})
    quantum = range(1, l + 1)

    def t(aux, name):
        return _prod(*[legs(name, aux, m) for m in quantum])

    def rtt(first, second):
        r_ab = legs("R", "a", "b")
        return _eq(_prod(r_ab, t("a", first), t("b", second)), _prod(t("b", second), t("a", first), r_ab))

    one_aux = LegSpace(n, l, aux=("a",))
    t_single = _prod(*[embed(operator("Rprime", n), ("a", m), one_aux) for m in quantum])
    tbar_single = _prod(*[embed(r_prime_tilde, ("a", m), one_aux) for m in quantum])
    size = n ** l

    def aux_block(matrix, i, j):
        return matrix.block(i - 1, j - 1, size)

    def diagonal_product(i):
        return _eq(_prod(aux_block(t_single, i, i), aux_block(tbar_single, i, i)),
                   RingMatrix.identity(size))

    upper = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    checks = single("rtt", "T_T", partial(rtt, "Rprime", "Rprime"))
    checks += single("rtt", "Tbar_Tbar", partial(rtt, "RprimeTilde", "RprimeTilde"))
    checks += single("rtt", "Tbar_T", partial(rtt, "RprimeTilde", "Rprime"))
    checks += family("rtt", "t_upper_zero", upper, lambda ij: aux_block(t_single, *ij), "needs n >= 2")
    checks += family("rtt", "tbar_lower_zero", upper,
                     lambda ij: aux_block(tbar_single, ij[1], ij[0]), "needs n >= 2")
    checks += family("rtt", "t_tbar_diagonal", range(1, n + 1), diagonal_product, "needs n >= 1")
    return checks


def reflection_S(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    _require_l(l, 1, "reflection_S")
    space = LegSpace(n, l, aux=("a", "b"))
    legs = _Legs(space)

    def reflection():
        s1, s2 = s_image(space, "a"), s_image(space, "b")
        r, r_prime = legs("R", "a", "b"), legs("Rprime", "a", "b")
        return _eq(_prod(r, s1, r_prime, s2), _prod(s2, r_prime, s1, r))

    return single("reflection", "R_S1_Rprime_S2", reflection)


def s_shape(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    _require_l(l, 1, "s_shape")
    size = n ** l
    identity = RingMatrix.identity(size)

    def blocks():
        return rep_s_blocks(n, l)

    upper = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    lower = [(i, j) for i in range(1, n + 1) for j in range(1, i)]

    def classical(ij, at):
        return blocks()[ij[0] - 1][ij[1] - 1].specialize(at)

    checks = family("s_shape", "upper_zero", upper, lambda ij: blocks()[ij[0] - 1][ij[1] - 1], "needs n >= 2")
    checks += family("s_shape", "diagonal_identity", range(1, n + 1),
                     lambda i: _eq(blocks()[i - 1][i - 1], identity), "needs n >= 1")
    checks += family("s_shape", "lower_vanish_q1", lower, partial(classical, at=1), "needs n >= 2")
    checks += family("s_shape", "lower_vanish_qm1", lower, partial(classical, at=-1), "needs n >= 2")
    return checks


# ----------------------------------------------------------------------
# algebra relations in the representation
# ----------------------------------------------------------------------


def def_2_3(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    alg = ImageAlgebra(RepContext(n, _require_l(l, 2, "def_2_3")))
    return quantum_relations(alg, n + hooks.z_shift)


def derived_2_4(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    alg = ImageAlgebra(RepContext(n, _require_l(l, 2, "derived_2_4")))
    return derived_relations(alg, n + hooks.z_shift)


def prop_4_1(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    _require_l(l, 2, "prop_4_1")
    legs = _Legs(LegSpace(n, 2, aux=(0,)))
    pair = _Legs(LegSpace(n, 2))

    def q12():
        return legs("Q", 1, 2)

    def s_word():
        return _prod(legs("Rprime", 0, 1), legs("Rprime", 0, 2), legs("Rtilde", 0, 2), legs("Rtilde", 0, 1))

    def q_commutes_s():
        space = LegSpace(n, l, aux=(0,))
        q_last = embed(operator("Q", n), (l - 1, l), space)
        s = rep_S(n, l)
        return _eq(_prod(q_last, s), _prod(s, q_last))

    checks = single("prop41", "Q_S_left", lambda: _eq(_prod(q12(), s_word()), q12()))
    checks += single("prop41", "S_Q_right", lambda: _eq(_prod(s_word(), q12()), q12()))
    checks += single("prop41", "Rprime_Rtilde_commute",
                     lambda: _eq(_prod(pair.matrix("Rprime"), pair.matrix("Rtilde")),
                                 _prod(pair.matrix("Rtilde"), pair.matrix("Rprime"))))
    checks += single("prop41", "Q_Rprime01_is_Q_R20",
                     lambda: _eq(_prod(q12(), legs("Rprime", 0, 1)), _prod(q12(), legs("R", 2, 0))))
    checks += single("prop41", "R20_Rtilde02_identity",
                     lambda: _eq(_prod(legs("R", 2, 0), legs("Rtilde", 0, 2)), legs.identity))
    checks += single("prop41", "Q_Rprime02_Rtilde01",
                     lambda: _eq(_prod(q12(), legs("Rprime", 0, 2), legs("Rtilde", 0, 1)), q12()))
    checks += single("prop41", "Rprime02_Rtilde01_Q",
                     lambda: _eq(_prod(legs("Rprime", 0, 2), legs("Rtilde", 0, 1), q12()), q12()))
    checks += single("prop41", "Rprime01_Rtilde02_Q",
                     lambda: _eq(_prod(legs("Rprime", 0, 1), legs("Rtilde", 0, 2), q12()), q12()))
    checks += single("prop41", "Q_last_commutes_S", q_commutes_s)
    return checks


def thm_4_2_commute(n: int, l: int, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    ctx = RepContext(n, _require_l(l, 2, "thm_4_2_commute"))
    alg = ImageAlgebra(ctx)

    def commute(image_fn, i):
        s = rep_S(n, l)
        x = lift_to_aux(image_fn(i), n)
        return _eq(_prod(x, s), _prod(s, x))

    return (
        family("thm42", "sigma_commutes_S", range(1, l), partial(commute, alg.sigma), "needs l >= 2")
        + family("thm42", "e_commutes_S", range(1, l), partial(commute, alg.e), "needs l >= 2")
    )


# ----------------------------------------------------------------------
# proof chain on four legs
# ----------------------------------------------------------------------


def _monomial(exp: int) -> LaurentPoly:
    return LaurentPoly.monomial(exp)


def proof_identities(n: int, l: Optional[int] = None, hooks: SuiteHooks = SuiteHooks()) -> List[Check]:
    """The displayed steps used to establish the tau relation, realized on legs 1..4"""
    c = QUANTUM_DIFF
    qn1, q_mn1 = _monomial(n + 1), _monomial(-n - 1)

    r = operator("R", n)
    r_prime = operator("Rprime", n)          # 'R
    r_second = partial_transpose(r, "second")  # R'
    r_both = partial_transpose(r_prime, "second")  # 'R'
    rt = operator("Rtilde", n)
    rt_prime = partial_transpose(rt, "first")
    rt_both = partial_transpose(rt_prime, "second")
    p, qbar, q_op = operator("P", n), operator("Qbar", n), operator("Q", n)
    d = operator("D", n)

    four = _Legs(LegSpace(n, 4), {"Rsecond": r_second, "Rboth": r_both})
    two_space = LegSpace(n, 2)
    two = _Legs(two_space)
    i4, i2 = four.identity, two.identity

    def d_on(leg, legs=four):
        return embed(d, (leg,), legs.space)

    # the two-leg operators built in the proof
    x_op = d_on(2, two) + (qbar.scale(Q_INV) + _prod(r_prime, p)).scale(qn1 * c)
    y_op = _prod(p, partial_transpose(x_op, "second"))
    y_prime = partial_transpose(y_op, "second")
    v_op = _prod(r_both, r_prime, r)
    w_op = _prod(rt_both, rt_prime, rt)

    def word():
        return _prod(four("Rcheck", 2, 3), four("Rcheck", 3, 4), four("Rcheck", 1, 2), four("Rcheck", 2, 3))

    def word_inv():
        return _prod(four("RcheckInv", 2, 3), four("RcheckInv", 3, 4), four("RcheckInv", 1, 2),
                     four("RcheckInv", 2, 3))

    def q12q34():
        return _prod(four("Q", 1, 2), four("Q", 3, 4))

    def qb12qb34():
        return _prod(four("Qbar", 1, 2), four("Qbar", 3, 4))

    def rc12_plus():
        return four("Rcheck", 1, 2) + i4.scale(Q_INV)

    def degree4_forward():
        lhs = _prod(four("Q", 3, 4), word(), four("Q", 3, 4))
        rhs = q12q34() + _prod(four("Q", 3, 4), rc12_plus()).scale(qn1 * c)
        return _eq(lhs, rhs)

    def degree4_inverse():
        lhs = _prod(four("Q", 3, 4), word_inv(), four("Q", 3, 4))
        rhs = q12q34() + _prod(four("Q", 3, 4), rc12_plus()).scale(q_mn1 * (Q_INV - Q))
        return _eq(lhs, rhs)

    def p13p24():
        return _prod(four("P", 1, 3), four("P", 2, 4))

    def lhs_forward():
        return _prod(four("Q", 3, 4), word(), four("Q", 3, 4))

    def word_as_r():
        return _eq(word(), _prod(p13p24(), four("R", 1, 4), four("R", 2, 4), four("R", 1, 3), four("R", 2, 3)))

    def lhs_rewrite():
        rhs = _prod(p13p24(), four("Q", 1, 2), four("R", 1, 4), four("R", 2, 4), four("R", 1, 3),
                    four("R", 2, 3), four("Q", 3, 4))
        return _eq(lhs_forward(), rhs)

    def ppqr_form():
        rhs = _prod(p13p24(), four("Q", 1, 2), four("R", 1, 3), four("Rprime", 2, 4), four("R", 2, 4),
                    d_on(4), four("Rsecond", 2, 4), four("Qbar", 3, 4))
        return _eq(lhs_forward(), rhs)

    def d_expansion():
        lhs = _prod(r_prime, r, d_on(2, two), r_second)
        rhs = _prod(r, d_on(2, two)) + qbar.scale(qn1 * c)
        return _eq(lhs, rhs)

    def ppqrd_form():
        inner = _prod(d_on(3), four("Rsecond", 2, 3)) + four("P", 2, 3).scale(qn1 * c)
        rhs = _prod(p13p24(), four("Q", 1, 2), four("Rprime", 2, 3), inner, four("Qbar", 3, 4))
        return _eq(lhs_forward(), rhs)

    def x_expansion():
        lhs = _prod(r_prime, _prod(d_on(2, two), r_second) + p.scale(qn1 * c))
        return _eq(lhs, x_op)

    def ppqdq_form():
        rhs = _prod(p13p24(), four("Q", 1, 2), four(x_op, 2, 3), four("Qbar", 3, 4))
        return _eq(lhs_forward(), rhs)

    def chain_q_moves():
        lhs = _prod(p13p24(), four("Q", 1, 2), four(x_op, 2, 3), four("Qbar", 3, 4))
        rhs = _prod(four("Q", 3, 4), p13p24(), four(x_op, 2, 3), four("Qbar", 3, 4))
        return _eq(lhs, rhs)

    def chain_x_prime():
        x_second = partial_transpose(x_op, "second")
        lhs = _prod(four("Q", 3, 4), p13p24(), four(x_op, 2, 3), four("Qbar", 3, 4))
        rhs = _prod(four("Q", 3, 4), p13p24(), four(x_second, 2, 4), four("Qbar", 3, 4))
        return _eq(lhs, rhs)

    def chain_y_prime():
        lhs = _prod(four("Q", 3, 4), p13p24(), four(partial_transpose(x_op, "second"), 2, 4), four("Qbar", 3, 4))
        rhs = _prod(four("Q", 3, 4), four("P", 1, 3), four(y_prime, 2, 3), four("Qbar", 3, 4))
        return _eq(lhs, rhs)

    def p13_conjugates_y():
        return _eq(_prod(four("P", 1, 3), four(y_prime, 2, 3)), _prod(four(y_prime, 2, 1), four("P", 1, 3)))

    def q34_p13_qbar34():
        return _eq(_prod(four("Q", 3, 4), four("P", 1, 3), four("Qbar", 3, 4)), four("Q", 3, 4))

    def y_prime_swapped():
        rhs = q_op + (operator("Rcheck", n) + i2.scale(Q_INV)).scale(qn1 * c)
        return _eq(_prod(p, y_prime, p), rhs)

    def lhs_final():
        return _eq(lhs_forward(), _prod(four(y_prime, 2, 1), four("Q", 3, 4)))

    def rcheck_inverse_p_rtilde():
        return _eq(operator("RcheckInv", n), _prod(p, rt))

    def rcheck_inverse_rtilde21_p():
        return _eq(operator("RcheckInv", n), _prod(two(rt, 2, 1), p))

    def inverse_lhs_rewrite():
        lhs = _prod(four("Q", 3, 4), word_inv(), four("Q", 3, 4))
        rhs = _prod(four("Q", 3, 4), four("Rtilde", 3, 2), four("Rtilde", 4, 2), four("Rtilde", 3, 1),
                    four("Rtilde", 4, 1), four("Q", 1, 2), p13p24())
        return _eq(lhs, rhs)

    def combined():
        middle = word().scale(q_mn1) + word_inv().scale(qn1)
        lhs = _prod(four("Q", 3, 4), middle, four("Q", 3, 4))
        return _eq(lhs, q12q34().scale(q_mn1 + qn1))

    def completion_mix():
        return word().scale(Q_INV) + word_inv().scale(Q)

    def completion_left():
        return _eq(_prod(q12q34(), completion_mix()), q12q34().scale(_monomial(-3) + _monomial(3)))

    def completion_right():
        return _eq(_prod(completion_mix(), q12q34()), q12q34().scale(_monomial(-3) + _monomial(3)))

    def q_from_d(leg):
        return _eq(q_op, _prod(d_on(leg, two), qbar))

    def qbar_transposes_p(which):
        return _eq(qbar, partial_transpose(p, which))

    def q12_r14():
        return _eq(_prod(four("Q", 1, 2), four("R", 1, 4)), _prod(four("Q", 1, 2), four("Rprime", 2, 4)))

    def r23_q34():
        return _eq(_prod(four("R", 2, 3), four("Q", 3, 4)),
                   _prod(d_on(4), four("Rsecond", 2, 4), four("Qbar", 3, 4)))

    def q12_r13():
        return _eq(_prod(four("Q", 1, 2), four("R", 1, 3)), _prod(four("Q", 1, 2), four("Rprime", 2, 3)))

    def qbar24_qbar34():
        return _eq(_prod(four("Qbar", 2, 4), four("Qbar", 3, 4)), _prod(four("P", 2, 3), four("Qbar", 3, 4)))

    def r24_d4_qbar34():
        return _eq(_prod(four("R", 2, 4), d_on(4), four("Qbar", 3, 4)),
                   _prod(d_on(3), four("Rsecond", 2, 3), four("Qbar", 3, 4)))

    projector_forms = [
        lambda: _prod(qb12qb34(), p13p24()),
        lambda: _prod(four("Qbar", 1, 2), p13p24(), four("Qbar", 1, 2)),
        lambda: _prod(four("Qbar", 1, 2), four("Qbar", 2, 3), four("P", 2, 4), four("Qbar", 1, 2)),
        lambda: _prod(four("Qbar", 1, 2), four("P", 2, 4), four("Qbar", 3, 4), four("Qbar", 1, 2)),
        lambda: _prod(four("Qbar", 1, 2), four("P", 2, 4), four("Qbar", 1, 2), four("Qbar", 3, 4)),
        qb12qb34,
    ]

    def projector_step(step):
        return _eq(projector_forms[step - 1](), projector_forms[step]())

    def qbar12_r14():
        return _eq(_prod(four("Qbar", 1, 2), four("R", 1, 4)), _prod(four("Qbar", 1, 2), four("Rprime", 2, 4)))

    def qbar_r13_second():
        return _eq(_prod(qb12qb34(), four("R", 1, 3)), _prod(qb12qb34(), four("Rsecond", 1, 4)))

    def qbar_r13_both():
        return _eq(_prod(qb12qb34(), four("R", 1, 3)), _prod(qb12qb34(), four("Rboth", 2, 4)))

    def v_form_leg4():
        lhs = _prod(qb12qb34(), word())
        return _eq(lhs, _prod(qb12qb34(), four(v_op, 2, 4), four("R", 2, 3)))

    def v_form():
        lhs = _prod(qb12qb34(), word())
        v_second = partial_transpose(v_op, "second")
        return _eq(lhs, _prod(qb12qb34(), four(v_second, 2, 3), four("R", 2, 3)))

    def oq_inverse_rewrite():
        lhs = _prod(qb12qb34(), word_inv())
        rhs = _prod(qb12qb34(), four("Rtilde", 1, 4), four("Rtilde", 2, 4), four("Rtilde", 1, 3),
                    four("Rtilde", 2, 3))
        return _eq(lhs, rhs)

    def w_form():
        lhs = _prod(qb12qb34(), word_inv())
        w_second = partial_transpose(w_op, "second")
        return _eq(lhs, _prod(qb12qb34(), four(w_second, 2, 3), four("Rtilde", 2, 3)))

    def vw_identity():
        v_second = partial_transpose(v_op, "second")
        w_second = partial_transpose(w_op, "second")
        lhs = _prod(v_second, r).scale(Q_INV) + _prod(w_second, rt).scale(Q)
        return _eq(lhs, i2.scale(_monomial(-3) + _monomial(3)))

    checks: List[Check] = []
    for name, fn in (
        ("degree4_forward", degree4_forward),
        ("degree4_inverse", degree4_inverse),
        ("rcheck_word_as_R", word_as_r),
        ("lhs_rewrite", lhs_rewrite),
        ("Q_as_D1_Qbar", partial(q_from_d, 1)),
        ("Q_as_D2_Qbar", partial(q_from_d, 2)),
        ("Qbar_is_first_transposed_P", partial(qbar_transposes_p, "first")),
        ("Qbar_is_second_transposed_P", partial(qbar_transposes_p, "second")),
        ("Q12_R14_move", q12_r14),
        ("R23_Q34_move", r23_q34),
        ("ppqr_form", ppqr_form),
        ("D_expansion", d_expansion),
        ("Q12_R13_move", q12_r13),
        ("Qbar24_Qbar34_move", qbar24_qbar34),
        ("R24_D4_Qbar34_move", r24_d4_qbar34),
        ("ppqrd_form", ppqrd_form),
        ("X_expansion", x_expansion),
        ("ppqdq_form", ppqdq_form),
        ("chain_Q_move", chain_q_moves),
        ("chain_X_transpose", chain_x_prime),
        ("chain_Y_form", chain_y_prime),
        ("P13_conjugates_Y", p13_conjugates_y),
        ("Q34_P13_Qbar34", q34_p13_qbar34),
        ("Y_prime_swapped", y_prime_swapped),
        ("lhs_final_form", lhs_final),
        ("RcheckInv_is_P_Rtilde", rcheck_inverse_p_rtilde),
        ("RcheckInv_is_Rtilde21_P", rcheck_inverse_rtilde21_p),
        ("inverse_lhs_rewrite", inverse_lhs_rewrite),
        ("combined", combined),
        ("completion_left", completion_left),
        ("completion_right", completion_right),
    ):
        checks += single("proof", name, fn)
    checks += family("proof", "projector_chain", range(1, len(projector_forms)), projector_step, "")
    for name, fn in (
        ("Qbar12_R14_move", qbar12_r14),
        ("Qbar_R13_second", qbar_r13_second),
        ("Qbar_R13_both", qbar_r13_both),
        ("V_form_leg4", v_form_leg4),
        ("V_form", v_form),
        ("inverse_Qbar_rewrite", oq_inverse_rewrite),
        ("W_form", w_form),
        ("VW_identity", vw_identity),
    ):
        checks += single("proof", name, fn)
    return checks
