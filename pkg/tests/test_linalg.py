from fractions import Fraction

import numpy as np
import pytest

from core.errors import DimensionMismatchError, GuardExceededError, InvalidIndexError, RingMismatchError
from core.linalg import (
    LegSpace,
    RingMatrix,
    commutant_dimension,
    commutes,
    embed,
    kron,
    leg_embed,
    mat_arith,
    mat_product,
    partial_transpose,
    span_dimension,
    span_rank,
)
from core.rep import ImageAlgebra, RepContext
from core.ring import ONE, Q, Q_INV, LaurentPoly
from core.rmatrix import operator


def _laurent(rows):
    return RingMatrix.from_dense(np.array(rows, dtype=object))


def test_product_matches_dense_oracle():
    """Sparse product agrees with numpy's object-dtype product"""
    a = _laurent([[Q, 0, 1], [0, Q_INV, 0], [2, 0, Q + 1]])
    b = _laurent([[1, Q, 0], [Q, 0, 0], [0, 0, Q_INV]])
    dense = np.dot(a.to_dense(), b.to_dense())
    assert a @ b == RingMatrix.from_dense(dense)
    assert mat_product([a, b, a]) == (a @ b) @ a


def test_structural_equality_and_cancellation():
    a = _laurent([[Q, 1], [0, Q_INV]])
    assert (a - a).is_zero()
    assert (a - a).nnz == 0
    assert mat_arith(a, a, "add") == a.scale(2)
    assert 2 * a == a * 2
    assert a.transpose().transpose() == a


def test_shape_and_ring_mismatch():
    with pytest.raises(DimensionMismatchError):
        RingMatrix.identity(2) + RingMatrix.identity(3)
    with pytest.raises(RingMismatchError):
        RingMatrix.identity(2) + RingMatrix.identity(2, "rational")
    with pytest.raises(RingMismatchError):
        RingMatrix.identity(2, "rational").scale(Q)
    with pytest.raises(InvalidIndexError):
        RingMatrix.matrix_unit(2, 3, 1)


def test_specialize():
    a = _laurent([[Q, Q - Q_INV], [0, 1]])
    s = a.specialize(Fraction(5, 3))
    assert s.ring == "rational"
    assert s.get(0, 0) == Fraction(5, 3)
    assert s.get(0, 1) == Fraction(5, 3) - Fraction(3, 5)
    # q - q^-1 vanishes at q = 1, so the entry disappears
    assert a.specialize(1).nnz == 2


def test_nonzero_terms_are_one_based():
    m = RingMatrix.matrix_unit(3, 1, 2)
    assert m.nonzero_terms() == [("(1,2)", "1*q^0")]


def test_leg_space_indexing():
    space = LegSpace(3, 2, aux=("a",))
    assert space.labels == ("a", 1, 2)
    assert space.dim == 27
    assert space.basis_index([1, 1, 1]) == 0
    assert space.basis_index([2, 1, 3]) == 9 + 2
    assert space.basis_digits(11) == (2, 1, 3)
    with pytest.raises(InvalidIndexError):
        space.position("b")
    with pytest.raises(InvalidIndexError):
        LegSpace(2, 2, aux=(1,))


def test_leg_space_guard():
    with pytest.raises(GuardExceededError):
        LegSpace(2, 13)


def test_embed_permutation_on_outer_legs():
    """P_13 sends e_a (x) e_b (x) e_c to e_c (x) e_b (x) e_a"""
    space = LegSpace(2, 3)
    p13 = embed(operator("P", 2), (1, 3), space)
    for a in (1, 2):
        for b in (1, 2):
            for c in (1, 2):
                row = space.basis_index([c, b, a])
                col = space.basis_index([a, b, c])
                assert p13.get(row, col) == ONE
    assert p13.nnz == 8


def test_embed_leg_order_and_kron():
    space = LegSpace(2, 3)
    r, p = operator("R", 2), operator("P", 2)
    p12 = embed(p, (1, 2), space)
    # R_21 = P_12 R_12 P_12
    assert embed(r, (2, 1), space) == p12 @ embed(r, (1, 2), space) @ p12
    assert leg_embed(p, (2, 3), space) == kron(RingMatrix.identity(2), p)
    with pytest.raises(InvalidIndexError):
        embed(p, (1, 1), space)
    with pytest.raises(DimensionMismatchError):
        embed(p, (1,), space)


def test_partial_transpose():
    p, qbar = operator("P", 2), operator("Qbar", 2)
    assert partial_transpose(p, "first") == qbar
    assert partial_transpose(p, "second") == qbar
    r = operator("R", 3)
    assert partial_transpose(partial_transpose(r, "first"), "first") == r
    both = partial_transpose(partial_transpose(r, "first"), "second")
    assert both == r.transpose()
    with pytest.raises(ValueError):
        partial_transpose(r, "middle")


def test_commutes():
    p = operator("P", 2)
    ok, residual = commutes(p, operator("Qbar", 2))
    assert ok and residual.is_zero()
    ok, residual = commutes(operator("R", 2), RingMatrix.matrix_unit(4, 1, 2))
    assert not ok and residual.nnz > 0


def test_span_and_commutant_of_permutation():
    """P has eigenvalues 1 (three times) and -1: commutant 9 + 1, unital algebra {I, P}"""
    p = operator("P", 2).specialize(1)
    assert span_dimension([p]) == 2
    assert span_rank([p, RingMatrix.identity(4, "rational"), p.scale(3)]) == 2
    assert commutant_dimension([p]) == 10


def test_rank_helpers_need_rational_input():
    with pytest.raises(RingMismatchError):
        span_dimension([operator("P", 2)])
    with pytest.raises(GuardExceededError):
        commutant_dimension([RingMatrix.identity(101, "rational")])


def test_dense_round_trip_keeps_exact_values():
    m = RingMatrix.from_entries(2, 2, [(0, 0, LaurentPoly({3: 2})), (1, 0, Q), (1, 0, -Q)])
    assert m.nnz == 1
    assert RingMatrix.from_dense(m.to_dense()) == m


def test_generated_algebra_ignores_generator_order_and_repeats():
    alg = ImageAlgebra(RepContext(3, 3), at=Fraction(5, 3))
    s1, s2 = alg.sigma(1), alg.sigma(2)
    for generators in ([s1, s2], [s2, s1], [s1, s2, s1, s2], [s2, s2, s1]):
        assert span_dimension(generators) == 6

    layer = [alg.identity()]
    words = list(layer)
    for _ in range(3):
        layer = [w @ g for w in layer for g in (s1, s2)]
        words += layer
    assert len(words) == 15
    assert span_rank(words) == 6
