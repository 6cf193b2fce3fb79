from fractions import Fraction

import pytest

from core.errors import EvaluationError, FormatError
from core.ring import (
    ONE,
    Q,
    Q_INV,
    QUANTUM_DIFF,
    ZERO,
    LaurentPoly,
    loop_value,
    parse_value,
    poly_arith,
    poly_eval,
    quantum_integer,
    render_value,
)


def test_canonical_form_strips_zeros():
    """Cancelling terms leave no trace"""
    p = LaurentPoly({2: 3, -1: 0}) + LaurentPoly({2: -3})
    assert p == ZERO
    assert p.is_zero()
    assert LaurentPoly([(1, 2), (1, -2)]) == ZERO


def test_arithmetic():
    assert (Q + Q_INV) * QUANTUM_DIFF == LaurentPoly({2: 1, -2: -1})
    assert Q * Q_INV == ONE
    assert 3 - Q == LaurentPoly({0: 3, 1: -1})
    assert poly_arith(Q, Q, "mul") == LaurentPoly.monomial(2)
    assert poly_arith(Q, Q, "sub") == ZERO


def test_integer_fraction_coercion():
    assert LaurentPoly.constant(5) == 5
    assert LaurentPoly.constant(5) == Fraction(10, 2)
    assert LaurentPoly.constant(5) != Fraction(1, 2)
    assert hash(LaurentPoly.constant(5)) == hash(5)


def test_powers():
    assert Q ** 3 == LaurentPoly.monomial(3)
    assert Q ** -2 == LaurentPoly.monomial(-2)
    assert (-Q) ** -1 == LaurentPoly.monomial(-1, -1)
    assert (Q + 1) ** 0 == ONE
    with pytest.raises(ValueError):
        _ = (Q + 1) ** -1


def test_degree_and_valuation():
    p = LaurentPoly({3: 1, -2: 4})
    assert p.degree() == 3
    assert p.valuation() == -2
    assert list(p.items()) == [(3, 1), (-2, 4)]
    with pytest.raises(ValueError):
        ZERO.degree()


def test_evaluate():
    """[3]_q at q=2 is 4 + 1 + 1/4"""
    assert quantum_integer(3).evaluate(2) == Fraction(21, 4)
    assert poly_eval(QUANTUM_DIFF, Fraction(1)) == 0
    assert Q_INV.evaluate(Fraction(5, 3)) == Fraction(3, 5)
    with pytest.raises(EvaluationError):
        Q.evaluate(0)


def test_quantum_integer_and_loop_value():
    assert quantum_integer(1) == ONE
    assert quantum_integer(2) == Q + Q_INV
    assert loop_value(2) == Q + Q_INV
    assert loop_value(0) == ZERO
    assert loop_value(-3) == -quantum_integer(3)
    # (z - z^-1) = (q - q^-1) [m] at z = q^m
    assert QUANTUM_DIFF * loop_value(3) == LaurentPoly.monomial(3) - LaurentPoly.monomial(-3)
    with pytest.raises(ValueError):
        quantum_integer(0)


def test_render_and_parse():
    assert str(QUANTUM_DIFF) == "1*q^1 + -1*q^-1"
    assert str(ZERO) == "0"
    p = LaurentPoly({4: -2, 0: 7, -3: 1})
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.parse("0") == ZERO


@pytest.mark.parametrize("text", ["q^2", "1*q", "1*q^1 - 1*q^-1", "2*x^1"])
def test_parse_rejects_malformed_terms(text):
    with pytest.raises(FormatError):
        LaurentPoly.parse(text)


def test_values_by_ring():
    assert parse_value("3/4", "rational") == Fraction(3, 4)
    assert parse_value("1*q^1", "laurent") == Q
    assert render_value(Fraction(-7, 2)) == "-7/2"
    assert render_value(ONE) == "1*q^0"
    with pytest.raises(FormatError):
        parse_value("1", "complex")
    with pytest.raises(FormatError):
        parse_value("1/0", "rational")
