"""
Exact arithmetic in Z[q, q^-1] and specialization to the rationals.

A LaurentPoly is stored as {exponent: coefficient} with zero coefficients stripped, so
equality is structural. Values are immutable; every operation returns a new polynomial.
"""
import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from core.errors import EvaluationError, FormatError

Scalar = Union[int, Fraction]

_TERM_RE = re.compile(r"^\s*(-?\d+)\*q\^(-?\d+)\s*$")


class LaurentPoly:
    """Element of Z[q, q^-1] in canonical form"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        clean: Dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                exp = int(exp)
                clean[exp] = clean.get(exp, 0) + int(coeff)
        self._terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def _wrap(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # terms must already be canonical
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._wrap({0: 1})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls._wrap({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({int(exp): int(coeff)} if coeff else {})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls.monomial(0, value)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coefficient) pairs, exponents descending"""
        for exp in sorted(self._terms, reverse=True):
            yield exp, self._terms[exp]

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            other = other.numerator
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = result.get(exp, 0) + coeff
            if total:
                result[exp] = total
            else:
                result.pop(exp, None)
        return LaurentPoly._wrap(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                result[exp] = result.get(exp, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (exp, coeff), = self._terms.items()
            return LaurentPoly.monomial(exp * power, coeff ** (-power))
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return hash(self._terms[0])
        return hash(tuple(sorted(self._terms.items())))

    # ------------------------------------------------------------------
    # specialization and text
    # ------------------------------------------------------------------

    def evaluate(self, at: Scalar) -> Fraction:
        at = Fraction(at)
        if at == 0:
            raise EvaluationError("cannot evaluate a Laurent polynomial at q=0")
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            total += coeff * at ** exp
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{coeff}*q^{exp}" for exp, coeff in self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms = []
        for chunk in text.split(" + "):
            match = _TERM_RE.match(chunk)
            if not match:
                raise FormatError(f"bad Laurent term: {chunk!r}")
            terms.append((int(match.group(2)), int(match.group(1))))
        return cls(terms)


# Frequently used constants
ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q()
Q_INV = LaurentPoly.monomial(-1)
QUANTUM_DIFF = Q - Q_INV  # q - q^-1


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation: {op}")


def poly_eval(p: LaurentPoly, at: Scalar) -> Fraction:
    return p.evaluate(at)


def quantum_integer(n: int) -> LaurentPoly:
    """[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)"""
    if n < 1:
        raise ValueError(f"quantum_integer needs n >= 1, got {n}")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def loop_value(z_exponent: int) -> LaurentPoly:
    """(z - z^-1)/(q - q^-1) at z = q^m, as an exact Laurent polynomial"""
    if z_exponent == 0:
        return ZERO
    if z_exponent < 0:
        return -quantum_integer(-z_exponent)
    return quantum_integer(z_exponent)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational: {text!r}") from exc


def render_value(value) -> str:
    """Text form of a ring value: Laurent rendering or p/r"""
    if isinstance(value, LaurentPoly):
        return str(value)
    return str(Fraction(value))


def parse_value(text: str, ring: str):
    if ring == "laurent":
        return LaurentPoly.parse(text)
    if ring == "rational":
        return parse_rational(text)
    raise FormatError(f"unknown ring: {ring!r}")
