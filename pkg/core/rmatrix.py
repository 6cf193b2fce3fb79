"""
Named two-leg and one-leg operators on C^n, built entry by entry from their defining sums.

Indices i, j run over 1..n. A basis vector e_i (x) e_r of C^n (x) C^n has index
(i - 1) * n + (r - 1), and E_ij (x) E_rs contributes at row (i, r), column (j, s).
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from config import verify_config as cfg
from core.errors import GuardExceededError, UnknownNameError
from core.linalg import RingMatrix
from core.ring import ONE, Q, Q_INV, QUANTUM_DIFF, LaurentPoly

OPERATOR_NAMES = ("R", "Rtilde", "P", "Rprime", "Rcheck", "RcheckInv", "Q", "Qbar", "D")


@dataclass(frozen=True)
class NamedOperator:
    name: str
    n: int
    matrix: RingMatrix


def _pair(n: int, i: int, r: int) -> int:
    return (i - 1) * n + (r - 1)


def _two_leg(n: int, cells: Dict[Tuple[int, int, int, int], LaurentPoly]) -> RingMatrix:
    """cells: (i, r, j, s) -> coefficient of E_ij (x) E_rs"""
    entries = [(_pair(n, i, r), _pair(n, j, s), v) for (i, r, j, s), v in cells.items()]
    return RingMatrix.from_entries(n * n, n * n, entries)


def _q_weight(n: int, i: int) -> LaurentPoly:
    return LaurentPoly.monomial(n - 2 * i + 1)


def _r_matrix(n: int) -> RingMatrix:
    cells = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cells[(i, j, i, j)] = Q if i == j else ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # (q - q^-1) E_ij (x) E_ji
            cells[(i, j, j, i)] = QUANTUM_DIFF
    return _two_leg(n, cells)


def _r_tilde(n: int) -> RingMatrix:
    cells = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cells[(i, j, i, j)] = Q_INV if i == j else ONE
    for i in range(1, n + 1):
        for j in range(1, i):
            cells[(i, j, j, i)] = -QUANTUM_DIFF
    return _two_leg(n, cells)


def _permutation(n: int) -> RingMatrix:
    return _two_leg(n, {(i, j, j, i): ONE for i in range(1, n + 1) for j in range(1, n + 1)})


def _r_prime(n: int) -> RingMatrix:
    # transposition of R in the first factor: E_ij (x) E_ji -> E_ji (x) E_ji
    cells = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cells[(i, j, i, j)] = Q if i == j else ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cells[(j, j, i, i)] = QUANTUM_DIFF
    return _two_leg(n, cells)


def _r_check(n: int) -> RingMatrix:
    # P R: q E_ii (x) E_ii + sum_{i != j} E_ij (x) E_ji + (q - q^-1) sum_{i<j} E_jj (x) E_ii
    cells = {}
    for i in range(1, n + 1):
        cells[(i, i, i, i)] = Q
        for j in range(1, n + 1):
            if i != j:
                cells[(j, i, i, j)] = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cells[(j, i, j, i)] = QUANTUM_DIFF
    return _two_leg(n, cells)


def _q_operator(n: int) -> RingMatrix:
    return _two_leg(
        n, {(i, i, j, j): _q_weight(n, i) for i in range(1, n + 1) for j in range(1, n + 1)}
    )


def _q_bar(n: int) -> RingMatrix:
    return _two_leg(n, {(i, i, j, j): ONE for i in range(1, n + 1) for j in range(1, n + 1)})


def _d_matrix(n: int) -> RingMatrix:
    return RingMatrix.from_entries(n, n, [(i - 1, i - 1, _q_weight(n, i)) for i in range(1, n + 1)])


_BUILDERS = {
    "R": _r_matrix,
    "Rtilde": _r_tilde,
    "P": _permutation,
    "Rprime": _r_prime,
    "Rcheck": _r_check,
    "Q": _q_operator,
    "Qbar": _q_bar,
    "D": _d_matrix,
}


@lru_cache(maxsize=None)
def _build(name: str, n: int) -> RingMatrix:
    if name == "RcheckInv":
        rcheck = _build("Rcheck", n)
        return rcheck - RingMatrix.identity(n * n).scale(QUANTUM_DIFF)
    return _BUILDERS[name](n)


def build_operator(name: str, n: int) -> NamedOperator:
    if name not in OPERATOR_NAMES:
        raise UnknownNameError(f"unknown operator {name!r}; expected one of {', '.join(OPERATOR_NAMES)}")
    if not cfg.MIN_LOCAL_DIM <= n <= cfg.MAX_LOCAL_DIM:
        raise GuardExceededError(
            f"local dimension n={n} outside {cfg.MIN_LOCAL_DIM}..{cfg.MAX_LOCAL_DIM}"
        )
    return NamedOperator(name=name, n=n, matrix=_build(name, n))


def operator(name: str, n: int) -> RingMatrix:
    return build_operator(name, n).matrix
