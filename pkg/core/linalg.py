"""
Sparse square matrices over Z[q, q^-1] or Q, tensor-leg embeddings, partial transposes
and exact rank / commutant computations over the rationals.

Basis convention: the leftmost tensor factor is the most significant digit, so the basis
vector e_{a_1} (x) ... (x) e_{a_L} has index sum((a_i - 1) * n^(L - i)).
"""
import itertools
import logging
from fractions import Fraction
from math import isqrt
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config import verify_config as cfg
from core.errors import (
    DimensionMismatchError,
    GuardExceededError,
    InvalidIndexError,
    RingMismatchError,
)
from core.ring import ONE, ZERO, LaurentPoly, render_value

logger = logging.getLogger("QBrauer.linalg")

RINGS = ("laurent", "rational")


def _coerce_value(value, ring: str):
    if ring == "laurent":
        coerced = LaurentPoly._coerce(value)
        if coerced is NotImplemented:
            raise RingMismatchError(f"value {value!r} is not in Z[q, q^-1]")
        return coerced
    if isinstance(value, LaurentPoly):
        if value.is_zero():
            return Fraction(0)
        if set(value.terms) != {0}:
            raise RingMismatchError(f"non-constant polynomial {value} in a rational matrix")
        return Fraction(value.coefficient(0))
    return Fraction(value)


def ring_zero(ring: str):
    return ZERO if ring == "laurent" else Fraction(0)


def ring_one(ring: str):
    return ONE if ring == "laurent" else Fraction(1)


class RingMatrix:
    """
    Immutable sparse matrix. Rows are stored as {row: {col: value}} with no zero values,
    so equality is structural.
    """

    __slots__ = ("nrows", "ncols", "ring", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Optional[Dict[int, Dict[int, object]]] = None,
                 ring: str = "laurent"):
        if ring not in RINGS:
            raise RingMismatchError(f"unknown ring {ring!r}")
        if nrows < 1 or ncols < 1:
            raise DimensionMismatchError(f"matrix dimensions must be positive, got {nrows}x{ncols}")
        self.nrows = nrows
        self.ncols = ncols
        self.ring = ring
        clean: Dict[int, Dict[int, object]] = {}
        for r, row in (rows or {}).items():
            if not 0 <= r < nrows:
                raise InvalidIndexError(f"row {r} outside 0..{nrows - 1}")
            kept = {}
            for c, v in row.items():
                if not 0 <= c < ncols:
                    raise InvalidIndexError(f"column {c} outside 0..{ncols - 1}")
                v = _coerce_value(v, ring)
                if v:
                    kept[c] = v
            if kept:
                clean[r] = kept
        self._rows = clean

    @classmethod
    def _wrap(cls, nrows: int, ncols: int, rows: Dict[int, Dict[int, object]], ring: str) -> "RingMatrix":
        # rows must already be canonical
        m = cls.__new__(cls)
        m.nrows, m.ncols, m.ring, m._rows = nrows, ncols, ring, rows
        return m

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[Tuple[int, int, object]],
                     ring: str = "laurent") -> "RingMatrix":
        """Build from 0-based (row, col, value) triples; repeated coordinates are summed"""
        rows: Dict[int, Dict[int, object]] = {}
        for r, c, v in entries:
            row = rows.setdefault(r, {})
            row[c] = row[c] + v if c in row else v
        return cls(nrows, ncols, rows, ring)

    @classmethod
    def identity(cls, dim: int, ring: str = "laurent") -> "RingMatrix":
        one = ring_one(ring)
        return cls._wrap(dim, dim, {i: {i: one} for i in range(dim)}, ring)

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None, ring: str = "laurent") -> "RingMatrix":
        return cls._wrap(nrows, ncols or nrows, {}, ring)

    @classmethod
    def matrix_unit(cls, dim: int, i: int, j: int, ring: str = "laurent") -> "RingMatrix":
        """E_ij with 1-based indices"""
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise InvalidIndexError(f"E_{i}{j} outside 1..{dim}")
        return cls._wrap(dim, dim, {i - 1: {j - 1: ring_one(ring)}}, ring)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entries(self) -> List[Tuple[int, int, object]]:
        """0-based (row, col, value) triples sorted by (row, col)"""
        return [(r, c, self._rows[r][c]) for r in sorted(self._rows) for c in sorted(self._rows[r])]

    def row(self, r: int) -> Dict[int, object]:
        return dict(self._rows.get(r, {}))

    def get(self, r: int, c: int):
        return self._rows.get(r, {}).get(c, ring_zero(self.ring))

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple((r, c, v) for r, c, v in self.entries())))

    def __repr__(self) -> str:
        return f"RingMatrix({self.nrows}x{self.ncols}, ring={self.ring}, nnz={self.nnz})"

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _check_same(self, other: "RingMatrix", what: str) -> str:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{what}: {self.shape} vs {other.shape}")
        if self.ring != other.ring:
            raise RingMismatchError(f"{what}: {self.ring} vs {other.ring}")
        return self.ring

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        ring = self._check_same(other, "add")
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, orow in other._rows.items():
            row = rows.setdefault(r, {})
            for c, v in orow.items():
                total = row[c] + v if c in row else v
                if total:
                    row[c] = total
                else:
                    row.pop(c, None)
            if not row:
                del rows[r]
        return RingMatrix._wrap(self.nrows, self.ncols, rows, ring)

    def __neg__(self) -> "RingMatrix":
        return RingMatrix._wrap(
            self.nrows, self.ncols, {r: {c: -v for c, v in row.items()} for r, row in self._rows.items()},
            self.ring,
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_same(other, "sub")
        return self + (-other)

    def scale(self, scalar) -> "RingMatrix":
        scalar = _coerce_value(scalar, self.ring)
        if not scalar:
            return RingMatrix.zeros(self.nrows, self.ncols, self.ring)
        rows = {}
        for r, row in self._rows.items():
            kept = {c: v * scalar for c, v in row.items()}
            kept = {c: v for c, v in kept.items() if v}
            if kept:
                rows[r] = kept
        return RingMatrix._wrap(self.nrows, self.ncols, rows, self.ring)

    def __mul__(self, scalar) -> "RingMatrix":
        if isinstance(scalar, RingMatrix):
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"mul: {self.shape} @ {other.shape}")
        if self.ring != other.ring:
            raise RingMismatchError(f"mul: {self.ring} vs {other.ring}")
        rows = {}
        other_rows = other._rows
        for r, row in self._rows.items():
            acc: Dict[int, object] = {}
            for k, a in row.items():
                orow = other_rows.get(k)
                if not orow:
                    continue
                for c, b in orow.items():
                    acc[c] = acc[c] + a * b if c in acc else a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                rows[r] = acc
        return RingMatrix._wrap(self.nrows, other.ncols, rows, self.ring)

    def transpose(self) -> "RingMatrix":
        rows: Dict[int, Dict[int, object]] = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return RingMatrix._wrap(self.ncols, self.nrows, rows, self.ring)

    def specialize(self, at) -> "RingMatrix":
        """Evaluate every entry at q = at; the result lives over Q"""
        if self.ring == "rational":
            return self
        rows = {}
        for r, row in self._rows.items():
            kept = {c: v.evaluate(at) for c, v in row.items()}
            kept = {c: v for c, v in kept.items() if v}
            if kept:
                rows[r] = kept
        return RingMatrix._wrap(self.nrows, self.ncols, rows, "rational")

    def block(self, bi: int, bj: int, size: int) -> "RingMatrix":
        """0-based (bi, bj) block of a matrix cut into size x size blocks"""
        if self.nrows % size or self.ncols % size:
            raise DimensionMismatchError(f"{self.shape} does not split into {size}x{size} blocks")
        r0, c0 = bi * size, bj * size
        rows = {}
        for r in range(r0, r0 + size):
            row = self._rows.get(r)
            if not row:
                continue
            kept = {c - c0: v for c, v in row.items() if c0 <= c < c0 + size}
            if kept:
                rows[r - r0] = kept
        return RingMatrix._wrap(size, size, rows, self.ring)

    def to_dense(self) -> np.ndarray:
        """numpy object array with exact entries, zero-filled; the dense oracle the tests compare against"""
        dense = np.empty((self.nrows, self.ncols), dtype=object)
        dense.fill(ring_zero(self.ring))
        for r, c, v in self.entries():
            dense[r, c] = v
        return dense

    @classmethod
    def from_dense(cls, array, ring: str = "laurent") -> "RingMatrix":
        """Inverse of to_dense; used by tests to build matrices from numpy literals"""
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-d array, got shape {array.shape}")
        nrows, ncols = array.shape
        rows = {}
        for r in range(nrows):
            row = {c: array[r, c] for c in range(ncols) if array[r, c]}
            if row:
                rows[r] = row
        return cls(nrows, ncols, rows, ring)

    def nonzero_terms(self, limit: Optional[int] = None) -> List[Tuple[str, str]]:
        """[("(r,c)", rendered value)] with 1-based coordinates, sorted"""
        out = []
        for r, c, v in self.entries():
            out.append((f"({r + 1},{c + 1})", render_value(v)))
            if limit is not None and len(out) >= limit:
                break
        return out


def mat_arith(a: RingMatrix, b: Optional[RingMatrix], op: str, scalar=None) -> RingMatrix:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    if op == "scale":
        return a.scale(scalar)
    raise ValueError(f"unknown matrix operation: {op}")


def mat_product(factors: Sequence[RingMatrix]) -> RingMatrix:
    """Ordered product of at least one factor"""
    if not factors:
        raise ValueError("empty product")
    result = factors[0]
    for factor in factors[1:]:
        result = result @ factor
    return result


def kron(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    if a.ring != b.ring:
        raise RingMismatchError(f"kron: {a.ring} vs {b.ring}")
    rows: Dict[int, Dict[int, object]] = {}
    for r1, c1, v1 in a.entries():
        for r2, c2, v2 in b.entries():
            v = v1 * v2
            if v:
                rows.setdefault(r1 * b.nrows + r2, {})[c1 * b.ncols + c2] = v
    return RingMatrix._wrap(a.nrows * b.nrows, a.ncols * b.ncols, rows, a.ring)


# ----------------------------------------------------------------------
# tensor legs
# ----------------------------------------------------------------------


class LegSpace:
    """
    (C^n)^(x)L with labelled factors. Auxiliary labels come first (leftmost), then the
    physical legs 1..l.
    """

    def __init__(self, n: int, l: int, aux: Sequence[Hashable] = ()):
        if n < 1 or l < 0:
            raise InvalidIndexError(f"bad leg space n={n}, l={l}")
        labels = tuple(aux) + tuple(range(1, l + 1))
        if len(set(labels)) != len(labels):
            raise InvalidIndexError(f"duplicate leg labels {labels}")
        if not labels:
            raise InvalidIndexError("leg space needs at least one leg")
        self.n = n
        self.l = l
        self.aux = tuple(aux)
        self.labels = labels
        self.dim = n ** len(labels)
        if self.dim > cfg.MAX_SPACE_DIM:
            raise GuardExceededError(
                f"leg space dimension {n}^{len(labels)} = {self.dim} exceeds {cfg.MAX_SPACE_DIM}"
            )
        self._bases: Dict[Tuple[int, ...], List[int]] = {}

    @property
    def num_legs(self) -> int:
        return len(self.labels)

    def position(self, label: Hashable) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidIndexError(f"leg {label!r} not in {self.labels}") from None

    def stride(self, position: int) -> int:
        return self.n ** (self.num_legs - 1 - position)

    def basis_index(self, digits: Sequence[int]) -> int:
        """Index of e_{a_1} (x) ... (x) e_{a_L}, digits 1-based"""
        if len(digits) != self.num_legs:
            raise DimensionMismatchError(f"expected {self.num_legs} digits, got {len(digits)}")
        index = 0
        for a in digits:
            if not 1 <= a <= self.n:
                raise InvalidIndexError(f"basis digit {a} outside 1..{self.n}")
            index = index * self.n + (a - 1)
        return index

    def basis_digits(self, index: int) -> Tuple[int, ...]:
        digits = []
        for _ in range(self.num_legs):
            index, d = divmod(index, self.n)
            digits.append(d + 1)
        return tuple(reversed(digits))

    def identity(self, ring: str = "laurent") -> RingMatrix:
        return RingMatrix.identity(self.dim, ring)

    def _other_bases(self, positions: Tuple[int, ...]) -> List[int]:
        cached = self._bases.get(positions)
        if cached is None:
            others = [p for p in range(self.num_legs) if p not in positions]
            cached = []
            for digits in itertools.product(range(self.n), repeat=len(others)):
                cached.append(sum(d * self.stride(p) for d, p in zip(digits, others)))
            self._bases[positions] = cached
        return cached


def _split_digits(index: int, n: int, k: int) -> Iterator[int]:
    digits = []
    for _ in range(k):
        index, d = divmod(index, n)
        digits.append(d)
    return reversed(digits)


def embed(op: RingMatrix, legs: Sequence[Hashable], space: LegSpace) -> RingMatrix:
    """
    Place an operator on n^k dimensions onto the given legs (its i-th local factor on
    legs[i]) with the identity on every other leg.
    """
    k = len(legs)
    if len(set(legs)) != k:
        raise InvalidIndexError(f"legs must be distinct, got {tuple(legs)}")
    if op.nrows != space.n ** k or not op.is_square():
        raise DimensionMismatchError(
            f"operator {op.shape} does not act on {k} legs of dimension {space.n}"
        )
    positions = tuple(space.position(leg) for leg in legs)
    strides = [space.stride(p) for p in positions]

    def offset(index: int) -> int:
        return sum(d * s for d, s in zip(_split_digits(index, space.n, k), strides))

    bases = space._other_bases(tuple(sorted(positions)))
    rows: Dict[int, Dict[int, object]] = {}
    for r, c, v in op.entries():
        row_off, col_off = offset(r), offset(c)
        for base in bases:
            rows.setdefault(base + row_off, {})[base + col_off] = v
    return RingMatrix._wrap(space.dim, space.dim, rows, op.ring)


def leg_embed(op2: RingMatrix, legs: Tuple[Hashable, Hashable], space: LegSpace) -> RingMatrix:
    if len(legs) != 2 or legs[0] == legs[1]:
        raise InvalidIndexError(f"leg_embed needs two distinct legs, got {legs}")
    return embed(op2, legs, space)


def leg_embed_one(op1: RingMatrix, leg: Hashable, space: LegSpace) -> RingMatrix:
    return embed(op1, (leg,), space)


def partial_transpose(a: RingMatrix, which: str) -> RingMatrix:
    """
    Transpose an operator on C^n (x) C^n in one factor: the coefficient of E_ij (x) E_rs
    moves to E_ji (x) E_rs ("first") or E_ij (x) E_sr ("second").
    """
    if which not in ("first", "second"):
        raise ValueError(f"which must be 'first' or 'second', got {which!r}")
    n = isqrt(a.nrows)
    if not a.is_square() or n * n != a.nrows:
        raise DimensionMismatchError(f"partial transpose needs an n^2 x n^2 matrix, got {a.shape}")
    rows: Dict[int, Dict[int, object]] = {}
    for row, col, v in a.entries():
        i, r = divmod(row, n)
        j, s = divmod(col, n)
        if which == "first":
            new_row, new_col = j * n + r, i * n + s
        else:
            new_row, new_col = i * n + s, j * n + r
        rows.setdefault(new_row, {})[new_col] = v
    return RingMatrix._wrap(a.nrows, a.ncols, rows, a.ring)


def commutes(a: RingMatrix, b: RingMatrix) -> Tuple[bool, RingMatrix]:
    if a.shape != b.shape or not a.is_square():
        raise DimensionMismatchError(f"commutes: {a.shape} vs {b.shape}")
    residual = a @ b - b @ a
    return residual.is_zero(), residual


# ----------------------------------------------------------------------
# exact elimination over Q
# ----------------------------------------------------------------------


class _Echelon:
    """Incremental row echelon form of sparse rational vectors, pivot = smallest key"""

    def __init__(self):
        self.pivots: Dict[int, Dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, vector: Dict[int, Fraction]) -> bool:
        """Insert a vector; True iff it was independent of those already present"""
        v = {k: Fraction(x) for k, x in vector.items() if x}
        while v:
            key = min(v)
            pivot_row = self.pivots.get(key)
            if pivot_row is None:
                lead = v[key]
                self.pivots[key] = {k: x / lead for k, x in v.items()}
                return True
            factor = v[key]
            for k, x in pivot_row.items():
                total = v.get(k, 0) - factor * x
                if total:
                    v[k] = total
                else:
                    v.pop(k, None)
        return False


def _flatten(m: RingMatrix) -> Dict[int, Fraction]:
    return {r * m.ncols + c: v for r, c, v in m.entries()}


def _require_rational(mats: Sequence[RingMatrix], what: str) -> None:
    if not mats:
        raise ValueError(f"{what} needs at least one matrix")
    shape = mats[0].shape
    for m in mats:
        if m.ring != "rational":
            raise RingMismatchError(f"{what} works over Q; specialize q first")
        if m.shape != shape or not m.is_square():
            raise DimensionMismatchError(f"{what}: mixed shapes {shape} and {m.shape}")


def span_rank(mats: Sequence[RingMatrix]) -> int:
    """Dimension of the linear span of the given matrices"""
    _require_rational(mats, "span_rank")
    echelon = _Echelon()
    for m in mats:
        echelon.add(_flatten(m))
    return echelon.rank


def span_dimension(mats: Sequence[RingMatrix]) -> int:
    """Dimension of the unital algebra generated by mats over Q"""
    _require_rational(mats, "span_dimension")
    dim = mats[0].nrows
    identity = RingMatrix.identity(dim, "rational")
    echelon = _Echelon()
    echelon.add(_flatten(identity))
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in mats:
            y = x @ g
            if echelon.add(_flatten(y)):
                frontier.append(y)
    logger.debug("span_dimension: %d generators on %d dims -> %d", len(mats), dim, echelon.rank)
    return echelon.rank


def commutant_dimension(mats: Sequence[RingMatrix]) -> int:
    """dim {X : XM = MX for every M}, the nullity of the stacked commutator map"""
    _require_rational(mats, "commutant_dimension")
    dim = mats[0].nrows
    if dim > cfg.MAX_COMMUTANT_DIM:
        raise GuardExceededError(f"commutant of {dim}x{dim} matrices exceeds N <= {cfg.MAX_COMMUTANT_DIM}")
    echelon = _Echelon()
    for m in mats:
        columns: Dict[int, Dict[int, Fraction]] = {}
        for r, c, v in m.entries():
            columns.setdefault(c, {})[r] = v
        rows = {r: m.row(r) for r in range(dim)}
        # (XM - MX)[a, c] = sum_b X[a, b] M[b, c] - sum_b M[a, b] X[b, c]
        for a in range(dim):
            for c in range(dim):
                eq: Dict[int, Fraction] = {}
                for b, v in columns.get(c, {}).items():
                    key = a * dim + b
                    eq[key] = eq.get(key, 0) + v
                for b, v in rows[a].items():
                    key = b * dim + c
                    eq[key] = eq.get(key, 0) - v
                if any(eq.values()):
                    echelon.add(eq)
    nullity = dim * dim - echelon.rank
    logger.debug("commutant_dimension: %d matrices on %d dims -> %d", len(mats), dim, nullity)
    return nullity
