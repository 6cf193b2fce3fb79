"""
Brauer diagrams and the classical Brauer algebra B_l(eta).

Dots are integers: top dots T1..Tl are 0..l-1, bottom dots B1..Bl are l..2l-1. A diagram
is a perfect matching stored as sorted (small, large) pairs, so equal diagrams compare and
hash equal.
"""
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from config import verify_config as cfg
from core.errors import DimensionMismatchError, FormatError, GuardExceededError, InvalidIndexError
from core.linalg import LegSpace, RingMatrix
from core.ring import render_value

Edge = Tuple[int, int]

_DOT_RE = re.compile(r"^([TB])(\d+)$")
_TEXT_RE = re.compile(r"^l=(\d+);(.*)$")


def dot_name(dot: int, l: int) -> str:
    return f"T{dot + 1}" if dot < l else f"B{dot - l + 1}"


def _parse_dot(token: str, l: int) -> int:
    match = _DOT_RE.match(token.strip())
    if not match:
        raise FormatError(f"bad dot {token!r}")
    idx = int(match.group(2))
    if not 1 <= idx <= l:
        raise FormatError(f"dot {token!r} outside 1..{l}")
    return idx - 1 if match.group(1) == "T" else l + idx - 1


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    l: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.l < 1:
            raise InvalidIndexError(f"diagram size must be positive, got {self.l}")
        canonical = tuple(sorted(tuple(sorted(edge)) for edge in self.edges))
        seen = [dot for edge in canonical for dot in edge]
        if sorted(seen) != list(range(2 * self.l)):
            raise InvalidIndexError(f"edges {self.edges} are not a perfect matching on {2 * self.l} dots")
        object.__setattr__(self, "edges", canonical)

    @classmethod
    def from_partners(cls, l: int, partner: Sequence[int]) -> "BrauerDiagram":
        return cls(l, tuple((a, b) for a, b in enumerate(partner) if a < b))

    def partners(self) -> List[int]:
        partner = [0] * (2 * self.l)
        for a, b in self.edges:
            partner[a], partner[b] = b, a
        return partner

    def is_permutation(self) -> bool:
        return all(a < self.l <= b for a, b in self.edges)

    def __str__(self) -> str:
        body = ", ".join(f"{dot_name(a, self.l)}-{dot_name(b, self.l)}" for a, b in self.edges)
        return f"l={self.l}; {body}"

    @classmethod
    def parse(cls, text: str) -> "BrauerDiagram":
        match = _TEXT_RE.match(text.strip())
        if not match:
            raise FormatError(f"bad diagram text {text!r}")
        l = int(match.group(1))
        edges = []
        for chunk in match.group(2).split(","):
            if not chunk.strip():
                continue
            ends = chunk.strip().split("-")
            if len(ends) != 2:
                raise FormatError(f"bad edge {chunk!r}")
            edges.append((_parse_dot(ends[0], l), _parse_dot(ends[1], l)))
        try:
            return cls(l, tuple(edges))
        except InvalidIndexError as exc:
            raise FormatError(str(exc)) from exc


def identity_diagram(l: int) -> BrauerDiagram:
    return BrauerDiagram(l, tuple((i, l + i) for i in range(l)))


def permutation_diagram(perm: Sequence[int]) -> BrauerDiagram:
    """T_i joined to B_perm[i-1]; perm is a 1-based image list"""
    l = len(perm)
    if sorted(perm) != list(range(1, l + 1)):
        raise InvalidIndexError(f"{perm} is not a permutation of 1..{l}")
    return BrauerDiagram(l, tuple((i, l + perm[i] - 1) for i in range(l)))


def brauer_generator(kind: str, i: int, l: int) -> BrauerDiagram:
    if not 1 <= i <= l - 1:
        raise InvalidIndexError(f"generator index {i} outside 1..{l - 1}")
    a, b = i - 1, i
    others = [(k, l + k) for k in range(l) if k not in (a, b)]
    if kind == "sigma":
        return BrauerDiagram(l, tuple(others + [(a, l + b), (b, l + a)]))
    if kind == "e":
        return BrauerDiagram(l, tuple(others + [(a, b), (l + a, l + b)]))
    raise InvalidIndexError(f"unknown generator kind {kind!r}")


def diagram_compose(d1: BrauerDiagram, d2: BrauerDiagram) -> Tuple[int, BrauerDiagram]:
    """d1 placed above d2; returns (number of closed loops, resulting diagram)"""
    if d1.l != d2.l:
        raise DimensionMismatchError(f"cannot compose l={d1.l} with l={d2.l}")
    l = d1.l
    upper, lower = d1.partners(), d2.partners()
    visited = set()

    def follow(from_upper: bool, dot: int) -> int:
        while True:
            partner = upper[dot] if from_upper else lower[dot]
            if from_upper and partner < l:
                return partner
            if not from_upper and partner >= l:
                return partner
            middle = partner - l if from_upper else partner
            visited.add(middle)
            from_upper, dot = (False, middle) if from_upper else (True, l + middle)

    result = [0] * (2 * l)
    for top in range(l):
        end = follow(True, top)
        result[top], result[end] = end, top
    for bottom in range(l, 2 * l):
        end = follow(False, bottom)
        result[bottom], result[end] = end, bottom

    loops = 0
    for start in range(l):
        if start in visited:
            continue
        loops += 1
        middle, on_upper = start, True
        while middle not in visited:
            visited.add(middle)
            middle = upper[l + middle] - l if on_upper else lower[middle]
            on_upper = not on_upper
    return loops, BrauerDiagram.from_partners(l, result)


def _pairings(dots: List[int]) -> Iterator[List[Edge]]:
    if not dots:
        yield []
        return
    first, rest = dots[0], dots[1:]
    for idx, other in enumerate(rest):
        for tail in _pairings(rest[:idx] + rest[idx + 1:]):
            yield [(first, other)] + tail


def enumerate_diagrams(l: int) -> List[BrauerDiagram]:
    if l < 1:
        raise InvalidIndexError(f"diagram size must be positive, got {l}")
    if l > cfg.MAX_DIAGRAM_SIZE:
        raise GuardExceededError(f"enumerating l={l} diagrams exceeds l <= {cfg.MAX_DIAGRAM_SIZE}")
    return sorted(BrauerDiagram(l, tuple(p)) for p in _pairings(list(range(2 * l))))


def double_factorial_odd(l: int) -> int:
    """(2l - 1)!! = 1 * 3 * ... * (2l - 1)"""
    result = 1
    for k in range(1, 2 * l, 2):
        result *= k
    return result


def diagram_to_operator(d: BrauerDiagram, n: int) -> RingMatrix:
    """Delta-pattern operator on (C^n)^(x)l: each edge forces equal indices at its ends"""
    space = LegSpace(n, d.l)
    one = Fraction(1)
    rows: Dict[int, Dict[int, Fraction]] = {}
    for values in itertools.product(range(1, n + 1), repeat=d.l):
        digits = [0] * (2 * d.l)
        for (a, b), v in zip(d.edges, values):
            digits[a] = digits[b] = v
        row = space.basis_index(digits[:d.l])
        col = space.basis_index(digits[d.l:])
        rows.setdefault(row, {})[col] = one
    return RingMatrix(space.dim, space.dim, rows, "rational")


class DiagramElement:
    """Finite linear combination of l-diagrams"""

    __slots__ = ("l", "terms")

    def __init__(self, l: int, terms: Optional[Dict[BrauerDiagram, object]] = None):
        self.l = l
        clean = {}
        for d, c in (terms or {}).items():
            if d.l != l:
                raise DimensionMismatchError(f"diagram of size {d.l} in an l={l} element")
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def of(cls, d: BrauerDiagram, coeff=1) -> "DiagramElement":
        return cls(d.l, {d: coeff})

    def _check(self, other: "DiagramElement") -> None:
        if self.l != other.l:
            raise DimensionMismatchError(f"l={self.l} vs l={other.l}")

    def __add__(self, other: "DiagramElement") -> "DiagramElement":
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return DiagramElement(self.l, terms)

    def __neg__(self) -> "DiagramElement":
        return DiagramElement(self.l, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "DiagramElement") -> "DiagramElement":
        return self + (-other)

    def scale(self, coeff) -> "DiagramElement":
        return DiagramElement(self.l, {d: coeff * c for d, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def nnz(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramElement):
            return NotImplemented
        return self.l == other.l and self.terms == other.terms

    def __repr__(self) -> str:
        return f"DiagramElement(l={self.l}, terms={len(self.terms)})"

    def nonzero_terms(self, limit: Optional[int] = None) -> List[Tuple[str, str]]:
        out = []
        for d in sorted(self.terms):
            out.append((str(d), render_value(self.terms[d])))
            if limit is not None and len(out) >= limit:
                break
        return out


def elem_mul(x: DiagramElement, y: DiagramElement, eta) -> DiagramElement:
    x._check(y)
    terms: Dict[BrauerDiagram, object] = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            loops, d = diagram_compose(d1, d2)
            c = c1 * c2 * eta ** loops if loops else c1 * c2
            terms[d] = terms[d] + c if d in terms else c
    return DiagramElement(x.l, terms)


def compose_all(diagrams: Iterable[BrauerDiagram]) -> Tuple[int, BrauerDiagram]:
    """Left-to-right composition of a non-empty sequence, accumulating loops"""
    diagrams = list(diagrams)
    if not diagrams:
        raise ValueError("compose_all needs at least one diagram")
    loops, result = 0, diagrams[0]
    for d in diagrams[1:]:
        extra, result = diagram_compose(result, d)
        loops += extra
    return loops, result


class DiagramAlgebra:
    """Relation-builder adapter: B_l(eta) with diagram generators"""

    def __init__(self, l: int, eta):
        self.l = l
        self.eta = eta

    def identity(self) -> DiagramElement:
        return DiagramElement.of(identity_diagram(self.l))

    def sigma(self, i: int) -> DiagramElement:
        return DiagramElement.of(brauer_generator("sigma", i, self.l))

    # sigma_i is an involution in B_l(eta)
    sigma_inv = sigma

    def e(self, i: int) -> DiagramElement:
        return DiagramElement.of(brauer_generator("e", i, self.l))

    def tau(self) -> DiagramElement:
        k = self.l - 1
        return self.mul(self.sigma(k - 1), self.sigma(k - 2), self.sigma(k), self.sigma(k - 1))

    tau_inv = tau

    def mul(self, *xs: DiagramElement) -> DiagramElement:
        result = xs[0]
        for x in xs[1:]:
            result = elem_mul(result, x, self.eta)
        return result

    def add(self, *xs: DiagramElement) -> DiagramElement:
        total = xs[0]
        for x in xs[1:]:
            total = total + x
        return total

    def sub(self, a: DiagramElement, b: DiagramElement) -> DiagramElement:
        return a - b

    def scale(self, coeff, x: DiagramElement) -> DiagramElement:
        return x.scale(coeff)
