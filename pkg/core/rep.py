"""
Images of the quantum Brauer generators on (C^n)^(x)l with z = q^n, generator words, and
the S-matrix image on the space with one auxiliary leg.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from core.errors import FormatError, InvalidIndexError
from core.linalg import LegSpace, RingMatrix, embed, kron, mat_product
from core.ring import QUANTUM_DIFF
from core.rmatrix import operator

logger = logging.getLogger("QBrauer.rep")

LETTER_KINDS = ("sigma", "sigmaInv", "e", "tau", "tauInv")

_TOKEN_RE = re.compile(r"^(s|e)(\d+)(\^-1)?$|^(tau)(\^-1)?$")


@dataclass(frozen=True)
class Letter:
    kind: str
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "sigma":
            return f"s{self.index}"
        if self.kind == "sigmaInv":
            return f"s{self.index}^-1"
        if self.kind == "e":
            return f"e{self.index}"
        return "tau" if self.kind == "tau" else "tau^-1"

    @classmethod
    def parse(cls, token: str) -> "Letter":
        match = _TOKEN_RE.match(token.strip())
        if not match:
            raise FormatError(f"bad generator letter {token!r}")
        if match.group(4):
            return cls("tauInv" if match.group(5) else "tau")
        index = int(match.group(2))
        if match.group(1) == "e":
            if match.group(3):
                raise FormatError(f"e_i has no inverse: {token!r}")
            return cls("e", index)
        return cls("sigmaInv" if match.group(3) else "sigma", index)


def sigma(i: int) -> Letter:
    return Letter("sigma", i)


def sigma_inv(i: int) -> Letter:
    return Letter("sigmaInv", i)


def e(i: int) -> Letter:
    return Letter("e", i)


TAU = Letter("tau")
TAU_INV = Letter("tauInv")


def validate_letter(letter: Letter, l: int) -> None:
    if letter.kind not in LETTER_KINDS:
        raise InvalidIndexError(f"unknown letter kind {letter.kind!r}")
    if letter.kind in ("tau", "tauInv"):
        if l < 4:
            raise InvalidIndexError(f"tau needs l >= 4, got l={l}")
        return
    if letter.index is None or not 1 <= letter.index <= l - 1:
        raise InvalidIndexError(f"letter {letter} outside 1..{l - 1}")


@dataclass(frozen=True)
class GeneratorWord:
    l: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            validate_letter(letter, self.l)

    @classmethod
    def parse(cls, text: str, l: int) -> "GeneratorWord":
        tokens = text.replace(",", " ").split()
        return cls(l, tuple(Letter.parse(t) for t in tokens))

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        if self.l != other.l:
            raise InvalidIndexError(f"cannot concatenate words for l={self.l} and l={other.l}")
        return GeneratorWord(self.l, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def tau_letters(l: int) -> Tuple[Letter, ...]:
    """tau = s_{k-1} s_{k-2} s_k s_{k-1} with k = l - 1"""
    k = l - 1
    return (sigma(k - 1), sigma(k - 2), sigma(k), sigma(k - 1))


def tau_inv_letters(l: int) -> Tuple[Letter, ...]:
    k = l - 1
    return (sigma_inv(k - 1), sigma_inv(k), sigma_inv(k - 2), sigma_inv(k - 1))


class RepContext:
    """
    Generator images for fixed (n, l). Images are built on first use and cached; the e_i
    tower is filled top-down from e_{l-1}.
    """

    def __init__(self, n: int, l: int):
        if l < 2:
            raise InvalidIndexError(f"the representation needs l >= 2, got l={l}")
        self.n = n
        self.l = l
        self.space = LegSpace(n, l)
        self._rcheck = operator("Rcheck", n)
        self._q = operator("Q", n)
        self._cache: Dict[Letter, RingMatrix] = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    def identity(self) -> RingMatrix:
        return self.space.identity()

    def image(self, letter: Letter) -> RingMatrix:
        validate_letter(letter, self.l)
        cached = self._cache.get(letter)
        if cached is not None:
            return cached
        image = self._build(letter)
        self._cache[letter] = image
        return image

    def _build(self, letter: Letter) -> RingMatrix:
        i = letter.index
        if letter.kind == "sigma":
            return embed(self._rcheck, (i, i + 1), self.space)
        if letter.kind == "sigmaInv":
            return self.image(sigma(i)) - self.identity().scale(QUANTUM_DIFF)
        if letter.kind == "tau":
            return mat_product([self.image(x) for x in tau_letters(self.l)])
        if letter.kind == "tauInv":
            return mat_product([self.image(x) for x in tau_inv_letters(self.l)])
        if i == self.l - 1:
            return embed(self._q, (i, i + 1), self.space)
        # e_i = s_{i+1} s_i e_{i+1} s_i^-1 s_{i+1}^-1
        logger.debug("building e_%d for n=%d l=%d", i, self.n, self.l)
        return mat_product([
            self.image(sigma(i + 1)),
            self.image(sigma(i)),
            self.image(e(i + 1)),
            self.image(sigma_inv(i)),
            self.image(sigma_inv(i + 1)),
        ])


def rep_generator(ctx: RepContext, gen: Letter) -> RingMatrix:
    return ctx.image(gen)


def rep_word(ctx: RepContext, word: GeneratorWord) -> RingMatrix:
    if word.l != ctx.l:
        raise InvalidIndexError(f"word for l={word.l} evaluated in l={ctx.l}")
    if not word.letters:
        return ctx.identity()
    return mat_product([ctx.image(letter) for letter in word.letters])


def lift_to_aux(x: RingMatrix, n: int) -> RingMatrix:
    """X acting on legs 1..l of the space with the auxiliary leg 0 leftmost"""
    return kron(RingMatrix.identity(n), x)


# ----------------------------------------------------------------------
# S-matrix image
# ----------------------------------------------------------------------


def s_image(space: LegSpace, aux: Hashable, legs: Optional[Sequence[Hashable]] = None,
            r_prime: Optional[RingMatrix] = None, r_tilde: Optional[RingMatrix] = None) -> RingMatrix:
    """'R_{a,1} ... 'R_{a,l} ~R_{a,l} ... ~R_{a,1} on the given space"""
    legs = list(range(1, space.l + 1)) if legs is None else list(legs)
    r_prime = operator("Rprime", space.n) if r_prime is None else r_prime
    r_tilde = operator("Rtilde", space.n) if r_tilde is None else r_tilde
    factors = [embed(r_prime, (aux, m), space) for m in legs]
    factors += [embed(r_tilde, (aux, m), space) for m in reversed(legs)]
    return mat_product(factors)


@lru_cache(maxsize=32)
def rep_S(n: int, l: int) -> RingMatrix:
    if l < 1:
        raise InvalidIndexError(f"rep_S needs l >= 1, got l={l}")
    space = LegSpace(n, l, aux=(0,))
    return s_image(space, 0)


def rep_s_blocks(n: int, l: int) -> List[List[RingMatrix]]:
    """[i-1][j-1] is the action of s_ij on (C^n)^(x)l"""
    s = rep_S(n, l)
    size = n ** l
    return [[s.block(i, j, size) for j in range(n)] for i in range(n)]


class ImageAlgebra:
    """
    Relation-builder adapter over the representation images, optionally specialized at
    a rational q (then every image and result lives over Q).
    """

    def __init__(self, ctx: RepContext, at=None):
        self.ctx = ctx
        self.l = ctx.l
        self.at = at
        self._specialized: Dict[Letter, RingMatrix] = {}

    def _image(self, letter: Letter) -> RingMatrix:
        if self.at is None:
            return self.ctx.image(letter)
        cached = self._specialized.get(letter)
        if cached is None:
            cached = self.ctx.image(letter).specialize(self.at)
            self._specialized[letter] = cached
        return cached

    def identity(self) -> RingMatrix:
        return self.ctx.space.identity("laurent" if self.at is None else "rational")

    def sigma(self, i: int) -> RingMatrix:
        return self._image(sigma(i))

    def sigma_inv(self, i: int) -> RingMatrix:
        return self._image(sigma_inv(i))

    def e(self, i: int) -> RingMatrix:
        return self._image(e(i))

    def tau(self) -> RingMatrix:
        return self._image(TAU)

    def tau_inv(self) -> RingMatrix:
        return self._image(TAU_INV)

    def mul(self, *xs: RingMatrix) -> RingMatrix:
        return mat_product(list(xs))

    def add(self, *xs: RingMatrix) -> RingMatrix:
        total = xs[0]
        for x in xs[1:]:
            total = total + x
        return total

    def sub(self, a: RingMatrix, b: RingMatrix) -> RingMatrix:
        return a - b

    def scale(self, coeff, x: RingMatrix) -> RingMatrix:
        return x.scale(coeff)
