"""
build and export subcommands: named operators, S, generator words, diagrams and residuals
in the interchange formats.
"""
import sys
from typing import Optional, TextIO

from core.diagram import enumerate_diagrams
from core.errors import FormatError, InvalidIndexError
from core.linalg import RingMatrix
from core.matrix_io import write_matrix
from core.report import SuiteHooks
from core.rep import GeneratorWord, RepContext, rep_S, rep_word
from core.rmatrix import OPERATOR_NAMES, operator
from core.verify import relation_residual

BUILDABLE = OPERATOR_NAMES + ("S",)


def build_matrix(name: str, n: int, l: Optional[int] = None) -> RingMatrix:
    if name == "S":
        return rep_S(n, l or 1)
    return operator(name, n)


def _emit(matrix: RingMatrix, out: Optional[str], stream: TextIO) -> None:
    write_matrix(matrix, out if out else stream)


def cmd_build(name: str, n: int, l: Optional[int] = None, out: Optional[str] = None,
              stream: TextIO = sys.stdout) -> int:
    _emit(build_matrix(name, n, l), out, stream)
    return 0


def export_word(word_text: str, n: int, l: int) -> RingMatrix:
    ctx = RepContext(n, l)
    return rep_word(ctx, GeneratorWord.parse(word_text, l))


def export_diagrams(l: int) -> str:
    return "".join(f"{d}\n" for d in enumerate_diagrams(l))


def parse_residual_target(text: str):
    """'def_2_3:def23.tau_relation' -> ('def_2_3', 'def23.tau_relation')"""
    suite, sep, relation = text.partition(":")
    if not sep or not suite or not relation:
        raise FormatError(f"bad residual target {text!r}; expected SUITE:RELATION")
    return suite, relation


def cmd_export(n: int, l: int, word: Optional[str] = None, diagrams: bool = False,
               residual: Optional[str] = None, out: Optional[str] = None,
               hooks: SuiteHooks = SuiteHooks(), stream: TextIO = sys.stdout) -> int:
    chosen = sum(1 for flag in (word is not None, diagrams, residual is not None) if flag)
    if chosen != 1:
        raise InvalidIndexError("export needs exactly one of --word, --diagrams, --residual")
    if diagrams:
        text = export_diagrams(l)
        if out:
            with open(out, "w", newline="\n") as f:
                f.write(text)
        else:
            stream.write(text)
        return 0
    if word is not None:
        _emit(export_word(word, n, l), out, stream)
        return 0
    suite, relation = parse_residual_target(residual)
    _emit(relation_residual(suite, n, l, relation, hooks), out, stream)
    return 0
