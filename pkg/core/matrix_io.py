"""
Text interchange format for RingMatrix.

    qbrauer-matrix v1 rows=<m> cols=<m> ring=<laurent|rational>
    <r> <c> <value>

One entry per line, 1-based coordinates, sorted by (r, c). Output is bit-exact: writing
what was read reproduces the same bytes.
"""
import os
import re
from typing import TextIO, Union

from core.errors import FormatError
from core.linalg import RINGS, RingMatrix
from core.ring import parse_value, render_value

HEADER_RE = re.compile(r"^qbrauer-matrix v1 rows=(\d+) cols=(\d+) ring=(\w+)$")


def dumps_matrix(m: RingMatrix) -> str:
    lines = [f"qbrauer-matrix v1 rows={m.nrows} cols={m.ncols} ring={m.ring}"]
    for r, c, v in m.entries():
        lines.append(f"{r + 1} {c + 1} {render_value(v)}")
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> RingMatrix:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty matrix file")
    match = HEADER_RE.match(lines[0].strip())
    if not match:
        raise FormatError(f"bad matrix header: {lines[0]!r}")
    nrows, ncols, ring = int(match.group(1)), int(match.group(2)), match.group(3)
    if ring not in RINGS:
        raise FormatError(f"unknown ring in header: {ring!r}")

    entries = []
    last = None
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(" ", 2)
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 'r c value', got {line!r}")
        try:
            r, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad coordinates in {line!r}") from None
        if not (1 <= r <= nrows and 1 <= c <= ncols):
            raise FormatError(f"line {lineno}: entry ({r},{c}) outside {nrows}x{ncols}")
        if last is not None and (r, c) <= last:
            raise FormatError(f"line {lineno}: entries not strictly sorted by (row, col)")
        last = (r, c)
        value = parse_value(parts[2], ring)
        if not value:
            raise FormatError(f"line {lineno}: zero entries are not stored")
        entries.append((r - 1, c - 1, value))
    return RingMatrix.from_entries(nrows, ncols, entries, ring)


def write_matrix(m: RingMatrix, target: Union[str, TextIO]) -> None:
    text = dumps_matrix(m)
    if hasattr(target, "write"):
        target.write(text)
        return
    out_dir = os.path.dirname(target)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    with open(target, "w", newline="\n") as f:
        f.write(text)


def read_matrix(path: str) -> RingMatrix:
    with open(path, "r") as f:
        return loads_matrix(f.read())
