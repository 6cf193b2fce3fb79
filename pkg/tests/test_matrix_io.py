import io

import pytest

from core.errors import FormatError
from core.matrix_io import dumps_matrix, loads_matrix, read_matrix, write_matrix
from core.rmatrix import operator


def test_r_matrix_text_is_exact():
    text = dumps_matrix(operator("R", 2))
    assert text.splitlines() == [
        "qbrauer-matrix v1 rows=4 cols=4 ring=laurent",
        "1 1 1*q^1",
        "2 2 1*q^0",
        "2 3 1*q^1 + -1*q^-1",
        "3 3 1*q^0",
        "4 4 1*q^1",
    ]


def test_file_round_trip_is_bit_exact(tmp_path):
    path = tmp_path / "out" / "rcheck.mat"
    original = operator("Rcheck", 3)
    write_matrix(original, str(path))
    assert read_matrix(str(path)) == original
    assert path.read_text() == dumps_matrix(original)


def test_rational_matrix_to_stream():
    buffer = io.StringIO()
    write_matrix(operator("Q", 2).specialize(2), buffer)
    assert buffer.getvalue().splitlines()[1] == "1 1 2"
    assert loads_matrix(buffer.getvalue()).ring == "rational"


@pytest.mark.parametrize("text", [
    "",
    "matrix rows=2 cols=2 ring=laurent\n",
    "qbrauer-matrix v1 rows=2 cols=2 ring=complex\n",
    "qbrauer-matrix v1 rows=2 cols=2 ring=rational\n2 1 1\n1 1 1\n",
    "qbrauer-matrix v1 rows=2 cols=2 ring=rational\n3 1 1\n",
    "qbrauer-matrix v1 rows=2 cols=2 ring=rational\n1 1 0\n",
    "qbrauer-matrix v1 rows=2 cols=2 ring=rational\n1 1\n",
    "qbrauer-matrix v1 rows=2 cols=2 ring=laurent\n1 1 q\n",
])
def test_malformed_files_are_rejected(text):
    with pytest.raises(FormatError):
        loads_matrix(text)
