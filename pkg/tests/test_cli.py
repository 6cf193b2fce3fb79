import json

import pytest

from app_cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main
from cli.build_operator import export_diagrams, parse_residual_target
from cli.run_verify import grid_cells
from core.errors import FormatError
from core.matrix_io import loads_matrix, read_matrix
from core.report import SuiteId, parse_reports
from core.rmatrix import operator
from logger.audit_logger import read_audit_log


def test_verify_passing_suite(workspace, capsys):
    assert main(["verify", "--suite", "def_2_3", "--n", "2", "--l", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "def23.tau_relation" in out
    assert "No failing relations." in out
    audit = read_audit_log(path=str(workspace / "logs" / "audit.txt"))
    assert audit and all(line.startswith(("[PASS]", "[SKIPPED]")) for line in audit)


def test_verify_structured_output_to_file(workspace):
    out = workspace / "reports.json"
    code = main(["verify", "--suite", "yang_baxter", "--suite", "hecke_rank", "--n", "2..3", "--l", "2",
                 "--format", "structured", "--out", str(out)])
    assert code == EXIT_OK
    reports = parse_reports(out.read_text())
    assert [r.suite for r in reports][0] == "yang_baxter"
    hecke = [r for r in reports if r.suite == "hecke_rank"]
    assert [r.verdict for r in hecke] == ["skipped", "pass"]
    assert hecke[1].q == "5/3,7/2"


def test_verify_negative_control_exits_one(workspace, capsys):
    code = main(["verify", "--suite", "yang_baxter", "--n", "2", "--perturb-r", "2,3"])
    assert code == EXIT_FAIL
    assert "relation(s) failed" in capsys.readouterr().err


def test_verify_wrong_loop_value_exits_one(workspace):
    assert main(["verify", "--suite", "def_2_3", "--n", "2", "--l", "3", "--z-shift", "1"]) == EXIT_FAIL


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nosuch"],
    ["verify", "--suite", "def_2_3", "--n", "7"],
    ["verify", "--suite", "def_2_3", "--n", "4..2"],
    ["verify", "--suite", "hecke_rank", "--n", "3", "--q", "1,2"],
    ["dims", "--n", "2", "--l", "9"],
    ["build", "T", "--n", "2"],
    ["build", "R", "--n", "9"],
    ["export", "--word", "s1", "--diagrams"],
    ["export", "--residual", "def_2_3"],
    ["nosuch"],
])
def test_errors_exit_two(workspace, argv):
    assert main(argv) == EXIT_ERROR


def test_help_exits_zero(workspace):
    assert main(["--help"]) == EXIT_OK


def test_build_r_matrix(workspace):
    out = workspace / "r.mat"
    assert main(["build", "R", "--n", "2", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "qbrauer-matrix v1 rows=4 cols=4 ring=laurent"
    assert len(lines) == 6
    assert read_matrix(str(out)) == operator("R", 2)


def test_build_to_stdout(workspace, capsys):
    assert main(["build", "Q", "--n", "3"]) == EXIT_OK
    assert loads_matrix(capsys.readouterr().out) == operator("Q", 3)
    assert main(["build", "S", "--n", "2", "--l", "1"]) == EXIT_OK
    assert loads_matrix(capsys.readouterr().out).shape == (4, 4)


def test_dims_structured(workspace, capsys):
    assert main(["dims", "--n", "3", "--l", "2", "--q", "5/3", "--format", "structured"]) == EXIT_OK
    [row] = json.loads(capsys.readouterr().out)
    assert (row["diagrams"], row["algebra"], row["commutant"], row["hecke"]) == (3, 3, 3, 2)


def test_dims_text_marks_missing_hecke(workspace, capsys):
    assert main(["dims", "--n", "2", "--l", "2", "--q", "5/3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "commutant" in out
    assert "<NA>" in out


def test_export_diagrams(workspace, capsys):
    assert main(["export", "--diagrams", "--l", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 15
    assert export_diagrams(2).splitlines()[0].startswith("l=2;")


def test_export_word_and_residual(workspace, capsys):
    assert main(["export", "--word", "s1 s1^-1", "--n", "2", "--l", "2"]) == EXIT_OK
    image = loads_matrix(capsys.readouterr().out)
    assert image == image.identity(4)
    assert main(["export", "--residual", "def_2_3:def23.e_square", "--n", "2", "--l", "3",
                 "--z-shift", "1"]) == EXIT_OK
    assert not loads_matrix(capsys.readouterr().out).is_zero()


def test_parse_residual_target():
    assert parse_residual_target("def_2_3:def23.tau_relation") == ("def_2_3", "def23.tau_relation")
    with pytest.raises(FormatError):
        parse_residual_target("def23.tau_relation")


def test_audit_view(workspace, capsys):
    assert main(["audit"]) == EXIT_OK
    assert "No verdicts recorded yet" in capsys.readouterr().out
    main(["verify", "--suite", "yang_baxter", "--n", "2"])
    capsys.readouterr()
    assert main(["audit", "--limit", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "📋 AUDIT LOG" in out
    assert "  1. [PASS]" in out
    assert "  3." not in out


def test_grid_cells_deduplicate_unused_parameters():
    cells = grid_cells([SuiteId.DEF_2_3, SuiteId.YANG_BAXTER], [2, 3], [2, 3])
    assert cells[:2] == [(SuiteId.YANG_BAXTER, 2, 2), (SuiteId.YANG_BAXTER, 3, 2)]
    assert len(cells) == 6
