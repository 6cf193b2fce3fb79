import argparse
import os
import json
from fractions import Fraction

import pytest

from config.run_config import RunConfig, VerifierSettings, parse_q_points, parse_range, parse_suites
from core.errors import FormatError, UnknownNameError
from core.report import SuiteId


@pytest.mark.parametrize("text,values", [("3", [3]), ("2..4", [2, 3, 4]), (" 5..5 ", [5])])
def test_parse_range(text, values):
    assert parse_range(text) == values


@pytest.mark.parametrize("text", ["", "a", "2..", "4..2", "1...3"])
def test_parse_range_rejects(text):
    with pytest.raises(FormatError):
        parse_range(text)


def test_parse_q_points():
    assert parse_q_points("5/3,7/2") == [Fraction(5, 3), Fraction(7, 2)]
    assert parse_q_points(["2", "3,-4/5"]) == [Fraction(2), Fraction(3), Fraction(-4, 5)]


def test_parse_suites():
    assert parse_suites([]) == list(SuiteId)
    assert parse_suites(["all"]) == list(SuiteId)
    assert parse_suites(["def_2_3"]) == [SuiteId.DEF_2_3]
    with pytest.raises(UnknownNameError):
        parse_suites(["def23"])


def test_settings_defaults_file_and_environment(tmp_path):
    path = tmp_path / "qbrauer_config.json"
    assert VerifierSettings(str(path), environ={}).get("q_points") == "5/3,7/2"

    path.write_text(json.dumps({"q_points": "2,3", "workers": 3, "colour": "red"}))
    settings = VerifierSettings(str(path), environ={"QBRAUER_WORKERS": "4", "QBRAUER_VERBOSE": "yes"})
    assert settings.get("q_points") == "2,3"
    assert settings.get("workers") == 4
    assert settings.get("verbose") is True
    assert settings.get("colour") is None


def test_settings_save(tmp_path):
    path = tmp_path / "qbrauer_config.json"
    settings = VerifierSettings(str(path), environ={})
    settings.set("format", "structured", save=True)
    assert json.loads(path.read_text())["format"] == "structured"
    assert VerifierSettings(str(path), environ={}).get("format") == "structured"


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_bad_settings_file(tmp_path, content):
    path = tmp_path / "qbrauer_config.json"
    path.write_text(content)
    with pytest.raises(FormatError):
        VerifierSettings(str(path), environ={})


def test_bad_worker_count(tmp_path):
    with pytest.raises(FormatError):
        VerifierSettings(str(tmp_path / "none.json"), environ={"QBRAUER_WORKERS": "many"})


def test_run_config_validation():
    with pytest.raises(FormatError):
        RunConfig("verify")
    with pytest.raises(FormatError):
        RunConfig("dims", output_format="xml")
    with pytest.raises(FormatError):
        RunConfig("dims", n_values=[1])
    with pytest.raises(FormatError):
        RunConfig("dims", l_values=[0])


def test_run_config_from_args(tmp_path):
    settings = VerifierSettings(str(tmp_path / "none.json"), environ={"QBRAUER_AUDIT_LOG": "audit.txt"})
    args = argparse.Namespace(command="verify", suite=["yang_baxter"], n="2..3", l=None, q=None, out=None,
                              format=None, workers=None, verbose=False)
    config = RunConfig.from_args(args, settings)
    assert config.n_values == [2, 3]
    assert config.l_values == [2]
    assert config.suites == [SuiteId.YANG_BAXTER]
    assert config.q_points == [Fraction(5, 3), Fraction(7, 2)]
    assert (config.output_format, config.workers, config.audit_log) == ("text", 1, "audit.txt")


def test_runtime_requirements_exclude_dev_tools():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    with open(os.path.join(root, "requirements.txt")) as f:
        names = [line.split(">=")[0].strip().lower() for line in f if line.strip()]
    assert names == ["pandas", "numpy", "python-dotenv"]
