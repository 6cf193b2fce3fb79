import logging

from core.report import RelationReport
from logger import configure_logging, log_event, log_file_path, logger
from logger.audit_logger import log_verdict, log_verdicts, read_audit_log


def test_audit_trail(tmp_path):
    path = str(tmp_path / "nested" / "audit.txt")
    assert read_audit_log(path=path) == []
    log_verdict(RelationReport("yang_baxter", "ybe.R", 2, None, "fail", residual_nonzeros=3), path)
    log_verdicts([RelationReport("def_2_3", f"def23.hecke_quadratic[{i}]", 2, 4, "pass") for i in (1, 2, 3)],
                 path)
    lines = read_audit_log(path=path)
    assert len(lines) == 4
    assert lines[0].startswith("[FAIL] ")
    assert lines[0].endswith("| suite=yang_baxter relation=ybe.R n=2 l=None residual=3")
    assert [line.split("relation=")[1].split()[0] for line in read_audit_log(2, path)] == [
        "def23.hecke_quadratic[2]", "def23.hecke_quadratic[3]"]


def test_configure_logging_writes_dated_file(tmp_path):
    log_dir = str(tmp_path / "logs")
    try:
        configure_logging(log_dir, verbose=False)
        assert len(logger.handlers) == 2
        assert not logger.propagate
        logging.getLogger("QBrauer.verify").info("suite started")
        log_event("GRID", {"cells": 2})
        for handler in logger.handlers:
            handler.flush()
        text = open(log_file_path(log_dir)).read()
        assert "QBrauer.verify: suite started" in text
        assert "[GRID] {'cells': 2}" in text

        configure_logging(None, verbose=True)
        assert len(logger.handlers) == 1
        assert logger.level == logging.DEBUG
    finally:
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
