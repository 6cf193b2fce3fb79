import pytest

from core.report import Verdict


@pytest.fixture
def workspace(tmp_path, monkeypatch):
    """Run in an empty directory with logs and the audit trail kept inside it"""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("QBRAUER_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("QBRAUER_AUDIT_LOG", str(tmp_path / "logs" / "audit.txt"))
    monkeypatch.delenv("QBRAUER_WORKERS", raising=False)
    monkeypatch.delenv("QBRAUER_Q_POINTS", raising=False)
    monkeypatch.delenv("QBRAUER_VERBOSE", raising=False)
    return tmp_path


def verdicts(reports):
    return {r.relation_id: r.verdict for r in reports}


def assert_all_pass(reports, allow_skipped=True):
    """Every report passes; skipped and observed reports are tolerated unless disallowed"""
    allowed = {Verdict.PASS.value, Verdict.OBSERVED.value}
    if allow_skipped:
        allowed.add(Verdict.SKIPPED.value)
    bad = [r.summary_line() for r in reports if r.verdict not in allowed]
    assert not bad, "\n".join(bad)
    assert any(r.passed for r in reports)
