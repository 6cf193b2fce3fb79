# report.py

import json
import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from config import verify_config as cfg
from core.errors import FormatError, UnknownNameError

logger = logging.getLogger("QBrauer.report")


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    OBSERVED = "observed"


class SuiteId(str, Enum):
    YANG_BAXTER = "yang_baxter"
    RTT_VECTOR = "rtt_vector"
    REFLECTION_S = "reflection_S"
    S_SHAPE = "s_shape"
    DEF_2_3 = "def_2_3"
    DERIVED_2_4 = "derived_2_4"
    PROP_4_1 = "prop_4_1"
    THM_4_2_COMMUTE = "thm_4_2_commute"
    PROOF_IDENTITIES = "proof_identities"
    BRAUER_PRESENTATION = "brauer_presentation"
    Q1_SPECIALIZATION = "q1_specialization"
    HECKE_RANK = "hecke_rank"
    CENTRALIZER_DUALITY = "centralizer_duality"

    @classmethod
    def parse(cls, name: str) -> "SuiteId":
        try:
            return cls(name)
        except ValueError:
            known = ", ".join(s.value for s in cls)
            raise UnknownNameError(f"unknown suite {name!r}; expected one of {known}") from None

    @property
    def order(self) -> int:
        return list(SuiteId).index(self)


@dataclass(frozen=True)
class SuiteHooks:
    """Negative-control knobs; the defaults reproduce the true operators"""
    r_perturbation: Optional[Tuple[int, int]] = None  # 1-based (row, col) of R bumped by +1
    z_shift: int = 0                                   # use z = q^(n + z_shift)


@dataclass
class Check:
    """One relation instance, evaluated lazily by the engine"""
    relation_id: str
    residual_fn: Optional[Callable[[], Any]] = None
    skip_reason: Optional[str] = None
    observation: bool = False
    detail: str = ""


@dataclass
class RelationReport:
    suite: str
    relation_id: str
    n: Optional[int]
    l: Optional[int]
    verdict: str
    q: Optional[str] = None
    residual_nonzeros: int = 0
    residual_sample: List[str] = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS.value

    @property
    def failed(self) -> bool:
        return self.verdict == Verdict.FAIL.value

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "RelationReport":
        try:
            report = cls(
                suite=record["suite"],
                relation_id=record["relation_id"],
                n=record.get("n"),
                l=record.get("l"),
                verdict=record["verdict"],
                q=record.get("q"),
                residual_nonzeros=int(record.get("residual_nonzeros", 0)),
                residual_sample=list(record.get("residual_sample", [])),
                detail=record.get("detail", ""),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad report record {record!r}: {exc}") from exc
        if report.verdict not in {v.value for v in Verdict}:
            raise FormatError(f"bad verdict {report.verdict!r}")
        return report

    def summary_line(self) -> str:
        where = f"n={self.n} l={self.l}" + (f" q={self.q}" if self.q else "")
        text = f"[{self.verdict.upper()}] {self.suite}:{self.relation_id} ({where})"
        if self.residual_nonzeros:
            text += f" residual={self.residual_nonzeros} {'; '.join(self.residual_sample)}"
        if self.detail:
            text += f" -- {self.detail}"
        return text


def summarize_residual(residual) -> Tuple[int, List[str]]:
    """(nonzero count, up to RESIDUAL_SAMPLE_SIZE rendered entries)"""
    count = residual.nnz
    sample = [f"{where}={value}" for where, value in residual.nonzero_terms(limit=cfg.RESIDUAL_SAMPLE_SIZE)]
    return count, sample


def evaluate_check(check: Check, suite: str, n: Optional[int], l: Optional[int],
                   q: Optional[str] = None) -> RelationReport:
    report = RelationReport(suite=suite, relation_id=check.relation_id, n=n, l=l,
                            verdict=Verdict.SKIPPED.value, q=q, detail=check.detail)
    if check.skip_reason is not None or check.residual_fn is None:
        report.detail = check.skip_reason or "not applicable"
        logger.info("skipped %s:%s (n=%s l=%s): %s", suite, check.relation_id, n, l, report.detail)
        return report
    count, sample = summarize_residual(check.residual_fn())
    report.residual_nonzeros, report.residual_sample = count, sample
    if check.observation:
        report.verdict = Verdict.OBSERVED.value
        report.detail = report.detail or ("commutes" if count == 0 else "does not commute")
    else:
        report.verdict = Verdict.PASS.value if count == 0 else Verdict.FAIL.value
    if report.failed:
        logger.warning("FAIL %s", report.summary_line())
    else:
        logger.debug("%s %s:%s (n=%s l=%s)", report.verdict, suite, check.relation_id, n, l)
    return report


def evaluate_checks(checks: List[Check], suite: str, n: Optional[int], l: Optional[int],
                    q: Optional[str] = None) -> List[RelationReport]:
    return [evaluate_check(c, suite, n, l, q) for c in checks]


def sort_key(report: RelationReport):
    return (SuiteId(report.suite).order, report.n or 0, report.l or 0)


def serialize_reports(reports: List[RelationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def parse_reports(text: str) -> List[RelationReport]:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"report is not valid JSON: {exc}") from exc
    if not isinstance(records, list):
        raise FormatError("report must be a JSON list of records")
    return [RelationReport.from_dict(record) for record in records]


def reports_table(reports: List[RelationReport]) -> pd.DataFrame:
    columns = ["suite", "relation_id", "n", "l", "q", "verdict", "residual_nonzeros", "detail"]
    if not reports:
        return pd.DataFrame(columns=columns)
    frame = pd.DataFrame([r.to_dict() for r in reports])
    return frame[columns]


def generate_report(reports: List[RelationReport]) -> str:
    """
    Text rendering: one row per relation, then a per-suite verdict count table and the
    failing relations with their residual samples.
    """
    # local import keeps report -> analyzer one-directional at module load
    from core.analyzer import failing_relations, suite_stats

    if not reports:
        return "No relations checked.\n"
    lines = []
    with pd.option_context("display.max_rows", None, "display.max_columns", None, "display.width", 200):
        lines.append(reports_table(reports).drop(columns=["detail"]).to_string(index=False))
        lines.append("")
        lines.append("Per-suite summary:")
        lines.append(suite_stats(reports).to_string())
    failures = failing_relations(reports)
    lines.append("")
    if failures:
        lines.append("Failing relations:")
        lines.extend(f"  {r.summary_line()}" for r in failures)
    else:
        lines.append("No failing relations.")
    observed = [r for r in reports if r.verdict == Verdict.OBSERVED.value or "duality observed" in r.detail]
    if observed:
        lines.append("")
        lines.append("Observations:")
        lines.extend(f"  {r.summary_line()}" for r in observed)
    return "\n".join(lines) + "\n"
