# analyzer.py

from typing import Dict, List

import pandas as pd

from core.report import RelationReport, Verdict, reports_table

VERDICT_COLUMNS = [v.value for v in Verdict]


def reports_frame(reports: List[RelationReport]) -> pd.DataFrame:
    """Reports as a DataFrame, one row per relation instance"""
    return reports_table(reports)


def suite_stats(reports: List[RelationReport]) -> pd.DataFrame:
    """
    Verdict counts per suite, in suite order, with a column per verdict.
    """
    frame = reports_frame(reports)
    if frame.empty:
        return pd.DataFrame(columns=VERDICT_COLUMNS)
    counts = frame.groupby(["suite", "verdict"]).size().unstack(fill_value=0)
    counts = counts.reindex(columns=VERDICT_COLUMNS, fill_value=0)
    order = {suite: idx for idx, suite in enumerate(dict.fromkeys(frame["suite"]))}
    return counts.loc[sorted(counts.index, key=order.get)]


def verdict_counts(reports: List[RelationReport]) -> Dict[str, int]:
    counts = {v: 0 for v in VERDICT_COLUMNS}
    for report in reports:
        counts[report.verdict] += 1
    return counts


def failing_relations(reports: List[RelationReport]) -> List[RelationReport]:
    return [r for r in reports if r.failed]


def skipped_relations(reports: List[RelationReport]) -> List[RelationReport]:
    return [r for r in reports if r.verdict == Verdict.SKIPPED.value]


def exit_code_for(reports: List[RelationReport]) -> int:
    """0 when nothing failed; skipped and observed verdicts never fail a run"""
    return 1 if failing_relations(reports) else 0
