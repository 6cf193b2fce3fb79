# cli/run_verify.py

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence, Tuple

from config.run_config import RunConfig
from core.analyzer import exit_code_for, verdict_counts
from core.report import RelationReport, SuiteHooks, SuiteId, generate_report, serialize_reports
from core.verify import cell_parameters, verify_relation_suite
from logger import log_event
from logger.audit_logger import log_verdicts

logger = logging.getLogger("QBrauer.cli")

Cell = Tuple[SuiteId, int, int]


def grid_cells(suites: Sequence[SuiteId], n_values: Sequence[int], l_values: Sequence[int]) -> List[Cell]:
    """Canonical cell order; suites that ignore n or l run once per remaining parameter"""
    cells, seen = [], set()
    for suite in sorted(suites, key=lambda s: s.order):
        for n in n_values:
            for l in l_values:
                key = (suite, *cell_parameters(suite, n, l))
                if key in seen:
                    continue
                seen.add(key)
                cells.append((suite, n, l))
    return cells


def _run_cell(cell: Cell, hooks: SuiteHooks, q_points) -> List[RelationReport]:
    suite, n, l = cell
    return verify_relation_suite(suite, n, l, hooks, q_points)


def run_grid(cells: Sequence[Cell], hooks: SuiteHooks = SuiteHooks(), q_points=None,
             workers: int = 1) -> List[RelationReport]:
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_cell, cell, hooks, q_points) for cell in cells]
            results = [f.result() for f in futures]
    else:
        results = [_run_cell(cell, hooks, q_points) for cell in cells]
    return [report for cell_reports in results for report in cell_reports]


def render_reports(reports: List[RelationReport], output_format: str) -> str:
    if output_format == "structured":
        return serialize_reports(reports) + "\n"
    return generate_report(reports)


def cmd_verify(config: RunConfig, hooks: SuiteHooks = SuiteHooks()) -> int:
    cells = grid_cells(config.suites, config.n_values, config.l_values)
    log_event("GRID", {"cells": len(cells), "workers": config.workers})
    reports = run_grid(cells, hooks, config.q_points, config.workers)
    log_verdicts(reports, config.audit_log)

    text = render_reports(reports, config.output_format)
    if config.out:
        with open(config.out, "w", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)

    counts = verdict_counts(reports)
    logger.info("verdicts: %s", counts)
    code = exit_code_for(reports)
    if code:
        print(f"❌ {counts['fail']} relation(s) failed", file=sys.stderr)
    return code
