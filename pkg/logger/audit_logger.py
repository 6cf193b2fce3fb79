# logger/audit_logger.py

import os
from collections import deque
from datetime import datetime, timezone
from typing import Iterable, List, Optional

from config import verify_config as cfg


def _audit_path(path: Optional[str] = None) -> str:
    return path or cfg.AUDIT_LOG


def _write_log(entry_type: str, details: str, path: Optional[str] = None):
    log_path = _audit_path(path)
    timestamp = datetime.now(timezone.utc).isoformat()
    log_entry = f"[{entry_type}] {timestamp} | {details}\n"

    log_dir = os.path.dirname(log_path)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
    with open(log_path, "a") as f:
        f.write(log_entry)


def log_verdict(report, path: Optional[str] = None):
    details = (f"suite={report.suite} relation={report.relation_id} n={report.n} l={report.l} "
               f"residual={report.residual_nonzeros}")
    _write_log(report.verdict.upper(), details, path)


def log_verdicts(reports: Iterable, path: Optional[str] = None):
    for report in reports:
        log_verdict(report, path)


def read_audit_log(limit: Optional[int] = None, path: Optional[str] = None) -> List[str]:
    """Last `limit` audit lines (all of them when limit is None); empty if no log exists yet"""
    log_path = _audit_path(path)
    if not os.path.exists(log_path):
        return []
    with open(log_path) as f:
        lines = deque((line.rstrip("\n") for line in f), maxlen=limit)
    return list(lines)
