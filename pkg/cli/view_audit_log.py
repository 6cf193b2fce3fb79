import sys
from typing import Optional, TextIO

from logger.audit_logger import read_audit_log


def view_audit_logs(limit: Optional[int] = 20, path: Optional[str] = None, stream: TextIO = sys.stdout) -> int:
    """Print the tail of the verdict audit trail"""
    logs = read_audit_log(limit, path)

    print("📋 AUDIT LOGS", file=stream)
    print("=" * 50, file=stream)
    if logs:
        for i, line in enumerate(logs, 1):
            print(f"{i:3d}. {line}", file=stream)
    else:
        print("No verdicts recorded yet", file=stream)
    print("=" * 50, file=stream)
    return 0
