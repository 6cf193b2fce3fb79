# config/verify_config.py

import os
from fractions import Fraction

from dotenv import load_dotenv

load_dotenv()

# === Size Guards ===
MIN_LOCAL_DIM = 2
MAX_LOCAL_DIM = 6            # n for build_operator
MAX_SPACE_DIM = 4096         # n^(number of legs) for any embedded operator
MAX_COMMUTANT_DIM = 100      # N for commutant_dimension (N^2 unknowns)
MAX_DUALITY_SPACE = 27       # n^l for the duality cell (n^(2l) unknowns in the exact solve)
MAX_DIAGRAM_SIZE = 6         # l for enumerate_diagrams
MAX_PAIRWISE_DIAGRAM_SIZE = 3  # l for the all-pairs homomorphism check
RESIDUAL_SAMPLE_SIZE = 3

# === Specialization ===
DEFAULT_Q_POINTS = "5/3,7/2"
FORBIDDEN_Q_POINTS = (Fraction(0), Fraction(1), Fraction(-1))


def _env_flag(name: str, default: str = "FALSE") -> bool:
    return os.getenv(name, default).strip().upper() in ("1", "TRUE", "YES", "ON")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


# === Environment Overrides ===
Q_POINTS = os.getenv("QBRAUER_Q_POINTS", DEFAULT_Q_POINTS)
LOG_DIR = os.getenv("QBRAUER_LOG_DIR", "logs")
AUDIT_LOG = os.getenv("QBRAUER_AUDIT_LOG", os.path.join(LOG_DIR, "verification_audit.txt"))
WORKERS = max(1, _env_int("QBRAUER_WORKERS", 1))
VERBOSE = _env_flag("QBRAUER_VERBOSE")

# === Settings File ===
SETTINGS_FILE = "qbrauer_config.json"
