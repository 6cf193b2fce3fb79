"""
Run configuration for the command line tool.

Precedence: built-in defaults < qbrauer_config.json < QBRAUER_* environment < CLI flags.
"""
import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from config import verify_config as cfg
from core.errors import FormatError
from core.report import SuiteId
from core.ring import parse_rational

logger = logging.getLogger("QBrauer.config")

OUTPUT_FORMATS = ("text", "structured")


def parse_range(text: str) -> List[int]:
    """'3' -> [3], '2..4' -> [2, 3, 4]"""
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise FormatError(f"bad range {text!r}; expected N or A..B") from exc
    if lo > hi:
        raise FormatError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_q_points(values) -> List[Fraction]:
    """Accepts a comma separated string or a list of strings (each possibly comma separated)"""
    if isinstance(values, str):
        values = [values]
    points: List[Fraction] = []
    for value in values:
        points.extend(parse_rational(part) for part in str(value).split(",") if part.strip())
    return points


def parse_suites(names: Sequence[str]) -> List[SuiteId]:
    if not names or "all" in names:
        return list(SuiteId)
    return [SuiteId.parse(name) for name in names]


class VerifierSettings:
    """Settings file plus environment overrides"""

    CONFIG_FILE = cfg.SETTINGS_FILE

    DEFAULT_CONFIG = {
        "q_points": cfg.DEFAULT_Q_POINTS,
        "log_dir": "logs",
        "audit_log": os.path.join("logs", "verification_audit.txt"),
        "workers": 1,
        "verbose": False,
        "format": "text",
    }

    ENV_KEYS = {
        "QBRAUER_Q_POINTS": "q_points",
        "QBRAUER_LOG_DIR": "log_dir",
        "QBRAUER_AUDIT_LOG": "audit_log",
        "QBRAUER_WORKERS": "workers",
        "QBRAUER_VERBOSE": "verbose",
    }

    def __init__(self, config_file: Optional[str] = None, environ: Optional[Dict[str, str]] = None):
        self.config_file = config_file or self.CONFIG_FILE
        self.config = self._load_config()
        self._apply_environment_overrides(os.environ if environ is None else environ)

    def _load_config(self) -> Dict[str, Any]:
        config = self.DEFAULT_CONFIG.copy()
        if not os.path.exists(self.config_file):
            return config
        try:
            with open(self.config_file) as f:
                loaded = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise FormatError(f"cannot read settings file {self.config_file}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise FormatError(f"settings file {self.config_file} must hold a JSON object")
        unknown = set(loaded) - set(self.DEFAULT_CONFIG)
        if unknown:
            logger.warning("ignoring unknown settings: %s", ", ".join(sorted(unknown)))
        config.update({k: v for k, v in loaded.items() if k in self.DEFAULT_CONFIG})
        return config

    def _apply_environment_overrides(self, environ):
        for env_key, key in self.ENV_KEYS.items():
            value = environ.get(env_key)
            if value is None:
                continue
            if key == "workers":
                try:
                    self.config[key] = max(1, int(value))
                except ValueError as exc:
                    raise FormatError(f"{env_key} must be an integer, got {value!r}") from exc
            elif key == "verbose":
                self.config[key] = value.strip().upper() in ("1", "TRUE", "YES", "ON")
            else:
                self.config[key] = value

    def save(self):
        with open(self.config_file, "w") as f:
            json.dump(self.config, f, indent=2)

    def get(self, key: str, default: Any = None):
        return self.config.get(key, default)

    def set(self, key: str, value: Any, save: bool = False):
        self.config[key] = value
        if save:
            self.save()


@dataclass
class RunConfig:
    command: str
    n_values: List[int] = field(default_factory=lambda: [2])
    l_values: List[int] = field(default_factory=lambda: [2])
    suites: List[SuiteId] = field(default_factory=list)
    q_points: List[Fraction] = field(default_factory=list)
    out: Optional[str] = None
    output_format: str = "text"
    workers: int = 1
    log_dir: Optional[str] = None
    audit_log: Optional[str] = None
    verbose: bool = False

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise FormatError(f"unknown output format {self.output_format!r}")
        if self.command == "verify" and not self.suites:
            raise FormatError("verify needs at least one suite")
        for n in self.n_values:
            if not cfg.MIN_LOCAL_DIM <= n <= cfg.MAX_LOCAL_DIM:
                raise FormatError(f"n={n} outside {cfg.MIN_LOCAL_DIM}..{cfg.MAX_LOCAL_DIM}")
        for l in self.l_values:
            if l < 1:
                raise FormatError(f"l must be positive, got {l}")

    @classmethod
    def from_args(cls, args, settings: Optional[VerifierSettings] = None) -> "RunConfig":
        settings = settings or VerifierSettings()
        q_values = getattr(args, "q", None) or [settings.get("q_points")]
        workers = getattr(args, "workers", None)
        return cls(
            command=args.command,
            n_values=parse_range(getattr(args, "n", None) or "2"),
            l_values=parse_range(getattr(args, "l", None) or "2"),
            suites=parse_suites(getattr(args, "suite", None) or []) if args.command == "verify" else [],
            q_points=parse_q_points(q_values),
            out=getattr(args, "out", None),
            output_format=getattr(args, "format", None) or settings.get("format"),
            workers=int(workers if workers is not None else settings.get("workers")),
            log_dir=settings.get("log_dir"),
            audit_log=settings.get("audit_log"),
            verbose=bool(getattr(args, "verbose", False) or settings.get("verbose")),
        )
