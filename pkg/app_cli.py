"""
Command line front end: verify, build, dims, export and audit subcommands.

Exit codes: 0 every checked relation passed, 1 at least one relation failed,
2 usage, configuration, guard or genericity error.
"""
import argparse
import sys
from typing import List, Optional, Tuple

from cli.build_operator import BUILDABLE, cmd_build, cmd_export
from cli.run_verify import cmd_verify
from cli.show_dims import cmd_dims
from cli.view_audit_log import view_audit_logs
from config.run_config import OUTPUT_FORMATS, RunConfig, VerifierSettings
from core.errors import FormatError, QBrauerError
from core.report import SuiteHooks
from logger import configure_logging, log_error

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _entry(text: str) -> Tuple[int, int]:
    try:
        row, col = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected ROW,COL, got {text!r}") from None
    return row, col


def _add_hooks(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--perturb-r", type=_entry, metavar="ROW,COL",
                        help="negative control: add 1 to a 1-based entry of R")
    parser.add_argument("--z-shift", type=int, default=0, metavar="K",
                        help="negative control: use z = q^(n+K) in relation coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbrauer", description="Exact verifier for the quantum Brauer algebra")
    parser.add_argument("--verbose", action="store_true", help="debug logging on the console")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run relation suites over an (n, l) grid")
    verify.add_argument("--suite", action="append", help="suite id or 'all' (repeatable)")
    verify.add_argument("--n", default="2", help="N or A..B")
    verify.add_argument("--l", default="2", help="L or A..B")
    verify.add_argument("--q", action="append", help="rational specialization point(s), p/r")
    verify.add_argument("--out")
    verify.add_argument("--format", choices=OUTPUT_FORMATS)
    verify.add_argument("--workers", type=int)
    _add_hooks(verify)

    build = sub.add_parser("build", help="write a named operator in the matrix interchange format")
    build.add_argument("name", choices=BUILDABLE)
    build.add_argument("--n", type=int, required=True)
    build.add_argument("--l", type=int, help="number of physical legs for S")
    build.add_argument("--out")

    dims = sub.add_parser("dims", help="print algebra, commutant and diagram dimensions")
    dims.add_argument("--n", default="2", help="N or A..B")
    dims.add_argument("--l", default="2", help="L or A..B")
    dims.add_argument("--q", action="append")
    dims.add_argument("--out")
    dims.add_argument("--format", choices=OUTPUT_FORMATS)

    export = sub.add_parser("export", help="write a word image, all diagrams or one residual")
    export.add_argument("--word", help='generator word, e.g. "s1 s2^-1 e2 tau"')
    export.add_argument("--diagrams", action="store_true")
    export.add_argument("--residual", metavar="SUITE:RELATION")
    export.add_argument("--n", type=int, default=2)
    export.add_argument("--l", type=int, default=2)
    export.add_argument("--out")
    _add_hooks(export)

    audit = sub.add_parser("audit", help="show the tail of the verdict audit trail")
    audit.add_argument("--limit", type=int, default=20)
    return parser


def _hooks(args) -> SuiteHooks:
    return SuiteHooks(r_perturbation=args.perturb_r, z_shift=args.z_shift)


def run(args, settings: VerifierSettings) -> int:
    if args.command == "build":
        return cmd_build(args.name, args.n, args.l, args.out)
    if args.command == "export":
        return cmd_export(args.n, args.l, word=args.word, diagrams=args.diagrams, residual=args.residual,
                          out=args.out, hooks=_hooks(args))
    if args.command == "audit":
        return view_audit_logs(args.limit, settings.get("audit_log"))
    config = RunConfig.from_args(args, settings)
    if args.command == "verify":
        return cmd_verify(config, _hooks(args))
    if args.command == "dims":
        return cmd_dims(config)
    raise FormatError(f"unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR

    try:
        settings = VerifierSettings()
        configure_logging(settings.get("log_dir"), args.verbose or settings.get("verbose"))
        return run(args, settings)
    except QBrauerError as exc:
        log_error(f"{type(exc).__name__}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
