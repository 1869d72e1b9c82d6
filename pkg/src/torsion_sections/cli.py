"""Command-line front end: tables and verification suites as text or JSON.

Every subcommand recomputes both sides of what it prints and exits with
0 when all checks pass, 2 on usage or input errors and 3 when an identity fails.
"""

import argparse
import logging
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError, field_validator

from torsion_sections.arith import format_root
from torsion_sections.codec import encode_divisor, encode_kelement, load_divisor
from torsion_sections.config import create_from_config, get_default_config_path, load_config
from torsion_sections.config.models import TorsionConfig
from torsion_sections.data import FiberKind, OutputFormat, SuiteReport
from torsion_sections.errors import CodecError, InvariantViolation, NotPrincipalError, TorsionError
from torsion_sections.fiber import FiberShape
from torsion_sections.function_group import abel_check, abel_witness
from torsion_sections.modular import (
    component_number,
    cusps,
    duality_check,
    involution,
    m_fraction,
    quotient_component_numbers,
    r_fraction,
    root_of_unity_number,
    total_weight,
    weil_cross_check,
    z_matrix,
)
from torsion_sections.modular.cusps import half
from torsion_sections.run_logger import RunLogger
from torsion_sections.render import report_payload, report_text, text_table, to_json
from torsion_sections.verify import VerificationRunner, equidist_report, zmatrix_report
from torsion_sections.weil import LimitWeilPairing, TorsionLabel, weil_formula

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class CLIArgs(BaseModel):
    """Validated CLI arguments."""

    command: str
    format: OutputFormat = OutputFormat.TEXT
    out: Path | None = None
    config: Path | None = None
    log: bool = False
    log_dir: str | None = None
    verbose: bool = False

    p: int | None = None
    alpha: int = 1
    m: int | None = None
    k: int = 1
    p1: tuple[int, int] | None = None
    p2: tuple[int, int] | None = None
    divisor: Path | None = None

    @field_validator("config", "divisor")
    @classmethod
    def file_must_exist(cls, v: Path | None) -> Path | None:
        if v is not None and not v.exists():
            raise ValueError(f"File not found: {v}")
        return v

    @field_validator("m", "k")
    @classmethod
    def order_must_be_positive(cls, v: int | None) -> int | None:
        if v is not None and v < 1:
            raise ValueError("orders and base-change degrees must be positive")
        return v


@dataclass
class CommandResult:
    """What a subcommand produced: a JSON payload, its text rendering and its checks."""

    payload: Any
    text: str
    reports: list[SuiteReport] = field(default_factory=list)
    logged: bool = False

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


@dataclass
class RunContext:
    """Components shared by every subcommand of one invocation."""

    config: TorsionConfig
    pairing: LimitWeilPairing
    run_logger: RunLogger | None = None


def _require(value: int | None, flag: str) -> int:
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


# ============================================================
# Subcommands
# ============================================================


def cmd_cusps(args: CLIArgs, _ctx: RunContext) -> CommandResult:
    p = _require(args.p, "--p")
    alpha = args.alpha
    rows = []
    shown_ell: list[int | None] = []
    for cusp in cusps(p):
        k = component_number(p, alpha, cusp)
        # l is only defined where the section meets the identity component
        ell = (
            {f"alpha={a}": root_of_unity_number(p, a, cusp.index).rep for a in range(1, p)}
            if cusp.kind is FiberKind.I1
            else {}
        )
        shown_ell.append(ell.get(f"alpha={alpha % p}"))
        rows.append(
            {
                "rep": cusp.rep,
                "type": str(cusp.kind),
                "weight": cusp.weight,
                "k": k.rep if k is not None else 0,
                "ell": ell,
            }
        )

    weight = total_weight(p)
    report = SuiteReport("cusps", {"p": p, "alpha": alpha})
    report.add("p - 1 singular fibers", len(rows) == p - 1, f"{len(rows)} cusps")
    report.add("total weight (p^2 - 1)/2", weight == (p * p - 1) // 2, f"weight {weight}")

    m_values = {str(i): str(m_fraction(p, alpha, i)) for i in range(half(p) + 1)}
    r_values = {str(i): str(r_fraction(p, alpha, i)) for i in range(1, half(p) + 1)}
    payload = {
        "p": p,
        "alpha": alpha,
        "cusps": rows,
        "total_weight": weight,
        "M": m_values,
        "R": r_values,
    }
    table = text_table(
        ["cusp", "type", "weight", "k", "l"],
        [
            [r["rep"], r["type"], r["weight"], r["k"], "-" if ell is None else ell]
            for r, ell in zip(rows, shown_ell, strict=True)
        ],
    )
    text = f"p = {p}, T_{alpha}: {len(rows)} cusps, total weight {weight}\n{table}"
    return CommandResult(payload, text, [report])


def cmd_equidist(args: CLIArgs, _ctx: RunContext) -> CommandResult:
    report = equidist_report(_require(args.p, "--p"), args.alpha)
    return CommandResult(report_payload(report), report_text(report, verbose=True), [report])


def cmd_zmatrix(args: CLIArgs, _ctx: RunContext) -> CommandResult:
    p = _require(args.p, "--p")
    matrix = [[c.rep for c in row] for row in z_matrix(p)]
    report = zmatrix_report(p)
    payload = {"p": p, "z": matrix, "checks": report_payload(report)}
    headers = ["i \\ j", *[str(j) for j in range(1, len(matrix) + 1)]]
    table = text_table(headers, [[i, *row] for i, row in enumerate(matrix, 1)])
    return CommandResult(payload, table + report_text(report), [report])


def cmd_involution(args: CLIArgs, _ctx: RunContext) -> CommandResult:
    p = _require(args.p, "--p")
    alpha = args.alpha
    pairs = []
    for cusp in cusps(p):
        if cusp.kind is not FiberKind.I1:
            continue
        image = involution(cusp)
        k = component_number(p, alpha, image)
        pairs.append(
            {
                "cusp": cusp.rep,
                "image": image.rep,
                "ell": root_of_unity_number(p, alpha, cusp.index).rep,
                "k_image": k.rep if k is not None else 0,
            }
        )
    quotient = [
        {
            "cusp": row.cusp.rep,
            "fiber": str(row.fiber),
            "weight": row.weight,
            "k": row.k.rep if row.k is not None else 0,
        }
        for row in quotient_component_numbers(p, alpha)
    ]
    reports = [duality_check(p, alpha), weil_cross_check(p)]
    payload = {
        "p": p,
        "alpha": alpha,
        "involution": pairs,
        "quotient": quotient,
        "checks": [report_payload(r) for r in reports],
    }
    text = (
        f"Involution A on X_1({p}), T_{alpha}\n"
        + text_table(
            ["x", "Ax", "l_x", "k_Ax"],
            [[r["cusp"], r["image"], r["ell"], r["k_image"]] for r in pairs],
        )
        + f"\nQuotient fibration, T'_{alpha}\n"
        + text_table(
            ["cusp", "fiber", "weight", "k"],
            [[r["cusp"], r["fiber"], r["weight"], r["k"]] for r in quotient],
        )
        + "\n"
        + "".join(report_text(r) for r in reports)
    )
    return CommandResult(payload, text, reports)


def cmd_weil(args: CLIArgs, ctx: RunContext) -> CommandResult:
    m = _require(args.m, "--m")
    if args.p1 is None or args.p2 is None:
        raise ValueError("--p1 and --p2 are required")
    p = TorsionLabel(*args.p1, m)
    q = TorsionLabel(*args.p2, m)
    shape = FiberShape(m * args.k)

    definitional = ctx.pairing.weil_definitional(p, q, shape)
    formula = weil_formula(p, q)
    report = SuiteReport("weil", {"m": m, "k": args.k, "p1": str(p), "p2": str(q)})
    report.add(
        "definitional equals formula",
        definitional == formula,
        f"{format_root(definitional, m)} vs {format_root(formula, m)}",
    )
    payload = {
        "m": m,
        "k": args.k,
        "p1": str(p),
        "p2": str(q),
        "definitional": format_root(definitional, m),
        "formula": format_root(formula, m),
        "passed": report.passed,
    }
    text = (
        f"e_{m}({p}, {q}) on I_{shape.m}\n"
        f"  definitional: {format_root(definitional, m)}\n"
        f"  formula:      {format_root(formula, m)}\n"
        f"{report.summary()}\n"
    )
    return CommandResult(payload, text, [report])


def cmd_abel(args: CLIArgs, _ctx: RunContext) -> CommandResult:
    m = _require(args.m, "--m")
    if args.divisor is None:
        raise ValueError("--divisor is required")
    d = load_divisor(args.divisor)
    if d.shape.m != m:
        raise CodecError(f"--m {m} does not match the divisor file (m = {d.shape.m})")

    principal = abel_check(d)
    payload: dict[str, Any] = {
        "m": m,
        "divisor": encode_divisor(d),
        "principal": principal,
        "witness": None,
    }
    lines = [f"D = {d}", "principal" if principal else "not principal"]
    if principal:
        try:
            witness = abel_witness(d)
        except NotPrincipalError as exc:
            msg = f"abel_check accepted {d} but no witness exists: {exc}"
            raise InvariantViolation(msg) from exc
        payload["witness"] = encode_kelement(witness)
        lines.append(f"witness: {witness}")
    return CommandResult(payload, "\n".join(lines) + "\n")


def cmd_verify(_args: CLIArgs, ctx: RunContext) -> CommandResult:
    runner = VerificationRunner(ctx.config.sweep, ctx.pairing, run_logger=ctx.run_logger)
    reports = runner.run()
    failed = [r for r in reports if not r.passed]
    payload = {
        "passed": not failed,
        "suites": len(reports),
        "failed": len(failed),
        "reports": [report_payload(r) for r in reports],
    }
    text = "".join(report_text(r) for r in reports)
    text += f"\n{len(reports) - len(failed)}/{len(reports)} suites passed\n"
    return CommandResult(payload, text, reports, logged=True)


COMMANDS: dict[str, Callable[[CLIArgs, RunContext], CommandResult]] = {
    "cusps": cmd_cusps,
    "equidist": cmd_equidist,
    "zmatrix": cmd_zmatrix,
    "involution": cmd_involution,
    "weil": cmd_weil,
    "abel": cmd_abel,
    "verify": cmd_verify,
}


# ============================================================
# Entry point
# ============================================================


def _label_pair(text: str) -> tuple[int, int]:
    """Parse "t,s" into the coordinates of M(t, s)."""
    try:
        t, s = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected t,s (two integers), got {text!r}") from exc
    return t, s


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )
    common.add_argument("--out", type=Path, help="Write the result to FILE instead of stdout")
    common.add_argument(
        "--config",
        "-c",
        type=Path,
        default=None,
        help="Path to YAML config file (default: configs/default.yaml)",
    )
    common.add_argument(
        "--log",
        action="store_true",
        default=False,
        help="Write a JSON run record with every check",
    )
    common.add_argument(
        "--log-dir",
        type=str,
        default=None,
        help="Directory for run records (default: logging.log_dir from config)",
    )
    common.add_argument(
        "--verbose", "-v", action="store_true", default=False, help="Debug logging"
    )

    parser = argparse.ArgumentParser(
        prog="torsion",
        description="Torsion sections, I_m fibers and the limit Weil pairing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cusps_cmd = sub.add_parser("cusps", parents=[common], help="Cusp table of X_1(p)")
    cusps_cmd.add_argument("--p", type=int, required=True)
    cusps_cmd.add_argument("--alpha", type=int, default=1)

    equidist = sub.add_parser(
        "equidist", parents=[common], help="M_i and R_i against their closed forms"
    )
    equidist.add_argument("--p", type=int, required=True)
    equidist.add_argument("--alpha", type=int, default=1)

    zmatrix = sub.add_parser("zmatrix", parents=[common], help="Root-of-unity matrix Z")
    zmatrix.add_argument("--p", type=int, required=True)

    inv = sub.add_parser(
        "involution", parents=[common], help="Involution duality and the quotient table"
    )
    inv.add_argument("--p", type=int, required=True)
    inv.add_argument("--alpha", type=int, default=1)

    weil = sub.add_parser("weil", parents=[common], help="Limit Weil pairing of two points")
    weil.add_argument("--m", type=int, required=True)
    weil.add_argument("--k", type=int, default=1)
    weil.add_argument("--p1", type=_label_pair, required=True, metavar="T,S")
    weil.add_argument("--p2", type=_label_pair, required=True, metavar="T,S")

    abel = sub.add_parser("abel", parents=[common], help="Principality of a divisor")
    abel.add_argument("--m", type=int, required=True)
    abel.add_argument("--divisor", type=Path, required=True, metavar="FILE")

    sub.add_parser("verify", parents=[common], help="Run every verification sweep")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        logger.info("Result written to: %s", out)


def run(args: CLIArgs) -> int:
    """Execute one subcommand and return its exit code.

    Args:
        args: Validated CLI arguments.
    """
    config_path = args.config
    if config_path is None and get_default_config_path().exists():
        config_path = get_default_config_path()
    config = load_config(config_path)
    if not args.verbose:
        logging.getLogger().setLevel(config.logging.level)

    pairing, run_logger = create_from_config(
        config,
        log_override=args.log if args.log else None,
        log_dir_override=args.log_dir,
    )
    ctx = RunContext(config, pairing, run_logger)
    if run_logger:
        run_logger.start_run(args.command, args.model_dump(exclude_none=True))

    exit_code = EXIT_USAGE
    try:
        t0 = time.monotonic()
        result = COMMANDS[args.command](args, ctx)
        if run_logger and not result.logged:
            duration = time.monotonic() - t0
            for report in result.reports:
                run_logger.log_report(report, duration)

        if args.format is OutputFormat.JSON:
            _emit(to_json(result.payload), args.out)
        else:
            _emit(result.text, args.out)

        exit_code = EXIT_OK if result.passed else EXIT_INVARIANT
        for report in result.reports:
            for check in report.failures:
                logger.error("FAIL %s: %s %s", report.name, check.name, check.detail)
    except InvariantViolation:
        exit_code = EXIT_INVARIANT
        raise
    finally:
        if run_logger:
            path = run_logger.finish_run(exit_code)
            if path:
                logger.info("Run log written to: %s", path)
    return exit_code


def main(argv: list[str] | None = None) -> int:
    """Entry point for the CLI."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.INFO, format="%(message)s")

    try:
        args = CLIArgs(
            command=ns.command,
            format=OutputFormat(ns.format),
            out=ns.out,
            config=ns.config,
            log=ns.log,
            log_dir=ns.log_dir,
            verbose=ns.verbose,
            p=getattr(ns, "p", None),
            alpha=getattr(ns, "alpha", 1),
            m=getattr(ns, "m", None),
            k=getattr(ns, "k", 1),
            p1=getattr(ns, "p1", None),
            p2=getattr(ns, "p2", None),
            divisor=getattr(ns, "divisor", None),
        )
    except ValidationError as e:
        logger.error(str(e))
        return EXIT_USAGE

    try:
        return run(args)
    except InvariantViolation as e:
        logger.error("invariant violation: %s", e)
        return EXIT_INVARIANT
    except (TorsionError, ValueError, FileNotFoundError) as e:
        logger.error("error: %s", e)
        return EXIT_USAGE
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
