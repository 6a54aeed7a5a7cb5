# app/cli.py
import argparse
import json
import os
import sys
import time
from typing import List, Optional

from pydantic import ValidationError

from app.config.Settings import settings
from app.core.exceptions import CapExceededError, InvalidInputError
from app.models.equation import EquationInstance, SearchBounds
from app.models.mersenne import MersennePrime
from app.models.report import Report
from app.reports.factory import ReportFormat
from app.services.catalog_service import CatalogService
from app.services.oracle_service import OracleService
from app.services.report_service import ReportService
from app.services.solver_service import SolverService
from app.utils.logging import logger

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP_EXCEEDED = 3


def log_command(command: str, arguments: dict, start_time: float, status: str):
    """Log one CLI invocation"""
    log_entry = {
        "command": command,
        "arguments": arguments,
        "duration_seconds": round(time.time() - start_time, 3),
        "status": status,
    }
    logger.info(f"CLI Call: {json.dumps(log_entry, default=str)}")


def _exponent(exponent: Optional[int], value: Optional[int]) -> int:
    if value is not None:
        return MersennePrime.from_value(value).p
    return exponent


def _instance(args: argparse.Namespace) -> EquationInstance:
    return EquationInstance.from_exponents(_exponent(args.p, args.mp), _exponent(args.q, args.mq), args.l)


def _bounds(args: argparse.Namespace) -> SearchBounds:
    return SearchBounds(x_max=args.x_max, y_max=args.y_max, z_max=args.z_max)


def cmd_solve(args: argparse.Namespace) -> List[Report]:
    result = SolverService.classify(_instance(args), positive_only=args.positive_only)
    return [ReportService.from_solution_set(result)]


def cmd_verify(args: argparse.Namespace) -> List[Report]:
    instance = _instance(args)
    holds = OracleService.verify(instance, args.x, args.y, args.z)
    return [ReportService.from_verify(instance, args.x, args.y, args.z, holds)]


def cmd_search(args: argparse.Namespace) -> List[Report]:
    report = OracleService.cross_check(_instance(args), _bounds(args), workers=args.workers)
    return [ReportService.from_cross_check(report)]


def cmd_tables(args: argparse.Namespace) -> List[Report]:
    reports = []
    if args.which in ("1", "all"):
        rows = CatalogService.table1(args.p_limit)
        reports.append(ReportService.from_catalog(
            rows, name=f"table1_p{args.p_limit}", title=f"Solvable instances with p <= {args.p_limit}",
        ))
    if args.which in ("2", "all"):
        rows = CatalogService.table2(_bounds(args))
        reports.append(ReportService.from_catalog(rows, name="table2", title="Unsolvable instances"))
    return reports


def cmd_mersenne(args: argparse.Namespace) -> List[Report]:
    return [ReportService.from_mersenne(CatalogService.mersenne_primes(args.p_limit), args.p_limit)]


def cmd_catalan(args: argparse.Namespace) -> List[Report]:
    bounds = [args.a_max, args.b_max, args.x_max, args.y_max]
    return [ReportService.from_catalan(OracleService.catalan_search(*bounds), bounds)]


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=[f.value for f in ReportFormat], default=ReportFormat.TEXT.value,
                        help="output format")
    output.add_argument("--out", help="write the report to this file or directory instead of stdout")

    equation = argparse.ArgumentParser(add_help=False)
    p_group = equation.add_mutually_exclusive_group(required=True)
    p_group.add_argument("--p", type=int, help="Mersenne exponent p of M_p")
    p_group.add_argument("--mp", type=int, help="Mersenne prime M_p itself, e.g. 8191")
    q_group = equation.add_mutually_exclusive_group(required=True)
    q_group.add_argument("--q", type=int, help="Mersenne exponent q of M_q")
    q_group.add_argument("--mq", type=int, help="Mersenne prime M_q itself, e.g. 7")
    equation.add_argument("--l", type=int, required=True, help="prime l in (lz)^2")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--x-max", type=int, default=settings.DEFAULT_X_MAX, help="largest exponent x searched")
    bounds.add_argument("--y-max", type=int, default=settings.DEFAULT_Y_MAX, help="largest exponent y searched")
    bounds.add_argument("--z-max", type=int, default=None, help="largest z accepted (default: no cap)")

    ap = argparse.ArgumentParser(
        prog="mersenne-diophantine",
        description="Solve M_p^x + (M_q+1)^y = (lz)^2 over Mersenne primes M_p, M_q and a prime l.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {settings.PROJECT_VERSION}")
    sub = ap.add_subparsers(dest="command", required=True)

    ap_solve = sub.add_parser("solve", parents=[equation, output], help="closed-form solution set")
    ap_solve.add_argument("--positive-only", action="store_true", help="drop solutions with x, y or z equal to 0")
    ap_solve.set_defaults(func=cmd_solve)

    ap_verify = sub.add_parser("verify", parents=[equation, output], help="check one (x, y, z) exactly")
    ap_verify.add_argument("--x", type=int, required=True)
    ap_verify.add_argument("--y", type=int, required=True)
    ap_verify.add_argument("--z", type=int, required=True)
    ap_verify.set_defaults(func=cmd_verify)

    ap_search = sub.add_parser("search", parents=[equation, bounds, output],
                               help="exhaustive search, compared against the closed form")
    ap_search.add_argument("--workers", type=int, default=None, help="worker processes (default: ORACLE_WORKERS)")
    ap_search.set_defaults(func=cmd_search)

    ap_tables = sub.add_parser("tables", parents=[bounds, output], help="solvable / unsolvable tables")
    ap_tables.add_argument("--which", choices=["1", "2", "all"], default="all")
    ap_tables.add_argument("--p-limit", type=int, default=settings.DEFAULT_P_LIMIT,
                           help="largest Mersenne exponent p in the solvable table")
    ap_tables.set_defaults(func=cmd_tables)

    ap_mersenne = sub.add_parser("mersenne", parents=[output], help="list Mersenne primes")
    ap_mersenne.add_argument("--p-limit", type=int, default=settings.Q_MAX)
    ap_mersenne.set_defaults(func=cmd_mersenne)

    ap_catalan = sub.add_parser("catalan", parents=[output], help="search a^x - b^y = 1 in a box")
    ap_catalan.add_argument("--a-max", type=int, default=100)
    ap_catalan.add_argument("--b-max", type=int, default=100)
    ap_catalan.add_argument("--x-max", type=int, default=10)
    ap_catalan.add_argument("--y-max", type=int, default=10)
    ap_catalan.set_defaults(func=cmd_catalan)

    return ap


def _emit(reports: List[Report], report_format: ReportFormat, out_path: Optional[str]) -> None:
    if out_path and len(reports) > 1:
        os.makedirs(out_path, exist_ok=True)
    if out_path:
        for report in reports:
            ReportService.write(report, report_format, out_path)
        return

    if report_format == ReportFormat.JSON and len(reports) > 1:
        reports = [Report(name="combined", title="", document={r.name: r.document for r in reports})]
    texts = [ReportService.render(report, report_format) for report in reports]
    sys.stdout.write("\n".join(texts))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    start_time = time.time()
    arguments = {k: v for k, v in vars(args).items() if k != "func"}
    try:
        reports = args.func(args)
        _emit(reports, ReportFormat(args.format), args.out)
    except (InvalidInputError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        log_command(args.command, arguments, start_time, "invalid")
        return EXIT_INVALID
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        log_command(args.command, arguments, start_time, "cap_exceeded")
        return EXIT_CAP_EXCEEDED
    except OSError as e:
        print(f"error: cannot write {args.out}: {e.strerror or e}", file=sys.stderr)
        logger.error(f"Output error for {args.command}: {e}")
        log_command(args.command, arguments, start_time, "io_error")
        return EXIT_INVALID

    log_command(args.command, arguments, start_time, "success")
    return EXIT_OK
