import os
from typing import List, Optional

from app.models.catalog import CatalogRow
from app.models.crosscheck import CatalanSolution, CrossCheckReport
from app.models.equation import EquationInstance, SolutionSet
from app.models.mersenne import MersennePrime
from app.models.report import Report
from app.reports.factory import EmitterFactory, ReportFormat
from app.utils.logging import logger


def _triple(x: int, y: int, z: int) -> str:
    return f"({x},{y},{z})"


def _solution_lines(result: SolutionSet) -> List[str]:
    lines = [f"  {_triple(*s.triple)}  {s.case_label.value}" for s in result.solutions]
    if not lines:
        lines.append("  no solutions")
    for reason in result.nonexistence_reasons:
        lines.append(f"  reason {reason.kind.value}: {reason.detail}")
    return lines


class ReportService:
    """Turns library results into format-neutral reports and writes them."""

    @staticmethod
    def from_solution_set(result: SolutionSet, name: str = "solve") -> Report:
        instance = result.instance
        rows = [[str(s.x), str(s.y), str(s.z), s.case_label.value, "", ""] for s in result.solutions]
        rows += [["", "", "", "", r.kind.value, r.detail] for r in result.nonexistence_reasons]
        return Report(
            name=name,
            title=f"{instance}  [M_p={instance.mp.value}, M_q={instance.mq.value}, l={instance.l}]",
            lines=_solution_lines(result),
            columns=["x", "y", "z", "case_label", "reason", "detail"],
            rows=rows,
            document=result.model_dump(mode="json"),
        )

    @staticmethod
    def from_verify(instance: EquationInstance, x: int, y: int, z: int, holds: bool) -> Report:
        lhs, rhs = instance.lhs(x, y), instance.rhs(z)
        return Report(
            name="verify",
            title=f"{instance}  at {_triple(x, y, z)}",
            lines=[f"  lhs = {lhs}", f"  rhs = {rhs}", f"  holds: {str(holds).lower()}"],
            columns=["x", "y", "z", "holds"],
            rows=[[str(x), str(y), str(z), str(holds).lower()]],
            document={
                "instance": instance.model_dump(mode="json"),
                "x": x, "y": y, "z": z,
                "lhs": lhs, "rhs": rhs, "holds": holds,
            },
        )

    @staticmethod
    def from_cross_check(report: CrossCheckReport) -> Report:
        b = report.bounds
        lines = ["oracle:"] + _solution_lines(report.oracle)
        lines += ["closed form within bounds:"] + _solution_lines(report.solver)
        if report.consistent:
            lines.append("consistent: true")
        else:
            lines.append("consistent: false")
            lines += [f"  discrepancy {_triple(d.x, d.y, d.z)} found only by {d.found_by.value}" for d in report.discrepancies]

        rows = [["oracle", str(s.x), str(s.y), str(s.z)] for s in report.oracle.solutions]
        rows += [["solver", str(s.x), str(s.y), str(s.z)] for s in report.solver.solutions]
        rows += [[f"discrepancy:{d.found_by.value}", str(d.x), str(d.y), str(d.z)] for d in report.discrepancies]
        return Report(
            name="search",
            title=f"{report.instance}  x <= {b.x_max}, y <= {b.y_max}, z <= {b.z_max if b.z_max is not None else 'implied'}",
            lines=lines,
            columns=["source", "x", "y", "z"],
            rows=rows,
            document=report.model_dump(mode="json"),
        )

    @staticmethod
    def from_catalog(rows: List[CatalogRow], name: str, title: str) -> Report:
        lines = []
        for row in rows:
            shown = _triple(*row.solution) if row.solution else "-"
            line = (f"  M_p={row.mp} p={row.p} p+2={row.p_plus_2} q={row.q} M_q={row.mq} "
                    f"2^p+1={row.two_p_plus_1} l={row.l} {shown} {row.status.value}")
            if row.reasons:
                line += f" [{', '.join(r.value for r in row.reasons)}]"
            if row.note:
                line += f" ({row.note})"
            lines.append(line)
        return Report(
            name=name,
            title=title,
            lines=lines or ["  no rows"],
            columns=list(CatalogRow.CSV_FIELDS),
            rows=[row.csv_record() for row in rows],
            document=[row.model_dump(mode="json") for row in rows],
        )

    @staticmethod
    def from_mersenne(primes: List[MersennePrime], p_limit: int) -> Report:
        return Report(
            name=f"mersenne_p{p_limit}",
            title=f"Mersenne primes with p <= {p_limit}",
            lines=[f"  p={m.p}  M_p={m.value}  mod 4 = {m.value % 4}" for m in primes],
            columns=["p", "value"],
            rows=[[str(m.p), str(m.value)] for m in primes],
            document=[m.model_dump(mode="json") for m in primes],
        )

    @staticmethod
    def from_catalan(hits: List[CatalanSolution], bounds: List[int]) -> Report:
        return Report(
            name="catalan",
            title="a^x - b^y = 1 with a <= {}, b <= {}, x <= {}, y <= {}".format(*bounds),
            lines=[f"  {h.a}^{h.x} - {h.b}^{h.y} = 1" for h in hits] or ["  no solutions"],
            columns=["a", "b", "x", "y"],
            rows=[[str(v) for v in h.as_tuple()] for h in hits],
            document=[h.model_dump(mode="json") for h in hits],
        )

    @staticmethod
    def render(report: Report, report_format: ReportFormat) -> str:
        return EmitterFactory.get_emitter(report_format).emit(report)

    @staticmethod
    def write(report: Report, report_format: ReportFormat, out_path: Optional[str] = None) -> str:
        """Render the report and, when asked, write it to disk.

        A directory ``out_path`` receives ``<report.name>.<ext>``.

        Returns:
            The rendered text
        """
        emitter = EmitterFactory.get_emitter(report_format)
        text = emitter.emit(report)
        if out_path:
            if os.path.isdir(out_path):
                out_path = os.path.join(out_path, f"{report.name}.{emitter.extension}")
            parent = os.path.dirname(out_path)
            if parent:
                os.makedirs(parent, exist_ok=True)
            with open(out_path, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            logger.info(f"Wrote {report.name} report to {out_path}")
        return text
