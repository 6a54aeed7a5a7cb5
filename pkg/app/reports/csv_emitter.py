import csv
import io

from app.models.report import Report
from app.reports.base import ReportEmitter


class CsvEmitter(ReportEmitter):
    """Header row plus one record per report row, ``\\n`` line endings."""

    extension = "csv"

    def emit(self, report: Report) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(report.columns)
        writer.writerows(report.rows)
        return buffer.getvalue()
