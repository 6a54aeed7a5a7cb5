from app.models.report import Report
from app.reports.base import ReportEmitter


class TextEmitter(ReportEmitter):
    """Human readable rendering."""

    extension = "txt"

    def emit(self, report: Report) -> str:
        return "\n".join([report.title, *report.lines]) + "\n"
