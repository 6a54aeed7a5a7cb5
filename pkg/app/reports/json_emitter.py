import json

from app.models.report import Report
from app.reports.base import ReportEmitter


class JsonEmitter(ReportEmitter):
    """JSON rendering of the report document; key order follows the models."""

    extension = "json"

    def emit(self, report: Report) -> str:
        return json.dumps(report.document, indent=2, ensure_ascii=False) + "\n"
