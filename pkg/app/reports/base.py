# app/reports/base.py
from abc import ABC, abstractmethod

from app.models.report import Report


class ReportEmitter(ABC):
    """Base abstract class for report renderers."""

    extension: str = "txt"

    @abstractmethod
    def emit(self, report: Report) -> str:
        """Render a report.

        Args:
            report: The format-neutral report

        Returns:
            The rendered text, newline terminated
        """
        pass
