# app/reports/factory.py
from enum import Enum
from typing import Dict, Type

from app.reports.base import ReportEmitter
from app.reports.csv_emitter import CsvEmitter
from app.reports.json_emitter import JsonEmitter
from app.reports.text_emitter import TextEmitter


class ReportFormat(Enum):
    """Enum for available output formats."""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class EmitterFactory:
    """Factory for creating emitter instances."""

    _emitters: Dict[ReportFormat, Type[ReportEmitter]] = {
        ReportFormat.TEXT: TextEmitter,
        ReportFormat.JSON: JsonEmitter,
        ReportFormat.CSV: CsvEmitter,
    }

    @classmethod
    def get_emitter(cls, report_format: ReportFormat) -> ReportEmitter:
        """Get an emitter instance for the format.

        Args:
            report_format: The output format

        Returns:
            An instance of the matching emitter

        Raises:
            ValueError: If the format is not supported
        """
        if report_format not in cls._emitters:
            raise ValueError(f"Unsupported report format: {report_format}")

        return cls._emitters[report_format]()
