from typing import Any, List

from pydantic import BaseModel, Field


class Report(BaseModel):
    """Format-neutral rendering of one command's result."""
    name: str = Field(..., description="Base file name, e.g. table1_p7")
    title: str = Field(..., description="Heading of the text rendering")
    lines: List[str] = Field(default_factory=list, description="Body of the text rendering")
    columns: List[str] = Field(default_factory=list, description="CSV header")
    rows: List[List[str]] = Field(default_factory=list, description="CSV records")
    document: Any = Field(None, description="JSON-ready payload")
