from enum import Enum
from typing import ClassVar, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.equation import NonexistenceKind


class CatalogStatus(str, Enum):
    SOLVABLE = "Solvable"
    UNSOLVABLE = "Unsolvable"
    PAPER_ERRATUM = "PaperErratum"


class CatalogRow(BaseModel):
    """One line of a solvability table."""
    model_config = ConfigDict(frozen=True)

    CSV_FIELDS: ClassVar[Tuple[str, ...]] = (
        "mp", "p", "p_plus_2", "q", "mq", "two_p_plus_1", "l",
        "solution", "status", "reasons", "note", "paper_row",
    )

    mp: int = Field(..., description="M_p = 2^p - 1")
    p: int = Field(..., description="Mersenne exponent of M_p")
    p_plus_2: int = Field(..., description="p + 2")
    q: int = Field(..., description="Mersenne exponent of M_q")
    mq: int = Field(..., description="M_q = 2^q - 1")
    two_p_plus_1: int = Field(..., description="2^p + 1")
    l: int = Field(..., description="Prime multiplier of z")
    solution: Optional[Tuple[int, int, int]] = Field(None, description="(x, y, z) when solvable")
    status: CatalogStatus
    reasons: List[NonexistenceKind] = Field(default_factory=list, description="Failed conditions of an unsolvable row")
    note: Optional[str] = Field(None, description="Printed values that disagree with the computed row")
    paper_row: Optional[int] = Field(None, description="1-based index of the matching printed row")

    @model_validator(mode="after")
    def _check_row(self) -> "CatalogRow":
        if self.p_plus_2 != self.p + 2:
            raise ValueError(f"p_plus_2={self.p_plus_2} but p={self.p}")
        if self.two_p_plus_1 != (1 << self.p) + 1:
            raise ValueError(f"two_p_plus_1={self.two_p_plus_1} but p={self.p}")
        if self.solution is not None:
            x, y, z = self.solution
            if self.mp ** x + (self.mq + 1) ** y != (self.l * z) ** 2:
                raise ValueError(f"{self.solution} does not satisfy the row's equation")
        if self.status == CatalogStatus.SOLVABLE and self.solution is None:
            raise ValueError("a Solvable row carries its solution")
        if self.status == CatalogStatus.UNSOLVABLE and (self.solution is not None or not self.reasons):
            raise ValueError("an Unsolvable row has reasons and no solution")
        if self.status == CatalogStatus.PAPER_ERRATUM and not self.note:
            raise ValueError("a PaperErratum row needs a note")
        return self

    def csv_record(self) -> List[str]:
        return [
            str(self.mp), str(self.p), str(self.p_plus_2), str(self.q), str(self.mq),
            str(self.two_p_plus_1), str(self.l),
            "" if self.solution is None else "({},{},{})".format(*self.solution),
            self.status.value,
            ";".join(r.value for r in self.reasons),
            self.note or "",
            "" if self.paper_row is None else str(self.paper_row),
        ]
