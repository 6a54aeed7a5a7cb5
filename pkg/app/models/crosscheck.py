from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field, computed_field

from app.models.equation import EquationInstance, SearchBounds, SolutionSet


class FoundBy(str, Enum):
    ORACLE = "oracle"
    SOLVER = "solver"


class TheoremDiscrepancy(BaseModel):
    """A triple inside the search box that only one side reports."""
    model_config = ConfigDict(frozen=True)

    x: int
    y: int
    z: int
    found_by: FoundBy = Field(..., description="oracle: the closed form missed it; solver: the search could not confirm it")


class CrossCheckReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: EquationInstance
    bounds: SearchBounds
    solver: SolutionSet = Field(..., description="Closed-form answer restricted to the bounds")
    oracle: SolutionSet = Field(..., description="Exhaustive search answer")
    discrepancies: List[TheoremDiscrepancy] = Field(default_factory=list)

    @computed_field
    @property
    def consistent(self) -> bool:
        return not self.discrepancies


class CatalanSolution(BaseModel):
    """a^x - b^y = 1 with a, b, x, y all at least 2."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=2)
    b: int = Field(..., ge=2)
    x: int = Field(..., ge=2)
    y: int = Field(..., ge=2)

    def as_tuple(self):
        return (self.a, self.b, self.x, self.y)
