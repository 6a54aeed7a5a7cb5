from math import prod
from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PrimePower(BaseModel):
    model_config = ConfigDict(frozen=True)

    prime: int = Field(..., description="Prime factor", ge=2)
    multiplicity: int = Field(..., description="Exponent of the prime in n", ge=1)


class Factorization(BaseModel):
    """Complete prime factorization of ``n``, factors sorted by prime."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="The factored integer", ge=2)
    factors: List[PrimePower] = Field(..., description="Prime powers whose product is n")

    @model_validator(mode="after")
    def _check_product(self) -> "Factorization":
        if prod(f.prime ** f.multiplicity for f in self.factors) != self.n:
            raise ValueError(f"factors do not multiply back to {self.n}")
        return self

    @property
    def primes(self) -> List[int]:
        return [f.prime for f in self.factors]

    def as_dict(self) -> dict:
        return {f.prime: f.multiplicity for f in self.factors}
