from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core import ntcore
from app.core.exceptions import NotMersenneExponentError


class MersennePrime(BaseModel):
    """A prime of the form 2^p - 1 with p prime."""
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., description="Prime exponent", ge=2)
    value: int = Field(..., description="2^p - 1")

    @model_validator(mode="after")
    def _check_invariants(self) -> "MersennePrime":
        if self.value != (1 << self.p) - 1:
            raise ValueError(f"value {self.value} is not 2^{self.p} - 1")
        if not ntcore.is_mersenne_exponent(self.p):
            raise ValueError(f"2^{self.p} - 1 is not a Mersenne prime")
        if ntcore.mod4_residue(self.value) != 3:
            raise ValueError(f"M_{self.p} is not 3 mod 4")
        return self

    @classmethod
    def from_exponent(cls, p: int) -> "MersennePrime":
        if p < 2 or not ntcore.is_prime(p):
            raise NotMersenneExponentError(p, "exponent is not prime")
        if not ntcore.is_mersenne_exponent(p):
            raise NotMersenneExponentError(p, f"2^{p} - 1 is composite")
        return cls(p=p, value=(1 << p) - 1)

    @classmethod
    def from_value(cls, value: int) -> "MersennePrime":
        """Back-solve the exponent from a Mersenne value such as 8191."""
        if value < 3 or value & (value + 1) != 0:
            raise NotMersenneExponentError(value.bit_length(), f"{value} is not of the form 2^p - 1")
        return cls.from_exponent(value.bit_length())

    def __str__(self) -> str:
        return f"M_{self.p}={self.value}"
