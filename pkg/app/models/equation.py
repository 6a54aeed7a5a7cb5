from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core import ntcore
from app.core.exceptions import CompositeModulusError
from app.models.mersenne import MersennePrime


class CaseLabel(str, Enum):
    """Which branch of the classification produced a solution."""
    T1_CASE_II_B = "T1-CaseII-b"
    T2_CASE_I_B = "T2-CaseI-b"
    T2_CASE_III = "T2-CaseIII"
    ORACLE = "Oracle"


class NonexistenceKind(str, Enum):
    Q_NOT_DIVIDES_P_PLUS_2 = "QNotDividesPPlus2"
    L_NOT_DIVIDES_TWO_P_PLUS_1 = "LNotDividesTwoPPlus1"
    PARITY_OBSTRUCTION = "ParityObstruction"
    MIHAILESCU_OBSTRUCTION = "MihailescuObstruction"
    SEARCH_EXHAUSTED = "SearchExhausted"


class NonexistenceReason(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: NonexistenceKind = Field(..., description="Structured reason code")
    detail: str = Field(..., description="Human readable explanation with the concrete numbers")


class EquationInstance(BaseModel):
    """The equation M_p^x + (M_q+1)^y = (l z)^2 for fixed M_p, M_q and l."""
    model_config = ConfigDict(frozen=True)

    mp: MersennePrime = Field(..., description="Mersenne prime M_p")
    mq: MersennePrime = Field(..., description="Mersenne prime M_q")
    l: int = Field(..., description="Prime multiplier of z", ge=2)

    @model_validator(mode="after")
    def _check_l(self) -> "EquationInstance":
        if not ntcore.is_prime(self.l):
            raise ValueError(f"l={self.l} is not prime")
        return self

    @classmethod
    def from_exponents(cls, p: int, q: int, l: int) -> "EquationInstance":
        mp = MersennePrime.from_exponent(p)
        mq = MersennePrime.from_exponent(q)
        if l < 2 or not ntcore.is_prime(l):
            raise CompositeModulusError(l)
        return cls(mp=mp, mq=mq, l=l)

    @property
    def p(self) -> int:
        return self.mp.p

    @property
    def q(self) -> int:
        return self.mq.p

    @property
    def base(self) -> int:
        """M_q + 1, which is 2^q."""
        return self.mq.value + 1

    def lhs(self, x: int, y: int) -> int:
        return self.mp.value ** x + self.base ** y

    def rhs(self, z: int) -> int:
        return (self.l * z) ** 2

    def __str__(self) -> str:
        return f"{self.mp.value}^x + {self.base}^y = ({self.l}z)^2"


class DerivationTrace(BaseModel):
    """Factor split behind a T2-CaseIII solution: lz + M_p^k = 2^alpha, lz - M_p^k = 2^beta."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., description="Half of the even exponent x", ge=1)
    alpha: int = Field(..., description="Exponent of 2 in lz + M_p^k", ge=1)
    beta: int = Field(..., description="Exponent of 2 in lz - M_p^k", ge=1)

    def check(self, instance: EquationInstance, y: int) -> None:
        if self.alpha + self.beta != instance.q * y:
            raise ValueError(f"alpha + beta = {self.alpha + self.beta} but q*y = {instance.q * y}")
        if (1 << (self.alpha - 1)) - instance.mp.value ** self.k != 1:
            raise ValueError("2^(alpha-1) - M_p^k != 1")
        if self.beta != 1 or self.alpha != instance.p + 1:
            raise ValueError("a T2-CaseIII trace needs beta = 1 and alpha = p + 1")


class Solution(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: int = Field(..., description="Exponent of M_p", ge=0)
    y: int = Field(..., description="Exponent of M_q + 1", ge=0)
    z: int = Field(..., description="Root divided by l", ge=0)
    case_label: CaseLabel = Field(..., description="Provenance of the triple")
    trace: Optional[DerivationTrace] = Field(None, description="Derivation data for T2-CaseIII")

    @model_validator(mode="after")
    def _check_case(self) -> "Solution":
        if self.case_label == CaseLabel.T2_CASE_III:
            if self.x % 2 or self.z % 2 == 0:
                raise ValueError("a T2-CaseIII solution needs x even and z odd")
            if self.trace is None:
                raise ValueError("a T2-CaseIII solution carries a derivation trace")
        return self

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    @property
    def is_positive(self) -> bool:
        return self.x > 0 and self.y > 0 and self.z > 0


class SolutionSet(BaseModel):
    """All solutions of one instance, or the reasons there are none."""
    model_config = ConfigDict(frozen=True)

    instance: EquationInstance
    solutions: List[Solution] = Field(default_factory=list)
    nonexistence_reasons: List[NonexistenceReason] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_set(self) -> "SolutionSet":
        triples = [s.triple for s in self.solutions]
        if len(set(triples)) != len(triples):
            raise ValueError("solutions must be pairwise distinct")
        if not self.solutions and not self.nonexistence_reasons:
            raise ValueError("an empty solution set needs at least one nonexistence reason")
        for s in self.solutions:
            if self.instance.lhs(s.x, s.y) != self.instance.rhs(s.z):
                raise ValueError(f"{s.triple} does not satisfy {self.instance}")
            if s.trace is not None:
                s.trace.check(self.instance, s.y)
        return self

    @property
    def triples(self) -> List[Tuple[int, int, int]]:
        return [s.triple for s in self.solutions]

    @property
    def reason_kinds(self) -> List[NonexistenceKind]:
        return [r.kind for r in self.nonexistence_reasons]

    @property
    def is_empty(self) -> bool:
        return not self.solutions


class SearchBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    x_max: int = Field(..., description="Largest x searched", ge=0)
    y_max: int = Field(..., description="Largest y searched", ge=0)
    z_max: Optional[int] = Field(None, description="Largest z accepted; None means implied by x and y", ge=1)

    def contains(self, x: int, y: int, z: int) -> bool:
        return x <= self.x_max and y <= self.y_max and (self.z_max is None or z <= self.z_max)
