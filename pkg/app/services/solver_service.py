from typing import List, Optional

from app.config.Settings import settings
from app.core import ntcore
from app.core.exceptions import EvenModulusError, InvalidInputError
from app.models.equation import (
    CaseLabel,
    DerivationTrace,
    EquationInstance,
    NonexistenceKind,
    NonexistenceReason,
    SearchBounds,
    Solution,
    SolutionSet,
)
from app.models.mersenne import MersennePrime
from app.utils.logging import logger


class SolverService:
    """Closed-form classification of M_p^x + (M_q+1)^y = (lz)^2.

    The case analysis rests on two facts: every Mersenne prime is 3 mod 4,
    and 3^2 - 2^3 = 1 is the only solution of a^x - b^y = 1 with all four
    numbers above 1. The solver trusts both; ``OracleService.cross_check``
    is the empirical guard.
    """

    @staticmethod
    def solve_l2(mp: MersennePrime, mq: MersennePrime) -> SolutionSet:
        """Every solution of M_p^x + (M_q+1)^y = (2z)^2."""
        instance = EquationInstance(mp=mp, mq=mq, l=2)
        logger.info(f"solve_l2: {instance}")

        solutions: List[Solution] = []
        reasons = [
            NonexistenceReason(
                kind=NonexistenceKind.MIHAILESCU_OBSTRUCTION,
                detail=f"x = 0: (2z)^2 - 2^({mq.p}y) = 1 has no solution since 3^2 - 2^3 = 1 needs 2z = 3",
            ),
            NonexistenceReason(
                kind=NonexistenceKind.PARITY_OBSTRUCTION,
                detail="x, y >= 1: left side is 1 or 3 mod 4 while (2z)^2 is 0 mod 4",
            ),
        ]

        # y = 0, x = 1 gives 2^p = (2z)^2, which only works for p = 2
        if mp.value == 3:
            solutions.append(Solution(x=1, y=0, z=1, case_label=CaseLabel.T1_CASE_II_B))
        else:
            reasons.append(NonexistenceReason(
                kind=NonexistenceKind.MIHAILESCU_OBSTRUCTION,
                detail=f"y = 0: {mp.value}^x + 1 = (2z)^2 needs x = 1 and p even, but p = {mp.p}",
            ))

        return SolutionSet(instance=instance, solutions=solutions, nonexistence_reasons=reasons)

    @staticmethod
    def solve_odd(instance: EquationInstance) -> SolutionSet:
        """Every solution for an odd prime l."""
        if instance.l == 2:
            raise EvenModulusError()
        logger.info(f"solve_odd: {instance}")

        p, q, l = instance.p, instance.q, instance.l
        solutions: List[Solution] = []
        reasons: List[NonexistenceReason] = []

        # x = 0: (lz)^2 - 2^(qy) = 1 forces lz = 3, qy = 3
        if instance.mq.value == 7 and l == 3:
            solutions.append(Solution(x=0, y=1, z=1, case_label=CaseLabel.T2_CASE_I_B))
        else:
            reasons.append(NonexistenceReason(
                kind=NonexistenceKind.MIHAILESCU_OBSTRUCTION,
                detail=f"x = 0 is solvable only for M_q = 7, l = 3 (got M_q = {instance.mq.value}, l = {l})",
            ))

        two_p_plus_1 = (1 << p) + 1
        q_divides = (p + 2) % q == 0
        l_divides = two_p_plus_1 % l == 0
        if not q_divides:
            reasons.append(NonexistenceReason(
                kind=NonexistenceKind.Q_NOT_DIVIDES_P_PLUS_2,
                detail=f"q={q} does not divide p+2={p + 2}",
            ))
        if not l_divides:
            reasons.append(NonexistenceReason(
                kind=NonexistenceKind.L_NOT_DIVIDES_TWO_P_PLUS_1,
                detail=f"l={l} does not divide 2^p+1={two_p_plus_1}",
            ))
        if q_divides and l_divides:
            solutions.append(Solution(
                x=2,
                y=(p + 2) // q,
                z=two_p_plus_1 // l,
                case_label=CaseLabel.T2_CASE_III,
                trace=DerivationTrace(k=1, alpha=p + 1, beta=1),
            ))

        solutions.sort(key=lambda s: (s.x, s.y))
        logger.debug(f"solve_odd: {len(solutions)} solution(s), reasons={[r.kind.value for r in reasons]}")
        return SolutionSet(instance=instance, solutions=solutions, nonexistence_reasons=reasons)

    @staticmethod
    def admissible_q(mp: MersennePrime, q_max: Optional[int] = None) -> List[int]:
        """Mersenne exponents q <= q_max dividing p + 2."""
        q_max = settings.Q_MAX if q_max is None else q_max
        if q_max < 2:
            raise InvalidInputError(f"q_max must be at least 2, got {q_max}")
        target = mp.p + 2
        return [
            q for q in range(2, min(q_max, target) + 1)
            if target % q == 0 and ntcore.is_mersenne_exponent(q)
        ]

    @staticmethod
    def admissible_l(mp: MersennePrime) -> List[int]:
        """Odd prime divisors of 2^p + 1."""
        return [l for l in ntcore.factor((1 << mp.p) + 1).primes if l != 2]

    @staticmethod
    def classify(instance: EquationInstance, positive_only: bool = False) -> SolutionSet:
        if instance.l == 2:
            result = SolverService.solve_l2(instance.mp, instance.mq)
        else:
            result = SolverService.solve_odd(instance)

        if not positive_only:
            return result
        return SolutionSet(
            instance=instance,
            solutions=[s for s in result.solutions if s.is_positive],
            nonexistence_reasons=result.nonexistence_reasons,
        )

    @staticmethod
    def restrict(result: SolutionSet, bounds: SearchBounds) -> SolutionSet:
        """The part of ``result`` that lies inside ``bounds``."""
        kept = [s for s in result.solutions if bounds.contains(s.x, s.y, s.z)]
        reasons = list(result.nonexistence_reasons)
        if not kept and not reasons:
            reasons.append(NonexistenceReason(
                kind=NonexistenceKind.SEARCH_EXHAUSTED,
                detail=f"all closed-form solutions lie outside x <= {bounds.x_max}, y <= {bounds.y_max}",
            ))
        return SolutionSet(instance=result.instance, solutions=kept, nonexistence_reasons=reasons)
