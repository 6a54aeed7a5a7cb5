from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

from app.config.Settings import settings
from app.core import ntcore
from app.core.exceptions import InvalidInputError
from app.models.crosscheck import CatalanSolution, CrossCheckReport, FoundBy, TheoremDiscrepancy
from app.models.equation import (
    CaseLabel,
    EquationInstance,
    NonexistenceKind,
    NonexistenceReason,
    SearchBounds,
    Solution,
    SolutionSet,
)
from app.services.solver_service import SolverService
from app.utils.logging import logger

Triple = Tuple[int, int, int]


def _sweep_slice(task: Tuple[int, int, int, int, int, int, Optional[int]]) -> List[Triple]:
    """Square-test every (x, y) with x in [x_start, x_stop) and y <= y_max."""
    mp_value, base, l, x_start, x_stop, y_max, z_max = task
    base_powers = [base ** y for y in range(y_max + 1)]
    found: List[Triple] = []
    for x in range(x_start, x_stop):
        mp_power = mp_value ** x
        for y, base_power in enumerate(base_powers):
            root, exact = ntcore.integer_sqrt(mp_power + base_power)
            if not exact or root % l:
                continue
            z = root // l
            if z_max is None or z <= z_max:
                found.append((x, y, z))
    return found


def _slices(x_max: int, workers: int) -> List[Tuple[int, int]]:
    size = -(-(x_max + 1) // workers)
    return [(start, min(start + size, x_max + 1)) for start in range(0, x_max + 1, size)]


class OracleService:
    """Bounded exhaustive search, independent of the closed-form solver."""

    @staticmethod
    def verify(instance: EquationInstance, x: int, y: int, z: int) -> bool:
        if min(x, y, z) < 0:
            raise InvalidInputError(f"x, y, z must be non-negative, got {(x, y, z)}")
        return instance.lhs(x, y) == instance.rhs(z)

    @staticmethod
    def brute_force(instance: EquationInstance, bounds: SearchBounds, workers: Optional[int] = None) -> SolutionSet:
        workers = settings.ORACLE_WORKERS if workers is None else workers
        logger.info(f"brute_force: {instance} with x <= {bounds.x_max}, y <= {bounds.y_max}, z <= {bounds.z_max}")

        tasks = [
            (instance.mp.value, instance.base, instance.l, start, stop, bounds.y_max, bounds.z_max)
            for start, stop in _slices(bounds.x_max, max(1, workers))
        ]
        if workers > 1 and len(tasks) > 1:
            with Pool(processes=min(workers, len(tasks))) as pool:
                chunks = pool.map(_sweep_slice, tasks)
        else:
            chunks = [_sweep_slice(task) for task in tasks]

        triples = sorted(t for chunk in chunks for t in chunk)
        solutions = [Solution(x=x, y=y, z=z, case_label=CaseLabel.ORACLE) for x, y, z in triples]
        reasons = []
        if not solutions:
            reasons.append(NonexistenceReason(
                kind=NonexistenceKind.SEARCH_EXHAUSTED,
                detail=f"no square of the form ({instance.l}z)^2 for x <= {bounds.x_max}, y <= {bounds.y_max}",
            ))
        logger.debug(f"brute_force: found {triples}")
        return SolutionSet(instance=instance, solutions=solutions, nonexistence_reasons=reasons)

    @staticmethod
    def catalan_search(a_max: int, b_max: int, x_max: int, y_max: int) -> List[CatalanSolution]:
        """All a^x - b^y = 1 inside the box with every component at least 2."""
        if min(a_max, b_max, x_max, y_max) < 2:
            raise InvalidInputError("catalan_search bounds must all be at least 2")

        powers: Dict[int, List[Tuple[int, int]]] = {}
        for b in range(2, b_max + 1):
            for y in range(2, y_max + 1):
                powers.setdefault(b ** y, []).append((b, y))

        hits = [
            CatalanSolution(a=a, b=b, x=x, y=y)
            for a in range(2, a_max + 1)
            for x in range(2, x_max + 1)
            for b, y in powers.get(a ** x - 1, [])
        ]
        hits.sort(key=CatalanSolution.as_tuple)
        logger.info(f"catalan_search({a_max}, {b_max}, {x_max}, {y_max}): {[h.as_tuple() for h in hits]}")
        return hits

    @staticmethod
    def cross_check(instance: EquationInstance, bounds: SearchBounds, workers: Optional[int] = None) -> CrossCheckReport:
        """Compare the closed form with the search inside ``bounds``."""
        solver = SolverService.restrict(SolverService.classify(instance), bounds)
        oracle = OracleService.brute_force(instance, bounds, workers=workers)

        predicted, observed = set(solver.triples), set(oracle.triples)
        discrepancies = sorted(
            [TheoremDiscrepancy(x=x, y=y, z=z, found_by=FoundBy.ORACLE) for x, y, z in observed - predicted]
            + [TheoremDiscrepancy(x=x, y=y, z=z, found_by=FoundBy.SOLVER) for x, y, z in predicted - observed],
            key=lambda d: (d.x, d.y, d.z),
        )
        if discrepancies:
            logger.warning(f"cross_check: {instance} disagrees on {[(d.x, d.y, d.z, d.found_by.value) for d in discrepancies]}")
        return CrossCheckReport(
            instance=instance,
            bounds=bounds,
            solver=solver,
            oracle=oracle,
            discrepancies=discrepancies,
        )
