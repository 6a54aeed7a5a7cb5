import json
import os
from functools import lru_cache
from typing import Any, Dict, List, Optional

from app.config.Settings import settings
from app.core import ntcore
from app.core.exceptions import InvalidInputError
from app.models.catalog import CatalogRow, CatalogStatus
from app.models.equation import CaseLabel, EquationInstance, NonexistenceKind, SearchBounds
from app.models.mersenne import MersennePrime
from app.services.oracle_service import OracleService
from app.services.solver_service import SolverService
from app.utils.logging import logger

PAPER_TABLES_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "paper_tables.json")

COMPARED_FIELDS = {
    "mp": "M_p",
    "p": "p",
    "p_plus_2": "p+2",
    "q": "q",
    "mq": "M_q",
    "two_p_plus_1": "2^p+1",
    "l": "l",
    "solution": "(x,y,z)",
}

TABLE2_REASONS = {NonexistenceKind.Q_NOT_DIVIDES_P_PLUS_2, NonexistenceKind.L_NOT_DIVIDES_TWO_P_PLUS_1}


@lru_cache(maxsize=1)
def load_paper_tables() -> Dict[str, List[Dict[str, Any]]]:
    """Printed Table 1 / Table 2 rows, as published."""
    with open(PAPER_TABLES_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def _printed_value(printed: Dict[str, Any], field: str):
    value = printed.get(field)
    return tuple(value) if field == "solution" and value is not None else value


def _differences(row: CatalogRow, printed: Dict[str, Any]) -> List[str]:
    notes = []
    for field, symbol in COMPARED_FIELDS.items():
        if field not in printed:
            continue
        value = _printed_value(printed, field)
        if value != getattr(row, field):
            shown = "({},{},{})".format(*value) if field == "solution" else value
            notes.append(f"paper prints {symbol}={shown}")
    return notes


class CatalogService:
    """Solvability tables over small Mersenne primes."""

    @staticmethod
    def mersenne_primes(p_limit: int) -> List[MersennePrime]:
        return [MersennePrime.from_exponent(p) for p in ntcore.mersenne_exponents(p_limit)]

    @staticmethod
    def _annotate(row: CatalogRow, printed_rows: List[Dict[str, Any]]) -> CatalogRow:
        for index, printed in enumerate(printed_rows, start=1):
            if (printed["p"], printed["l"]) != (row.p, row.l):
                continue
            notes = _differences(row, printed)
            update: Dict[str, Any] = {"paper_row": index}
            if notes:
                update.update(status=CatalogStatus.PAPER_ERRATUM, note="; ".join(notes))
                logger.info(f"Table 1 row {index}: {'; '.join(notes)}")
            return row.model_copy(update=update)
        return row

    @staticmethod
    def enumerate_solvable(p_limit: int) -> List[CatalogRow]:
        """Every (M_p, M_q, l) with p <= p_limit that has the even-x positive solution."""
        if p_limit < 2:
            raise InvalidInputError(f"p_limit must be at least 2, got {p_limit}")
        logger.info(f"enumerate_solvable: p <= {p_limit}")

        printed_rows = load_paper_tables()["table1"]
        rows: List[CatalogRow] = []
        # 2^p + 1 is factored before the next exponent is tested
        for p in ntcore.iter_mersenne_exponents(p_limit):
            mp = MersennePrime.from_exponent(p)
            ls = SolverService.admissible_l(mp)
            for q in SolverService.admissible_q(mp):
                mq = MersennePrime.from_exponent(q)
                for l in ls:
                    instance = EquationInstance(mp=mp, mq=mq, l=l)
                    result = SolverService.solve_odd(instance)
                    solution = next(s for s in result.solutions if s.case_label == CaseLabel.T2_CASE_III)
                    if not OracleService.verify(instance, *solution.triple):
                        raise AssertionError(f"closed form failed verification for {instance}")
                    row = CatalogRow(
                        mp=mp.value, p=mp.p, p_plus_2=mp.p + 2, q=q, mq=mq.value,
                        two_p_plus_1=(1 << mp.p) + 1, l=l,
                        solution=solution.triple, status=CatalogStatus.SOLVABLE,
                    )
                    rows.append(CatalogService._annotate(row, printed_rows))

        rows.sort(key=lambda r: (r.p, r.q, r.l))
        return rows

    @staticmethod
    def table1(p_limit: Optional[int] = None) -> List[CatalogRow]:
        """Regenerated Table 1, plus any printed row the closed form does not reproduce."""
        p_limit = settings.DEFAULT_P_LIMIT if p_limit is None else p_limit
        rows = CatalogService.enumerate_solvable(p_limit)

        matched = {r.paper_row for r in rows if r.paper_row is not None}
        for index, printed in enumerate(load_paper_tables()["table1"], start=1):
            if index in matched or printed["p"] > p_limit:
                continue
            logger.warning(f"Table 1 row {index} was not regenerated")
            rows.append(CatalogRow(
                **{k: v for k, v in printed.items() if k != "solution"},
                solution=None,
                status=CatalogStatus.PAPER_ERRATUM,
                note="printed row not reproduced by the closed form",
                paper_row=index,
            ))
        rows.sort(key=lambda r: (r.p, r.q, r.l))
        return rows

    @staticmethod
    def table2(bounds: Optional[SearchBounds] = None) -> List[CatalogRow]:
        """The printed unsolvable instances, each confirmed empty by the oracle."""
        bounds = bounds or SearchBounds(x_max=settings.DEFAULT_X_MAX, y_max=settings.DEFAULT_Y_MAX)
        rows: List[CatalogRow] = []
        for index, printed in enumerate(load_paper_tables()["table2"], start=1):
            instance = EquationInstance.from_exponents(printed["p"], printed["q"], printed["l"])
            result = SolverService.classify(instance)
            oracle = OracleService.brute_force(instance, bounds)
            fields = dict(
                mp=instance.mp.value, p=instance.p, p_plus_2=instance.p + 2,
                q=instance.q, mq=instance.mq.value,
                two_p_plus_1=(1 << instance.p) + 1, l=instance.l, paper_row=index,
            )

            if result.is_empty and oracle.is_empty:
                reasons = [k for k in result.reason_kinds if k in TABLE2_REASONS] or result.reason_kinds
                row = CatalogRow(**fields, status=CatalogStatus.UNSOLVABLE, reasons=reasons)
                notes = _differences(row, printed)
                if notes:
                    row = row.model_copy(update={"note": "; ".join(notes)})
            else:
                found = (result.solutions or oracle.solutions)[0]
                logger.warning(f"Table 2 row {index}: {instance} has solution {found.triple}")
                row = CatalogRow(
                    **fields, solution=found.triple, status=CatalogStatus.PAPER_ERRATUM,
                    note=f"printed as unsolvable but {found.triple} solves it",
                )
            rows.append(row)
        return rows
