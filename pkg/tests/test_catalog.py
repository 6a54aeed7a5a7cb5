import pytest
from pydantic import ValidationError

from app.core.exceptions import CapExceededError, InvalidInputError
from app.models.catalog import CatalogRow, CatalogStatus
from app.models.equation import EquationInstance, NonexistenceKind, SearchBounds
from app.services import catalog_service
from app.services.catalog_service import CatalogService, load_paper_tables
from app.services.oracle_service import OracleService

# (M_p, p, p+2, q, M_q, 2^p+1, l, (x, y, z)) as regenerated
CORRECTED_TABLE_1 = [
    (3, 2, 4, 2, 3, 5, 5, (2, 2, 1)),
    (7, 3, 5, 5, 31, 9, 3, (2, 1, 3)),
    (31, 5, 7, 7, 127, 33, 3, (2, 1, 11)),
    (31, 5, 7, 7, 127, 33, 11, (2, 1, 3)),
    (127, 7, 9, 3, 7, 129, 3, (2, 3, 43)),
    (127, 7, 9, 3, 7, 129, 43, (2, 3, 3)),
]


def _as_tuple(row: CatalogRow):
    return (row.mp, row.p, row.p_plus_2, row.q, row.mq, row.two_p_plus_1, row.l, row.solution)


def _verify(row: CatalogRow) -> bool:
    instance = EquationInstance.from_exponents(row.p, row.q, row.l)
    return OracleService.verify(instance, *row.solution)


def test_enumerate_solvable_reproduces_table_1():
    rows = CatalogService.enumerate_solvable(7)
    assert [_as_tuple(r) for r in rows] == CORRECTED_TABLE_1
    assert [r.paper_row for r in rows] == [1, 2, 3, 4, 5, 6]
    assert all(_verify(r) for r in rows)


def test_table_1_errata_are_flagged():
    rows = CatalogService.enumerate_solvable(7)
    statuses = [r.status for r in rows]
    assert statuses == [CatalogStatus.SOLVABLE] + [CatalogStatus.PAPER_ERRATUM] * 5
    assert rows[0].note is None
    assert rows[1].note == "paper prints M_q=7"
    assert rows[2].note == rows[3].note == "paper prints M_q=31"
    assert rows[4].note == "paper prints (x,y,z)=(2,1,43)"
    assert rows[5].note == "paper prints (x,y,z)=(2,1,3)"


def test_enumerate_solvable_p_limit_2():
    rows = CatalogService.enumerate_solvable(2)
    assert [_as_tuple(r) for r in rows] == CORRECTED_TABLE_1[:1]


def test_enumerate_solvable_includes_example_1():
    rows = CatalogService.enumerate_solvable(13)
    keys = {(r.mp, r.mq, r.l): r.solution for r in rows}
    assert keys[(8191, 7, 3)] == (2, 5, 2731)
    assert keys[(8191, 31, 3)] == (2, 3, 2731)
    assert len(rows) == 10
    assert [(r.p, r.q, r.l) for r in rows] == sorted((r.p, r.q, r.l) for r in rows)
    assert all(_verify(r) for r in rows)


def test_enumerate_solvable_validates_limit():
    with pytest.raises(InvalidInputError):
        CatalogService.enumerate_solvable(1)


def test_enumerate_solvable_beyond_factor_cap():
    with pytest.raises(CapExceededError):
        CatalogService.enumerate_solvable(89)


def test_table1_matches_enumeration():
    assert CatalogService.table1(7) == CatalogService.enumerate_solvable(7)
    assert len(CatalogService.table1(3)) == 2


def test_table2_rows_are_unsolvable():
    rows = CatalogService.table2(SearchBounds(x_max=12, y_max=12))
    assert [(r.mp, r.mq, r.l) for r in rows] == [(3, 31, 3), (7, 127, 5), (31, 7, 7), (127, 31, 13)]
    assert all(r.status == CatalogStatus.UNSOLVABLE and r.solution is None for r in rows)
    assert NonexistenceKind.Q_NOT_DIVIDES_P_PLUS_2 in rows[0].reasons
    assert set(rows[2].reasons) == {
        NonexistenceKind.Q_NOT_DIVIDES_P_PLUS_2,
        NonexistenceKind.L_NOT_DIVIDES_TWO_P_PLUS_1,
    }
    assert NonexistenceKind.L_NOT_DIVIDES_TWO_P_PLUS_1 in rows[3].reasons
    assert all(r.note is None for r in rows)


def test_catalog_row_invariants():
    with pytest.raises(ValidationError):
        CatalogRow(mp=7, p=3, p_plus_2=6, q=5, mq=31, two_p_plus_1=9, l=3,
                   solution=(2, 1, 3), status=CatalogStatus.SOLVABLE)
    with pytest.raises(ValidationError):
        CatalogRow(mp=7, p=3, p_plus_2=5, q=5, mq=7, two_p_plus_1=9, l=3,
                   solution=(2, 1, 3), status=CatalogStatus.SOLVABLE)
    with pytest.raises(ValidationError):
        CatalogRow(mp=7, p=3, p_plus_2=5, q=5, mq=31, two_p_plus_1=9, l=3,
                   status=CatalogStatus.UNSOLVABLE)


def test_catalog_row_csv_record():
    row = CatalogService.enumerate_solvable(3)[1]
    assert row.csv_record() == ["7", "3", "5", "5", "31", "9", "3", "(2,1,3)", "PaperErratum", "", "paper prints M_q=7", "2"]


def test_enumerate_solvable_stops_at_the_cap_for_large_limits():
    with pytest.raises(CapExceededError):
        CatalogService.enumerate_solvable(12000)


def test_table1_appends_unreproduced_printed_rows_in_order(monkeypatch):
    printed = load_paper_tables()
    extra = {"mp": 3, "p": 2, "p_plus_2": 4, "q": 2, "mq": 3, "two_p_plus_1": 5, "l": 7, "solution": [2, 2, 1]}
    monkeypatch.setattr(
        catalog_service, "load_paper_tables",
        lambda: {"table1": printed["table1"] + [extra], "table2": printed["table2"]},
    )

    rows = CatalogService.table1(3)
    assert [(r.p, r.q, r.l) for r in rows] == [(2, 2, 5), (2, 2, 7), (3, 5, 3)]
    added = rows[1]
    assert added.status == CatalogStatus.PAPER_ERRATUM
    assert added.solution is None
    assert added.note == "printed row not reproduced by the closed form"
    assert added.paper_row == 7
