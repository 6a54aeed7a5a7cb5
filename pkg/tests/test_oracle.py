from math import isqrt

import pytest

from app.core.exceptions import InvalidInputError
from app.models.crosscheck import FoundBy
from app.models.equation import (
    EquationInstance,
    NonexistenceKind,
    NonexistenceReason,
    SearchBounds,
    SolutionSet,
)
from app.services.oracle_service import OracleService
from app.services.solver_service import SolverService
from tests.conftest import ODD_PRIMES_TO_50, SMALL_EXPONENTS


@pytest.mark.parametrize("values, triple, expected", [
    ((8191, 7, 3), (2, 5, 2731), True),
    ((3, 7, 2), (1, 0, 1), True),
    ((3, 127, 2), (1, 0, 1), True),
    ((3, 7, 5), (1, 1, 1), False),
])
def test_verify_examples(instance, values, triple, expected):
    assert OracleService.verify(instance(*values), *triple) is expected


def test_verify_rejects_negative(instance):
    with pytest.raises(InvalidInputError):
        OracleService.verify(instance(3, 7, 5), -1, 0, 1)


def test_brute_force_example_1(instance):
    result = OracleService.brute_force(instance(8191, 7, 3), SearchBounds(x_max=6, y_max=6))
    assert result.triples == [(0, 1, 1), (2, 5, 2731)]


def test_brute_force_table2_row(instance):
    result = OracleService.brute_force(instance(7, 127, 5), SearchBounds(x_max=10, y_max=10))
    assert result.is_empty
    assert result.reason_kinds == [NonexistenceKind.SEARCH_EXHAUSTED]


@pytest.mark.parametrize("values", [(3, 3, 3), (8191, 7, 3), (7, 31, 2), (31, 127, 43)])
def test_brute_force_zero_bounds(instance, values):
    assert OracleService.brute_force(instance(*values), SearchBounds(x_max=0, y_max=0)).is_empty


def _naive(inst: EquationInstance, x_max: int, y_max: int):
    """Double loop over (x, y) with an explicit scan over z."""
    found = []
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            z_top = isqrt(inst.lhs(x, y)) // inst.l + 1
            for z in range(z_top + 1):
                if OracleService.verify(inst, x, y, z):
                    found.append((x, y, z))
    return found


@pytest.mark.parametrize("mp_value", [3, 7, 31])
@pytest.mark.parametrize("mq_value", [3, 7])
@pytest.mark.parametrize("l", [2, 3, 5, 7])
def test_brute_force_matches_naive_scan(instance, mp_value, mq_value, l):
    inst = instance(mp_value, mq_value, l)
    assert OracleService.brute_force(inst, SearchBounds(x_max=3, y_max=3)).triples == _naive(inst, 3, 3)


def test_brute_force_z_cap(instance):
    inst = instance(8191, 7, 3)
    assert OracleService.brute_force(inst, SearchBounds(x_max=6, y_max=6, z_max=1)).triples == [(0, 1, 1)]
    uncapped = OracleService.brute_force(inst, SearchBounds(x_max=6, y_max=6))
    huge_cap = OracleService.brute_force(inst, SearchBounds(x_max=6, y_max=6, z_max=10**40))
    assert uncapped.triples == huge_cap.triples


def test_brute_force_is_monotone(instance):
    inst = instance(127, 7, 3)
    small = set(OracleService.brute_force(inst, SearchBounds(x_max=4, y_max=4)).triples)
    large = set(OracleService.brute_force(inst, SearchBounds(x_max=8, y_max=8)).triples)
    assert small <= large
    assert (2, 3, 43) in large


def test_brute_force_parallel_matches_serial(instance):
    inst = instance(8191, 7, 3)
    bounds = SearchBounds(x_max=12, y_max=12)
    serial = OracleService.brute_force(inst, bounds, workers=1)
    parallel = OracleService.brute_force(inst, bounds, workers=3)
    assert serial.triples == parallel.triples == [(0, 1, 1), (2, 5, 2731)]


@pytest.mark.parametrize("bounds, expected", [
    ((10, 10, 10, 10), [(3, 2, 2, 3)]),
    ((2, 2, 2, 2), []),
    ((5, 5, 3, 3), [(3, 2, 2, 3)]),
    ((100, 100, 10, 10), [(3, 2, 2, 3)]),
])
def test_catalan_search(bounds, expected):
    assert [h.as_tuple() for h in OracleService.catalan_search(*bounds)] == expected


def test_catalan_search_rejects_small_bounds():
    with pytest.raises(InvalidInputError):
        OracleService.catalan_search(1, 10, 10, 10)


def test_cross_check_example_1(instance, default_bounds):
    report = OracleService.cross_check(instance(8191, 7, 3), default_bounds)
    assert report.consistent
    assert report.oracle.triples == report.solver.triples == [(0, 1, 1), (2, 5, 2731)]


@pytest.mark.parametrize("values", [(7, 3, 7), (3, 7, 5)])
def test_examples_2_and_3_are_empty_under_search(instance, default_bounds, values):
    inst = instance(*values)
    assert OracleService.brute_force(inst, default_bounds).is_empty
    assert SolverService.classify(inst, positive_only=True).is_empty


def test_l2_family_matches_search(default_bounds):
    for p in SMALL_EXPONENTS:
        for q in (2, 3, 5):
            inst = EquationInstance.from_exponents(p, q, 2)
            expected = SolverService.restrict(SolverService.solve_l2(inst.mp, inst.mq), default_bounds)
            observed = OracleService.brute_force(inst, default_bounds)
            assert observed.triples == expected.triples
            assert observed.triples == ([(1, 0, 1)] if p == 2 else [])


def test_odd_l_family_matches_search(default_bounds):
    checked = 0
    for p in SMALL_EXPONENTS:
        for q in SMALL_EXPONENTS:
            for l in ODD_PRIMES_TO_50:
                report = OracleService.cross_check(EquationInstance.from_exponents(p, q, l), default_bounds)
                assert report.consistent, report.discrepancies
                checked += 1
    assert checked == 350


def test_cross_check_reports_missed_solution(instance, default_bounds, monkeypatch):
    def blind_classify(inst, positive_only=False):
        return SolutionSet(
            instance=inst,
            nonexistence_reasons=[NonexistenceReason(kind=NonexistenceKind.PARITY_OBSTRUCTION, detail="stub")],
        )

    monkeypatch.setattr(SolverService, "classify", staticmethod(blind_classify))
    report = OracleService.cross_check(instance(8191, 31, 3), default_bounds)
    assert not report.consistent
    assert [(d.x, d.y, d.z, d.found_by) for d in report.discrepancies] == [(2, 3, 2731, FoundBy.ORACLE)]


def test_restrict_outside_bounds(instance):
    result = SolverService.classify(instance(8191, 7, 3), positive_only=True)
    restricted = SolverService.restrict(result, SearchBounds(x_max=2, y_max=4))
    assert restricted.is_empty
    assert restricted.reason_kinds == [NonexistenceKind.SEARCH_EXHAUSTED]
