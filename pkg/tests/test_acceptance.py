"""Acceptance suite: one test per criterion, exact tolerances throughout.

Every check compares exact integers or canonical forms; the two table
criteria additionally require the Hom solver and the character oracle to
agree cell by cell.  Each test prints its own pass/fail line.
"""

from multifilt.verify import (
    check_binary_forms_table,
    check_clebsch_gordan,
    check_filtration_shapes,
    check_graded_comparison,
    check_hom_properties,
    check_matrix_table,
    check_rees_round_trip,
)


def _report(i, result, budget=None):
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} criterion {i}: {result.name} [{result.seconds:.2f}s] {result.detail}")
    assert result.passed, result.detail
    if budget is not None:
        assert result.seconds < budget, f"{result.name} took {result.seconds:.2f}s, budget {budget}s"


def test_criterion_1_rees_round_trip():
    _report(1, check_rees_round_trip(count=200), budget=1.0)


def test_criterion_2_graded_comparison():
    _report(2, check_graded_comparison(count=200))


def test_criterion_3_binary_forms_table():
    _report(3, check_binary_forms_table(), budget=10.0)


def test_criterion_4_matrix_table():
    _report(4, check_matrix_table(), budget=60.0)


def test_criterion_5_filtration_shapes():
    _report(5, check_filtration_shapes())


def test_criterion_6_clebsch_gordan_conservation():
    _report(6, check_clebsch_gordan())


def test_criterion_7_hom_properties():
    _report(7, check_hom_properties(count=100))
