"""Tests for census: DP vs oracle rows, verification reports, table rows."""

from fractions import Fraction

import pytest

from cuspcensus.census import (
    SUITES,
    CapExceeded,
    CensusRow,
    Check,
    VerificationReport,
    _below,
    _within,
    conjugacy_class_sizes,
    excursion_census,
    oracle_census,
    suite_bijection,
    suite_closed_form,
    suite_double_sum,
    suite_lemma33,
    suite_matrices,
    suite_partition,
    suite_thm32,
    suite_thm34,
    table1,
    verify_theorem_2n_depth1,
    verify_theorem_two_excursions,
)
from cuspcensus.compositions import count_all, count_bounded, count_exact_excursions


# -- check plumbing ------------------------------------------------------------


def test_within_exact_on_big_integers():
    big = 10**40
    assert _within("eq", (), big, big, 0).passed
    assert not _within("eq", (), big + 1, big, 0).passed


def test_within_relative():
    assert _within("rel", (), 1.01, 1.0, Fraction(1, 50), relative=True).passed
    assert not _within("rel", (), 1.03, 1.0, Fraction(1, 50), relative=True).passed


def test_below_is_strict():
    assert _below("lt", (), 1, 2).passed
    assert not _below("lt", (), 2, 2).passed


def test_report_passed_property():
    good = _within("a", (), 0, 0, 0)
    bad = _within("b", (), 1, 0, 0)
    assert VerificationReport("r", (good,)).passed
    assert not VerificationReport("r", (good, bad)).passed


# -- census rows ---------------------------------------------------------------


def test_excursion_census_frozen_rows():
    rows = excursion_census(7, 1)
    assert [(r.n, r.count) for r in rows] == [(0, 1), (1, 21), (2, 35), (3, 7)]
    assert all(r.source == "dp" for r in rows)
    rows = excursion_census(4, 2)
    assert [(r.n, r.count) for r in rows] == [(0, 5), (1, 3)]
    rows = excursion_census(2, 3)
    assert [(r.n, r.count) for r in rows] == [(0, 2)]


def test_excursion_census_rows_partition():
    for t in range(1, 16):
        for D in range(1, 5):
            assert sum(r.count for r in excursion_census(t, D)) == count_all(t)


def test_excursion_census_validation():
    with pytest.raises(ValueError):
        excursion_census(0, 2)
    with pytest.raises(ValueError):
        excursion_census(3, 0)


def test_oracle_census_frozen():
    rows = oracle_census(3, 1)
    assert [(r.n, r.count) for r in rows] == [(0, 1), (1, 3)]
    assert all(r.source == "oracle" for r in rows)


def test_oracle_matches_dp():
    for t in range(1, 11):
        for D in range(1, 4):
            dp = [(r.n, r.count) for r in excursion_census(t, D)]
            oracle = [(r.n, r.count) for r in oracle_census(t, D)]
            assert dp == oracle


def test_oracle_census_cap():
    with pytest.raises(CapExceeded):
        oracle_census(19, 2)
    with pytest.raises(CapExceeded):
        oracle_census(5, 1, cap=4)
    with pytest.raises(ValueError):
        oracle_census(0, 1)


def test_oracle_census_thread_count_invisible():
    single = oracle_census(9, 2, threads=1)
    multi = oracle_census(9, 2, threads=4)
    assert single == multi


def test_conjugacy_class_sizes():
    sizes = conjugacy_class_sizes(3)
    assert len(sizes) == 4
    assert set(sizes.values()) == {2}
    with pytest.raises(CapExceeded):
        conjugacy_class_sizes(15)
    with pytest.raises(CapExceeded):
        conjugacy_class_sizes(0)


# -- convergence reports ----------------------------------------------------------


def test_depth1_report_exact_deviation():
    rep = verify_theorem_2n_depth1(1, (100, 1000))
    assert rep.passed
    # C(t,2)*2/t^2 - 1 = -1/t exactly, so the stored deviation is 1/t
    final = [c for c in rep.checks if c.name == "final_deviation"][0]
    assert final.measured == Fraction(1, 1000)


def test_depth1_report_n_zero_is_exact():
    rep = verify_theorem_2n_depth1(0, (10, 100))
    assert rep.passed
    assert any(c.name == "deviation_stays_zero" for c in rep.checks)


def test_depth1_report_validation():
    with pytest.raises(ValueError):
        verify_theorem_2n_depth1(-1, (10,))
    with pytest.raises(ValueError):
        verify_theorem_2n_depth1(1, ())
    with pytest.raises(ValueError):
        verify_theorem_2n_depth1(1, (100, 100))
    with pytest.raises(ValueError):
        verify_theorem_2n_depth1(1, (100, 10))


def test_two_excursions_report():
    rep = verify_theorem_two_excursions(2, (250, 500), Fraction(1, 20))
    assert rep.passed
    names = [c.name for c in rep.checks]
    assert names == ["error_decreases", "final_relative_error"]
    with pytest.raises(ValueError):
        verify_theorem_two_excursions(1)


# -- table rows --------------------------------------------------------------------


def test_table1_frozen_t20_d2():
    rows = table1(20, 2)
    by_family = {}
    for r in rows:
        by_family.setdefault(r.family, []).append(r)
    assert by_family["all"][0].exact == 524288
    low = by_family["low_lying"][0]
    assert low.exact == count_bounded(20, 2)
    assert abs(low.approx - low.exact) <= 0.5 + 1e-9  # the rnd identity
    depth1 = {r.n: r for r in by_family["depth_one"]}
    assert depth1[1].exact == 190
    assert abs(depth1[1].approx - 200.0) < 1e-6  # t^2/2
    two = by_family["two_excursions"][0]
    assert two.exact == count_exact_excursions(20, 1, 2)
    assert abs(two.approx - two.exact) <= 0.25 * two.exact


def test_table1_row_layout():
    rows = table1(10, 3, n_max=2)
    assert [r.family for r in rows] == [
        "all", "low_lying", "depth_one", "depth_one", "two_excursions",
    ]
    with pytest.raises(ValueError):
        table1(0, 2)
    with pytest.raises(ValueError):
        table1(10, 1)
    with pytest.raises(ValueError):
        table1(10, 2, n_max=0)


# -- suites ---------------------------------------------------------------------------


def test_suite_registry_names():
    assert set(SUITES) == {
        "bijection", "partition", "closed-form", "double-sum",
        "thm32", "thm34", "lemma33", "matrices",
    }


def test_suites_pass_at_reduced_scales():
    assert suite_bijection(6).passed
    assert suite_partition(t_max=8, d_max=3, oracle_max_t=8).passed
    assert suite_closed_form(t_max=60, d_max=6).passed
    assert suite_double_sum(t_max=60, d_max=4, bounds_t_max=40, bounds_d_max=4).passed
    assert suite_thm32(
        exact_t_max=100, t_list=(1000, 10000), tolerance=Fraction(1, 100)
    ).passed
    assert suite_thm34(d_list=(2,), t_list=(250, 500), tolerance=Fraction(1, 20)).passed
    assert suite_lemma33(t_ref=400, t_max=800, tolerance=Fraction(1, 25)).passed
    assert suite_matrices(t_max=6).passed


def test_suite_partition_respects_threads():
    a = suite_partition(t_max=6, d_max=2, oracle_max_t=6, threads=1)
    b = suite_partition(t_max=6, d_max=2, oracle_max_t=6, threads=3)
    assert a == b
