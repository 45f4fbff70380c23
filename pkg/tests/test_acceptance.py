"""Acceptance suite: every headline theorem at its stated desk scale.

Run with -v to get one pass/fail line per criterion.  Each criterion also
prints its own verdict and timing; the closing test enforces the overall
five-minute budget for this module.
"""

import time

from fishburn.genfun import fishburn_series
from fishburn.seqcore import ClassId, enumerate_class
from fishburn import harness

_DURATIONS = []


def run_timed(number, names, budget=None, **overrides):
    t0 = time.perf_counter()
    reports = [harness.run_check(name, **overrides) for name in names]
    elapsed = time.perf_counter() - t0
    _DURATIONS.append(elapsed)
    print(f"criterion {number}: "
          f"{'PASS' if all(r.passed for r in reports) else 'FAIL'} "
          f"({elapsed:.2f}s)")
    for report in reports:
        assert report.passed, report.as_dict()
    if budget is not None:
        assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
    return reports


def test_criterion_01_counts_match_the_expanded_series():
    t0 = time.perf_counter()
    counts = [sum(1 for _ in enumerate_class(ClassId.ASC, n))
              for n in range(1, 12)]
    assert counts[:7] == [1, 2, 5, 15, 53, 217, 1014]
    assert counts == fishburn_series(11).as_integers()[1:]
    elapsed = time.perf_counter() - t0
    _DURATIONS.append(elapsed)
    print(f"criterion 1: PASS ({elapsed:.2f}s)")
    assert elapsed < 10


def test_criterion_02_six_classes_equinumerous():
    run_timed(2, ["class_counts"], budget=60, max_n=10, perm_max_n=9)


def test_criterion_03_quadruple_mirror_symmetry():
    run_timed(3, ["conjecture1"], budget=60, max_n=10)


def test_criterion_04_upsilon_transports_the_quadruple():
    run_timed(4, ["upsilon_quadruple"], max_n=8)


def test_criterion_05_composed_bijections_move_all_set_statistics():
    run_timed(5, ["psi_setvalued", "phi_setvalued"], max_n=8)


def test_criterion_06_three_pair_tables_coincide():
    run_timed(6, ["main3"], max_n=10)


def test_criterion_07_three_triple_tables_coincide():
    run_timed(7, ["t_main3"], max_n=9)


def test_criterion_08_zeromax_series_symmetric_and_enumerated():
    run_timed(8, ["gf_zeromax"], order=9, points=20, seed=2026)


def test_criterion_09_quadruple_series_matches_tables_and_symmetry():
    run_timed(9, ["gf_G"], order=9, points=20, seed=2026, sym_order=10)


def test_criterion_10_asczero_forms_agree_with_the_quadruple_series():
    run_timed(10, ["gf_asczero"], order=9, points=20, seed=2026)


def test_criterion_11_case_identities_hold_at_rational_points():
    run_timed(11, ["case_identities"], order=8, points=10, seed=2026)


def test_criterion_12_decomposition_lemma_ledger():
    run_timed(12, ["lemma_suite"], max_n=7)


def test_criterion_13_double_eulerian_transport():
    run_timed(13, ["foata", "inv_sym", "lehmer_quadruple"], max_n=8)


def test_total_runtime_within_budget():
    total = sum(_DURATIONS)
    print(f"acceptance total: {total:.2f}s over {len(_DURATIONS)} criteria")
    assert len(_DURATIONS) == 13
    assert total < 300
