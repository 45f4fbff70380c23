"""Truncated series arithmetic and the generating-function formulas."""

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fishburn.errors import DomainError, ResourceLimitError, UsageError
from fishburn.seqcore import ClassId, enumerate_class
from fishburn import genfun, stats

FISHBURN_COUNTS = [0, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608, 1422074]

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20)


def series(draw_order=4):
    return st.lists(rationals, min_size=draw_order + 1, max_size=draw_order + 1
                    ).map(genfun.TruncSeries)


class TestTruncSeries:
    def test_construction_and_padding(self):
        f = genfun.TruncSeries((1, 2), order=4)
        assert f.order == 4
        assert f.coeffs == (1, 2, 0, 0, 0)
        assert f.coefficient(3) == 0

    def test_as_integers(self):
        f = genfun.TruncSeries((0, 1, 2, 5))
        assert f.as_integers() == [0, 1, 2, 5]
        with pytest.raises(UsageError):
            genfun.TruncSeries((Fraction(1, 2),)).as_integers()

    def test_monomial_and_vanishing(self):
        m = genfun.TruncSeries.monomial(Fraction(7), 2, 4)
        assert m.coeffs == (0, 0, 7, 0, 0)
        assert m.vanishes_below(2) and not m.vanishes_below(3)

    def test_errors(self):
        with pytest.raises(UsageError):
            genfun.TruncSeries((1, 0, 0)) + genfun.TruncSeries((1, 0))
        with pytest.raises(DomainError):
            genfun.TruncSeries((0, 1)).inverse()
        with pytest.raises(UsageError):
            genfun.fishburn_series(-1)
        with pytest.raises(ResourceLimitError):
            genfun.fishburn_series(13)

    @given(series(), series(), series())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == genfun.TruncSeries.zero(a.order)

    @given(series())
    def test_inverse_is_two_sided(self, a):
        one = genfun.TruncSeries.one(a.order)
        if a.coefficient(0) == 0:
            with pytest.raises(DomainError):
                a.inverse()
        else:
            assert a * a.inverse() == one
            assert a.inverse() * a == one

    @given(series(), st.integers(0, 4))
    def test_power_matches_repeated_product(self, a, k):
        out = genfun.TruncSeries.one(a.order)
        for _ in range(k):
            out = out * a
        assert a ** k == out


class TestSpecPoint:
    def test_defaults_and_exactness(self):
        p = genfun.SpecPoint()
        assert p.as_dict() == {"x": "1", "q": "1", "u": "1", "z": "1", "w": "1"}
        with pytest.raises(UsageError):
            genfun.SpecPoint(x=0.5)

    def test_random_points_are_reproducible(self):
        a = genfun.random_point(random.Random(99))
        b = genfun.random_point(random.Random(99))
        assert a == b

    def test_constraint_is_respected(self):
        rng = random.Random(5)
        for _ in range(20):
            p = genfun.random_point(
                rng, constraint=genfun.admissible_for_length_series)
            assert genfun.admissible_for_length_series(p)

    def test_admissibility_rejects_the_pole(self):
        # x = u = 2 makes a denominator factor vanish at weight one
        assert not genfun.admissible_for_length_series(
            genfun.SpecPoint(x=2, u=2))
        assert genfun.admissible_for_length_series(genfun.SpecPoint())


def brute_quadruple(order, point):
    """Weight enumeration directly, bypassing the closed form."""
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        for s in enumerate_class(ClassId.ASC, n):
            sc = stats.scalar_stats(s)
            coeffs[n] += (point.x ** sc.rep) * (point.q ** sc.max) \
                * (point.u ** sc.asc) * (point.z ** sc.zero)
    return genfun.TruncSeries(coeffs)


class TestSeriesFormulas:
    def test_fishburn_coefficients(self):
        assert genfun.fishburn_series(11).as_integers() == FISHBURN_COUNTS
        assert genfun.fishburn_series(1).as_integers() == [0, 1]

    def test_quadruple_series_at_the_all_ones_point(self):
        assert genfun.series_G(9, genfun.SpecPoint()) == genfun.fishburn_series(9)

    def test_quadruple_series_first_coefficient(self):
        pt = genfun.SpecPoint(x=Fraction(2, 3), q=3, u=Fraction(1, 2),
                              z=Fraction(5, 7))
        # the single length-one sequence carries weight q*z
        assert genfun.series_G(1, pt).coefficient(1) == Fraction(15, 7)

    def test_quadruple_series_matches_enumeration(self):
        rng = random.Random(12345)
        for _ in range(3):
            pt = genfun.random_point(
                rng, constraint=genfun.admissible_for_length_series)
            assert genfun.series_G(6, pt) == brute_quadruple(6, pt)

    def test_quadruple_symmetry(self):
        pt = genfun.SpecPoint(x=Fraction(2, 3), q=3, u=Fraction(1, 2),
                              z=Fraction(5, 7))
        swapped = genfun.SpecPoint(x=pt.u, q=pt.z, u=pt.x, z=pt.q)
        assert genfun.series_G(8, pt) == genfun.series_G(8, swapped)

    def test_zeromax_series(self):
        rng = random.Random(777)
        for _ in range(3):
            q = genfun.random_point(rng).q
            z = genfun.random_point(rng).z
            f = genfun.series_zeromax(6, q=q, z=z)
            assert f == genfun.series_zeromax(6, q=z, z=q)
            brute = [Fraction(0)] * 7
            for n in range(1, 7):
                for s in enumerate_class(ClassId.ASC, n):
                    sc = stats.scalar_stats(s)
                    brute[n] += (q ** sc.zero) * (z ** sc.max)
            assert f == genfun.TruncSeries(brute)

    def test_asczero_variants_agree(self):
        rng = random.Random(31)
        for _ in range(3):
            pt = genfun.random_point(rng)
            a = genfun.series_asczero(7, u=pt.u, z=pt.z, variant="primitive")
            b = genfun.series_asczero(7, u=pt.u, z=pt.z, variant="alternative")
            assert a == b
            assert a == genfun.series_G(
                7, genfun.SpecPoint(u=pt.u, z=pt.z))

    def test_asczero_at_ones_gives_the_counts(self):
        assert genfun.series_asczero(9).as_integers() == FISHBURN_COUNTS[:10]
        with pytest.raises(UsageError):
            genfun.series_asczero(5, variant="nope")


class TestEvalGf:
    def table(self):
        counts = Counter()
        for s in enumerate_class(ClassId.ASC, 3):
            sc = stats.scalar_stats(s)
            counts[(sc.rep, sc.max)] += 1
        return genfun.DistTable(ClassId.ASC, 3, ("rep", "max"), dict(counts))

    def test_single_table(self):
        tbl = self.table()
        assert tbl.total() == 5
        assert genfun.eval_gf(tbl, genfun.SpecPoint()) == 5
        assert genfun.eval_gf(tbl, genfun.SpecPoint(x=0, q=1)) == 1
        assert genfun.eval_gf(tbl, genfun.SpecPoint(x=2, q=3)) == 81

    def test_table_list(self):
        got = genfun.eval_gf([self.table()], genfun.SpecPoint(x=2, q=3))
        assert got == [0, 0, 0, 81]


class TestCaseIdentities:
    def test_all_four_at_a_generic_point(self):
        pt = genfun.SpecPoint(x=2, q=3, u=Fraction(1, 2), z=5, w=Fraction(1, 3))
        for case in (1, 2, 3, 4):
            report = genfun.check_case_identity(case, order=8, point=pt)
            assert report.ok, (case, report)
            assert report.lhs == report.rhs

    def test_degenerate_marker_point(self):
        # at w = 0, z = 1 every marker-weighted term collapses
        pt = genfun.SpecPoint(x=2, q=3, u=5, z=1, w=0)
        for case in (1, 2, 3, 4):
            assert genfun.check_case_identity(case, order=7, point=pt).ok

    def test_seeded_points(self):
        rng = random.Random(4242)
        done = 0
        while done < 5:
            pt = genfun.random_point(
                rng, constraint=genfun.admissible_for_case_identity)
            if pt.w in (0, 1):
                continue
            for case in (1, 2, 3, 4):
                assert genfun.check_case_identity(case, order=7, point=pt).ok
            done += 1

    def test_errors(self):
        with pytest.raises(UsageError):
            genfun.check_case_identity(5, order=6, point=genfun.SpecPoint())
        with pytest.raises(DomainError):
            genfun.check_case_identity(
                1, order=6, point=genfun.SpecPoint(w=1))
        with pytest.raises(DomainError):
            genfun.check_case_identity(
                1, order=6, point=genfun.SpecPoint(q=0, w=2))
