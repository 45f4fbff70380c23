"""Subset classifiers and the length-reducing decomposition maps.

Worked values are pinned here; the acceptance suite replays the full
domain/codomain/injectivity ledger for every map at larger sizes.
"""

import pytest

from fishburn.errors import DomainError, UsageError
from fishburn.seqcore import ClassId, Seq, enumerate_class
from fishburn import decomp, stats


def ascent_members(n):
    return list(enumerate_class(ClassId.ASC, n))


def t21_members(n):
    return list(enumerate_class(ClassId.T21, n))


class TestClassify:
    def test_scheme_names(self):
        assert decomp.SUBSET_SCHEMES == (
            "ASC_S", "ASC_P", "T_J", "T_F", "ASC_R", "ASC_G")

    def test_four_way_split_at_small_lengths(self):
        # members with a non-maximal tail, classified by hand
        want = {
            (0, 0): "S1",
            (0, 0, 0): "S2", (0, 0, 1): "S4", (0, 1, 0): "S1", (0, 1, 1): "S1",
            (0, 1, 0, 1): "S3", (0, 1, 0, 2): "S4", (0, 1, 2, 0): "S1",
        }
        for vals, label in want.items():
            assert decomp.classify(Seq(vals), "ASC_S") == label

    def test_smallest_member_of_the_third_block(self):
        hits = [tuple(s)
                for n in range(2, 5) for s in ascent_members(n)
                if stats.scalar_stats(s).max < n
                and decomp.classify(s, "ASC_S") == "S3"]
        assert hits[0] == (0, 1, 0, 1)

    def test_other_schemes_on_small_members(self):
        assert decomp.classify(Seq((0, 1, 0)), "ASC_P") == "P"
        assert decomp.classify(Seq((0, 1, 1)), "ASC_P") == "Pc"
        assert decomp.classify(Seq((0, 0, 2)), "T_F") == "F"
        assert decomp.classify(Seq((0, 0, 2)), "T_J") == "J1"
        assert decomp.classify(Seq((0, 1, 0)), "ASC_G") == "G"
        assert decomp.classify(Seq((0, 1, 0)), "ASC_R") == "R1"

    def test_every_scheme_partitions_its_domain(self):
        labels = {
            "ASC_P": {"P", "Pc"}, "T_F": {"F", "Fc"},
            "T_J": {"J1", "J2"}, "ASC_G": {"G", "Gc"}, "ASC_R": {"R1", "R2"},
        }
        for n in range(1, 7):
            for s in ascent_members(n):
                sc = stats.scalar_stats(s)
                assert decomp.classify(s, "ASC_P") in labels["ASC_P"]
                assert decomp.classify(s, "ASC_G") in labels["ASC_G"]
                if sc.zero < n:  # needs a nonzero entry
                    assert decomp.classify(s, "ASC_R") in labels["ASC_R"]
                if sc.max < n:  # needs a non-maximal tail
                    assert decomp.classify(s, "ASC_S") in {"S1", "S2", "S3", "S4"}
            for t in t21_members(n):
                assert decomp.classify(t, "T_F") in labels["T_F"]
                if stats.scalar_stats(t).max < n:
                    assert decomp.classify(t, "T_J") in labels["T_J"]

    def test_errors(self):
        with pytest.raises(UsageError):
            decomp.classify(Seq((0, 1, 0)), "NOPE")
        with pytest.raises(DomainError):
            decomp.classify(Seq((0, 1)), "ASC_S")  # identity run has no tail


class TestWorkedValues:
    def test_maximal_dropping_map(self):
        assert decomp.phi_P(Seq((0, 1, 0))) == Seq((0, 0))
        assert decomp.phi_P_inv(Seq((0, 0))) == Seq((0, 1, 0))
        with pytest.raises(DomainError):
            decomp.phi_P(Seq((0, 1, 1)))

    def test_fourth_block_map(self):
        got = decomp.xi_S4(Seq((0, 0, 1)))
        assert (got.output, got.side_index) == (Seq((0, 1, 1)), 0)
        assert decomp.xi_S4_inv(Seq((0, 1, 1)), 0) == Seq((0, 0, 1))

    def test_second_block_reduction(self):
        got = decomp.s2_reduce(Seq((0, 1, 1, 0)))
        assert (got.output, got.side_index) == (Seq((0, 1, 0)), 1)
        assert decomp.s2_insert(Seq((0, 1, 0)), 1) == Seq((0, 1, 1, 0))
        flat = decomp.s2_reduce(Seq((0, 0, 0)))
        assert (flat.output, flat.side_index) == (Seq((0, 0)), 0)

    def test_third_block_reduction(self):
        got = decomp.s3_reduce(Seq((0, 1, 0, 1)))
        assert (got.output, got.side_index) == (Seq((0, 1, 1)), 0)
        assert decomp.s3_insert(Seq((0, 1, 1)), 0) == Seq((0, 1, 0, 1))

    def test_tail_entry_shift(self):
        assert decomp.ealm_shift(Seq((0, 1, 0)), "up") == Seq((0, 1, 1))
        assert decomp.ealm_shift(Seq((0, 1, 1)), "down") == Seq((0, 1, 0))
        with pytest.raises(UsageError):
            decomp.ealm_shift(Seq((0, 1, 0)), "sideways")

    def test_paired_maximal_dropping_map(self):
        assert decomp.psi_F(Seq((0, 0, 2))) == Seq((0, 0))
        s = Seq((0, 0, 2, 3, 0, 3))
        assert decomp.psi_F(s) == Seq((0, 0, 2, 0, 2))
        assert decomp.psi_F_inv(decomp.psi_F(s)) == s

    def test_paired_maximal_shift(self):
        trace = []
        out = decomp.mpair_shift(Seq((0, 0, 2, 0)), "up", _trace=trace)
        assert out == Seq((0, 0, 2, 2))
        assert [lab for lab, _ in trace] == ["separated"]
        assert decomp.mpair_shift(Seq((0, 0, 2, 3)), "up") == Seq((0, 1, 1, 3))
        assert decomp.mpair_shift(Seq((0, 0, 2)), "up") == Seq((0, 1, 1))
        assert decomp.mpair_shift(Seq((0, 1, 1)), "down") == Seq((0, 0, 2))

    def test_maximal_detaching_chain(self):
        s = Seq((0, 0, 0, 3, 4, 5, 5, 7, 1, 5))
        trace = []
        out = decomp.vartheta(s, 1, _trace=trace)
        assert out == Seq((0, 0, 0, 3, 3, 4, 6, 7, 1, 4))
        assert trace == [
            ("M0", Seq((0, 0, 0, 3, 4, 4, 5, 7, 1, 5))),
            ("M1", Seq((0, 0, 0, 3, 3, 4, 6, 7, 1, 4))),
        ]
        assert decomp.vartheta(s, 2) == Seq((0, 0, 0, 3, 4, 4, 5, 7, 1, 5))
        assert decomp.vartheta(s, 0) == Seq((0, 0, 0, 3, 0, 4, 6, 7, 1, 4))
        back = decomp.vartheta_inv(out)
        assert (back.output, back.side_index) == (s, 1)

    def test_zero_side_maps(self):
        assert decomp.phi_G(Seq((0, 1, 0))) == Seq((0, 1))
        assert decomp.phi_G_inv(Seq((0, 1))) == Seq((0, 1, 0))
        assert decomp.zpair_shift(Seq((0, 1, 0, 0)), "up") == Seq((0, 0, 1, 0))
        assert decomp.zpair_shift(Seq((0, 0, 1, 0)), "down") == Seq((0, 1, 0, 0))

    def test_zero_detaching_map(self):
        got = decomp.theta_R_inv(Seq((0, 1, 2, 0, 0, 1, 2, 4, 1, 2, 0, 2)))
        assert (got.output, got.side_index) == (
            Seq((0, 1, 2, 0, 0, 1, 3, 0, 1, 2, 0, 2)), 2)
        assert decomp.theta_R(got.output, got.side_index) == Seq(
            (0, 1, 2, 0, 0, 1, 2, 4, 1, 2, 0, 2))


class TestRoundTrips:
    """Each reducing map must invert cleanly over its whole small domain."""

    def test_first_block_pair(self):
        for n in range(2, 6):
            for s in ascent_members(n):
                if decomp.classify(s, "ASC_P") == "P":
                    assert decomp.phi_P_inv(decomp.phi_P(s)) == s

    def test_block_reductions(self):
        for n in range(2, 6):
            for s in ascent_members(n):
                if stats.scalar_stats(s).max == n:
                    continue
                label = decomp.classify(s, "ASC_S")
                if label == "S2":
                    r = decomp.s2_reduce(s)
                    assert decomp.s2_insert(r.output, r.side_index) == s
                elif label == "S3":
                    r = decomp.s3_reduce(s)
                    assert decomp.s3_insert(r.output, r.side_index) == s
                elif label == "S4":
                    r = decomp.xi_S4(s)
                    assert decomp.xi_S4_inv(r.output, r.side_index) == s

    def test_shifts_invert(self):
        for n in range(2, 7):
            for s in ascent_members(n):
                st = stats.scalar_stats(s)
                if st.max < n and decomp.classify(s, "ASC_S") != "S4":
                    i = stats.ealm(s)
                    if i < st.max - 1:
                        up = decomp.ealm_shift(s, "up")
                        assert decomp.ealm_shift(up, "down") == s
                if (st.zero < n and decomp.classify(s, "ASC_R") == "R1"
                        and stats.zpair(s) < st.zero - 1):
                    up = decomp.zpair_shift(s, "up")
                    assert decomp.zpair_shift(up, "down") == s
            for t in t21_members(n):
                st = stats.scalar_stats(t)
                if (st.max < n and decomp.classify(t, "T_J") == "J1"
                        and stats.mpair(t) < st.max - 1):
                    up = decomp.mpair_shift(t, "up")
                    assert decomp.mpair_shift(up, "down") == t

    def test_detaching_maps_invert(self):
        for n in range(2, 7):
            for t in t21_members(n):
                if decomp.classify(t, "T_F") == "Fc":
                    for i in range(stats.mpair(t)):
                        r = decomp.vartheta_inv(decomp.vartheta(t, i))
                        assert (r.output, r.side_index) == (t, i)
            for s in ascent_members(n):
                if decomp.classify(s, "ASC_G") == "Gc":
                    for i in range(stats.zpair(s)):
                        r = decomp.theta_R_inv(decomp.theta_R(s, i))
                        assert (r.output, r.side_index) == (s, i)

    def test_paired_maximal_map_inverts(self):
        for n in range(2, 7):
            for t in t21_members(n):
                if decomp.classify(t, "T_F") == "F":
                    assert decomp.psi_F_inv(decomp.psi_F(t)) == t
