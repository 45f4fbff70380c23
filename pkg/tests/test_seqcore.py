"""Enumeration, membership and text forms for the core classes."""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from fishburn.errors import DomainError, ResourceLimitError, UsageError
from fishburn.seqcore import (
    ClassId,
    Perm,
    Seq,
    enumerate_class,
    is_member,
    perm_transform,
)

FISHBURN_COUNTS = [1, 2, 5, 15, 53, 217, 1014]


def listed(class_id, n, **kw):
    return [tuple(x) for x in enumerate_class(class_id, n, **kw)]


class TestCounts:
    def test_ascent_sequence_counts(self):
        got = [len(listed(ClassId.ASC, n)) for n in range(1, 8)]
        assert got == FISHBURN_COUNTS

    def test_fishburn_classes_share_counts(self):
        for n in range(1, 8):
            want = FISHBURN_COUNTS[n - 1]
            assert len(listed(ClassId.T21, n)) == want
            assert len(listed(ClassId.B, n)) == want
            assert len(listed(ClassId.C, n)) == want

    def test_pattern_avoiding_permutation_counts(self):
        for n in range(1, 7):
            want = FISHBURN_COUNTS[n - 1]
            assert len(listed(ClassId.PERM_AVOID_A, n)) == want
            assert len(listed(ClassId.PERM_AVOID_B, n)) == want

    def test_unrestricted_counts_are_factorials(self):
        for n in range(1, 7):
            assert len(listed(ClassId.INV, n)) == math.factorial(n)
            assert len(listed(ClassId.PERM_ALL, n)) == math.factorial(n)


class TestGoldenListings:
    def test_ascent_sequences_length_three(self):
        assert listed(ClassId.ASC, 3) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]

    def test_drop_avoiders_length_three(self):
        # (0,1,0) has a value one below an earlier entry, everything else is fine
        assert listed(ClassId.T21, 3) == [
            (0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 1), (0, 1, 2)]

    def test_b_class_length_three(self):
        # (0,0,2) puts a maximal entry after the non-ascent at position 1
        assert listed(ClassId.B, 3) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]

    def test_c_class_length_three(self):
        # (0,0,1) repeats the value 1 = i after the non-ascent at i = 1
        assert listed(ClassId.C, 3) == [
            (0, 0, 0), (0, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]

    def test_avoiders_length_three(self):
        all3 = {p for p in itertools.permutations((1, 2, 3))}
        assert set(listed(ClassId.PERM_AVOID_A, 3)) == all3 - {(2, 3, 1)}
        assert set(listed(ClassId.PERM_AVOID_B, 3)) == all3 - {(1, 3, 2)}


class TestEnumerationOrder:
    def test_lexicographic(self):
        for cid in (ClassId.ASC, ClassId.T21, ClassId.INV, ClassId.PERM_ALL):
            out = listed(cid, 5)
            assert out == sorted(out)

    def test_prefix_filters(self):
        whole = listed(ClassId.ASC, 4)
        assert listed(ClassId.ASC, 4, prefix=(0, 1)) == [
            s for s in whole if s[:2] == (0, 1)]
        assert listed(ClassId.ASC, 4, prefix=(0, 1))[0] == (0, 1, 0, 0)

    def test_prefix_longer_than_length_yields_nothing(self):
        assert listed(ClassId.ASC, 2, prefix=(0, 0, 0)) == []

    def test_dead_prefix_yields_nothing(self):
        assert listed(ClassId.ASC, 3, prefix=(0, 5)) == []


class TestEnumerationAgainstBruteForce:
    """The pruned enumerators must agree with a plain filter of the ambient set."""

    @pytest.mark.parametrize("cid", [ClassId.ASC, ClassId.T21, ClassId.B, ClassId.C])
    def test_sequence_classes(self, cid):
        for n in range(1, 6):
            ambient = itertools.product(*[range(i) for i in range(1, n + 1)])
            want = [s for s in ambient if is_member(cid, Seq(s))]
            assert listed(cid, n) == want

    @pytest.mark.parametrize(
        "cid", [ClassId.PERM_AVOID_A, ClassId.PERM_AVOID_B])
    def test_permutation_classes(self, cid):
        for n in range(1, 6):
            ambient = itertools.permutations(range(1, n + 1))
            want = [p for p in ambient if is_member(cid, Perm(p))]
            assert listed(cid, n) == want


class TestMembership:
    def test_ascent_condition(self):
        assert is_member(ClassId.ASC, Seq((0, 1, 0, 2, 3, 2, 3, 1)))
        # entry 2 exceeds asc(prefix) + 1 = 1
        assert not is_member(ClassId.ASC, Seq((0, 2)))
        assert not is_member(ClassId.ASC, Seq((1,)))

    def test_inversion_condition(self):
        assert is_member(ClassId.INV, Seq((0, 1, 2, 0, 4, 2, 2, 7)))
        assert not is_member(ClassId.INV, Seq((0, 3)))

    def test_drop_by_one(self):
        assert is_member(ClassId.T21, Seq((0, 0, 2, 2, 0, 5, 5, 3)))
        assert not is_member(ClassId.T21, Seq((0, 1, 0)))

    def test_bivincular_patterns(self):
        assert not is_member(ClassId.PERM_AVOID_A, Perm((2, 3, 1)))
        assert not is_member(ClassId.PERM_AVOID_B, Perm((1, 3, 2)))
        assert is_member(ClassId.PERM_AVOID_A, Perm((6, 1, 8, 3, 2, 5, 4, 7)))

    def test_kind_mismatch_rejected(self):
        with pytest.raises(UsageError):
            is_member(ClassId.ASC, Perm((1, 2)))
        with pytest.raises(UsageError):
            is_member(ClassId.PERM_ALL, Seq((0, 0)))

    def test_empty_object_rejected(self):
        with pytest.raises(UsageError):
            is_member(ClassId.ASC, Seq(()))


class TestLimits:
    def test_default_ceiling_on_sequences(self):
        with pytest.raises(ResourceLimitError):
            next(enumerate_class(ClassId.ASC, 13))

    def test_default_ceiling_on_permutations(self):
        with pytest.raises(ResourceLimitError):
            next(enumerate_class(ClassId.PERM_ALL, 11))

    def test_limit_overrides_ceiling(self):
        with pytest.raises(ResourceLimitError):
            next(enumerate_class(ClassId.ASC, 4, limit=3))
        assert len(listed(ClassId.ASC, 4, limit=4)) == 15

    def test_bad_length(self):
        with pytest.raises(UsageError):
            next(enumerate_class(ClassId.ASC, 0))
        with pytest.raises(UsageError):
            next(enumerate_class(ClassId.ASC, "3"))

    def test_bad_prefix(self):
        with pytest.raises(UsageError):
            next(enumerate_class(ClassId.ASC, 3, prefix=(0, -1)))


class TestTextForms:
    def test_sequence_round_trip(self):
        s = Seq.from_text("0,1,0,2,3,2,5,1")
        assert tuple(s) == (0, 1, 0, 2, 3, 2, 5, 1)
        assert s.to_text() == "0,1,0,2,3,2,5,1"
        assert Seq.from_text("") == Seq(())

    def test_sequence_rejects_garbage(self):
        for text in ("0,x", "0,,1", "0, -1"):
            with pytest.raises(UsageError):
                Seq.from_text(text)

    def test_permutation_digit_word(self):
        p = Perm.from_text("61832547")
        assert tuple(p) == (6, 1, 8, 3, 2, 5, 4, 7)
        assert p.to_text() == "61832547"

    def test_permutation_comma_form(self):
        p = Perm.from_text("10,1,2,3,4,5,6,7,8,9")
        assert len(p) == 10 and p[0] == 10
        # ten or more entries cannot be written as a digit word
        assert "," in p.to_text()

    def test_permutation_rejects_garbage(self):
        for text in ("132x", "1,1,2", "0,1"):
            with pytest.raises(UsageError):
                Perm.from_text(text)
        assert Perm.from_text("") == Perm(())

    def test_constructors_validate(self):
        with pytest.raises(DomainError):
            Seq((0, -1))
        with pytest.raises(DomainError):
            Seq((0, True))
        with pytest.raises(DomainError):
            Perm((1, 3))
        with pytest.raises(DomainError):
            Perm((1, 1, 2))


class TestPermTransform:
    def test_inverse_and_complement(self):
        p = Perm((6, 1, 8, 3, 2, 5, 4, 7))
        assert tuple(perm_transform(p, "inverse")) == (2, 5, 4, 7, 6, 1, 8, 3)
        assert tuple(perm_transform(p, "complement")) == (3, 8, 1, 6, 7, 4, 5, 2)

    def test_combined_kind_is_the_composition(self):
        p = Perm((3, 1, 2))
        both = perm_transform(p, "inverse_then_complement")
        assert both == perm_transform(perm_transform(p, "inverse"), "complement")

    def test_unknown_kind(self):
        with pytest.raises(UsageError):
            perm_transform(Perm((1, 2)), "reverse")

    @given(st.integers(1, 7).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))))
    def test_involutions(self, vals):
        p = Perm(tuple(vals))
        assert perm_transform(perm_transform(p, "inverse"), "inverse") == p
        assert perm_transform(perm_transform(p, "complement"), "complement") == p
