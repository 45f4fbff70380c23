"""Structural decompositions driving the recursive enumeration arguments.

Each scheme splits a sequence class into disjoint blocks keyed by a local
pattern around the last maximal entry, the paired maximal, or the paired
zero.  The maps in this module move sequences between blocks (or down to
length n-1) while shifting one tracked statistic by a known amount and
preserving the rest.  Every map here has an explicit inverse, and the pair
is exercised exhaustively by the test suite.

Conventions shared with :mod:`fishburn.stats`:

* positions are 1-based, so "position k" means ``s[k-1]`` in Python;
* ordinals of maximals/zeros are 0-based (the first maximal is the 0-th);
* an identity run has ``mpair == 0`` and an all-zero run has ``zpair == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UsageError
from .seqcore import Seq, is_ascent, is_t21
from .stats import ealm, maximal_positions, mpair, mpos, zero_positions, zpair, zpos


@dataclass(frozen=True)
class MapResult:
    """Output of a decomposition map.

    ``side_index`` carries the detached marker value for maps whose codomain
    is a set of (sequence, integer) pairs; it is None for plain maps.
    """

    output: Seq
    side_index: int | None = None


SUBSET_SCHEMES = ("ASC_S", "ASC_P", "T_J", "T_F", "ASC_R", "ASC_G")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _max_stat(s) -> int:
    return len(maximal_positions(s))


def _in_F(s) -> bool:
    # Paired maximal is not the next-to-top one, and the following maximal
    # sits at the very end or is immediately followed by another maximal.
    p = _max_stat(s)
    j = mpair(s)
    if j >= p - 1:
        return False
    k1 = maximal_positions(s)[j + 1]
    return k1 == len(s) or s[k1] == k1


def _in_G(s) -> bool:
    # Zero analogue of _in_F: the zero after the paired one is last or is
    # immediately followed by another zero.
    p = len(zero_positions(s))
    j = zpair(s)
    if j >= p - 1:
        return False
    k1 = zero_positions(s)[j + 1]
    return k1 == len(s) or s[k1] == 0


def classify(s: Seq, scheme: str) -> str:
    """Return the block label of ``s`` under one of the subset schemes."""
    scheme = scheme.strip().upper()
    if scheme == "ASC_S":
        _require(is_ascent(s), f"not an ascent sequence: {tuple(s)!r}")
        p = _max_stat(s)
        n = len(s)
        _require(n > p, f"identity run has no tail to classify: {tuple(s)!r}")
        if n == p + 1:
            return "S1"
        if s[p] >= s[p + 1]:
            return "S2"
        return "S4" if p in s[p + 1:] else "S3"
    if scheme == "ASC_P":
        _require(is_ascent(s) and len(s) > 0,
                 f"not a nonempty ascent sequence: {tuple(s)!r}")
        q = _max_stat(s)
        return "P" if s.count(q - 1) == 1 else "Pc"
    if scheme == "T_J":
        _require(is_t21(s), f"drop-by-one pattern present: {tuple(s)!r}")
        _require(len(s) > _max_stat(s),
                 f"identity run has no tail to classify: {tuple(s)!r}")
        return "J1" if mpos(s) == 0 else "J2"
    if scheme == "T_F":
        _require(is_t21(s) and len(s) > 0,
                 f"not a nonempty drop-by-one-avoiding sequence: {tuple(s)!r}")
        return "F" if _in_F(s) else "Fc"
    if scheme == "ASC_R":
        _require(is_ascent(s), f"not an ascent sequence: {tuple(s)!r}")
        _require(len(s) > len(zero_positions(s)),
                 f"all-zero run has no nonzero entry: {tuple(s)!r}")
        return "R1" if zpos(s) == 0 else "R2"
    if scheme == "ASC_G":
        _require(is_ascent(s) and len(s) > 0,
                 f"not a nonempty ascent sequence: {tuple(s)!r}")
        return "G" if _in_G(s) else "Gc"
    valid = ", ".join(SUBSET_SCHEMES)
    raise UsageError(f"unknown scheme {scheme!r}; expected one of: {valid}")


# ---------------------------------------------------------------------------
# maps on the ascent-sequence side of the last maximal


def phi_P(s: Seq) -> Seq:
    """Drop the last maximal from a sequence whose top value is unrepeated.

    Bijection onto ascent sequences one shorter; lowers asc and max by one,
    keeps rep, zero and the entry after the last maximal.
    """
    _require(is_ascent(s) and classify(s, "ASC_P") == "P",
             f"top value repeats or not ascent: {tuple(s)!r}")
    q = _max_stat(s)
    out = [v - (1 if v > q - 1 else 0)
           for idx, v in enumerate(s) if idx != q - 1]
    return Seq(out)


def phi_P_inv(t: Seq) -> Seq:
    _require(is_ascent(t), f"not an ascent sequence: {tuple(t)!r}")
    p = _max_stat(t)
    out = list(t[:p]) + [p] + [v + (1 if v >= p else 0) for v in t[p:]]
    return Seq(out)


def xi_S4(s: Seq) -> MapResult:
    """Promote the entry after the maximal prefix to a new maximal.

    Defined on the block whose tail ascends off the prefix and still uses
    the prefix-top value later on.  Returns the promoted sequence together
    with the displaced entry; asc and rep are untouched.
    """
    _require(is_ascent(s) and classify(s, "ASC_S") == "S4",
             f"not in block S4: {tuple(s)!r}")
    p = _max_stat(s)
    i = s[p]
    out = list(s)
    out[p] = p
    return MapResult(Seq(out), i)


def xi_S4_inv(t: Seq, i: int) -> Seq:
    _require(is_ascent(t) and classify(t, "ASC_P") == "Pc",
             f"top value must repeat: {tuple(t)!r}")
    _require(0 <= i < ealm(t),
             f"index {i} not below entry-after-last-maximal of {tuple(t)!r}")
    m = _max_stat(t)
    out = list(t)
    out[m - 1] = i
    return Seq(out)


def s2_reduce(s: Seq) -> MapResult:
    """Detach the entry after the maximal prefix when the tail steps down.

    The removed value rides along as the side index; asc and max survive,
    rep drops by one.
    """
    _require(is_ascent(s) and classify(s, "ASC_S") == "S2",
             f"not in block S2: {tuple(s)!r}")
    p = _max_stat(s)
    i = s[p]
    out = [v for idx, v in enumerate(s) if idx != p]
    return MapResult(Seq(out), i)


def s2_insert(t: Seq, i: int) -> Seq:
    _require(is_ascent(t), f"not an ascent sequence: {tuple(t)!r}")
    p = _max_stat(t)
    _require(len(t) > p, f"identity run cannot absorb an entry: {tuple(t)!r}")
    _require(ealm(t) <= i <= p - 1,
             f"index {i} outside [ealm, max-1] for {tuple(t)!r}")
    out = list(t)
    out.insert(p, i)
    return Seq(out)


def s3_reduce(s: Seq) -> MapResult:
    """Remove the ascent entry after the maximal prefix, closing the gap.

    Values above the prefix top shift down by one; asc and rep both drop
    by one while max is preserved.
    """
    _require(is_ascent(s) and classify(s, "ASC_S") == "S3",
             f"not in block S3: {tuple(s)!r}")
    p = _max_stat(s)
    i = s[p]
    out = [v - (1 if v > p else 0)
           for idx, v in enumerate(s) if idx != p]
    return MapResult(Seq(out), i)


def s3_insert(t: Seq, i: int) -> Seq:
    _require(is_ascent(t) and len(t) > 0,
             f"not a nonempty ascent sequence: {tuple(t)!r}")
    _require(0 <= i < ealm(t),
             f"index {i} not below entry-after-last-maximal of {tuple(t)!r}")
    p = _max_stat(t)
    out = list(t[:p]) + [i] + [t[p]] + [v + (1 if v >= p else 0)
                                        for v in t[p + 1:]]
    return Seq(out)


def ealm_shift(s: Seq, direction: str) -> Seq:
    """Step the entry after the last maximal up or down by one.

    Works inside the union of blocks S1, S2, S3 and keeps rep and max; a
    renormalisation of values above the prefix top fires exactly when the
    moved entry collides with its right neighbour.
    """
    _require(is_ascent(s), f"not an ascent sequence: {tuple(s)!r}")
    label = classify(s, "ASC_S")
    _require(label in ("S1", "S2", "S3"), f"block S4 is out of range: {tuple(s)!r}")
    p = _max_stat(s)
    i = s[p]
    out = list(s)
    if direction == "up":
        _require(i < p - 1, f"entry already at top of range: {tuple(s)!r}")
        out[p] = i + 1
        if len(s) > p + 1 and s[p + 1] == i + 1:
            out = [v - 1 if v > p else v for v in out]
    elif direction == "down":
        _require(i >= 1, f"entry already zero: {tuple(s)!r}")
        out[p] = i - 1
        if len(s) > p + 1 and s[p + 1] == i:
            out = [v + 1 if v >= p else v for v in out]
    else:
        raise UsageError(f"direction must be 'up' or 'down', got {direction!r}")
    return Seq(out)


# ---------------------------------------------------------------------------
# maps around the paired maximal


def psi_F(s: Seq) -> Seq:
    """Erase the maximal after the paired one when nothing separates them.

    Bijection from block F onto sequences one shorter; max drops by one,
    rep and the paired-maximal ordinal survive.
    """
    _require(is_t21(s) and len(s) > 0 and _in_F(s),
             f"not in block F: {tuple(s)!r}")
    j = mpair(s)
    k1 = maximal_positions(s)[j + 1]
    if k1 == len(s):
        return Seq(s[:-1])
    assert s[k1] == k1
    out = [v - (1 if v >= k1 else 0)
           for idx, v in enumerate(s) if idx != k1]
    return Seq(out)


def psi_F_inv(t: Seq) -> Seq:
    _require(is_t21(t) and len(t) > 0,
             f"not a nonempty drop-by-one-avoiding sequence: {tuple(t)!r}")
    j = mpair(t)
    p = _max_stat(t)
    if p == j + 1:
        return Seq(t + (len(t),))
    k = maximal_positions(t)[j + 1]
    # After position k a value k-1 can only be a shifted-down k: keeping the
    # original k-1 there would have put it right after the removed maximal k,
    # forming the forbidden drop-by-one pattern.
    out = list(t[:k]) + [k] + [v + (1 if v >= k - 1 else 0) for v in t[k:]]
    return Seq(out)


def _check_J1(s) -> None:
    _require(is_t21(s), f"drop-by-one pattern present: {tuple(s)!r}")
    _require(len(s) > _max_stat(s), f"identity run excluded: {tuple(s)!r}")
    _require(mpos(s) == 0, f"critical maximal present: {tuple(s)!r}")


def mpair_shift(s: Seq, direction: str, _trace=None) -> Seq:
    """Move the paired-maximal ordinal one step up or down inside block J1.

    rep and max are preserved; the local surgery depends on whether the
    next maximal is flush against the pair (block F) or separated from it.
    """
    _check_J1(s)
    p = _max_stat(s)
    i = mpair(s)
    if direction == "up":
        _require(i < p - 1, f"paired maximal already next to top: {tuple(s)!r}")
        kp = maximal_positions(s)
        k_i, k_i1 = kp[i], kp[i + 1]
        if _in_F(s):
            label = "flush"
            out = [v for idx, v in enumerate(s) if idx != k_i1 - 1]
            out = [v + 1 if k_i - 1 <= v <= k_i1 - 2 else v for v in out]
            out.insert(out.index(k_i), k_i - 1)
        else:
            label = "separated"
            out = list(s)
            y = out[k_i1]
            popped = out.pop(k_i)
            assert popped == k_i - 1
            assert out[k_i1 - 2] == k_i1 - 1
            out[k_i1 - 1] = k_i1 - 1
            out.insert(k_i1 - 2, y)
    elif direction == "down":
        _require(i >= 1, f"paired maximal already first: {tuple(s)!r}")
        KB = maximal_positions(s)
        if KB[i] == KB[i - 1] + 1:
            label = "undo_flush"
            n0 = len(s)
            out = list(s)
            popped = out.pop(KB[i - 1] - 1)
            assert popped == KB[i - 1] - 1
            if i + 1 <= p - 1:
                X = KB[i + 1] - 2
                out = [v - 1 if KB[i - 1] <= v <= X else v for v in out]
                out.insert(KB[i + 1] - 2, X)
            else:
                X = n0 - 1
                out = [v - 1 if KB[i - 1] <= v <= X else v for v in out]
                out.append(X)
        else:
            label = "undo_separated"
            out = list(s)
            y = out[KB[i] - 2]
            del out[KB[i] - 2]
            assert out[KB[i] - 1] == KB[i] - 1
            out[KB[i] - 1] = y
            out.insert(KB[i - 1], KB[i - 1] - 1)
    else:
        raise UsageError(f"direction must be 'up' or 'down', got {direction!r}")
    if _trace is not None:
        _trace.append((label, Seq(out)))
    return Seq(out)


def _M0(t: list) -> list:
    # Detach the paired maximal and park its partner next to the previous
    # maximal; lowers the paired ordinal by one and frees a critical slot.
    j = mpair(tuple(t))
    kp = maximal_positions(t)
    out = list(t)
    popped = out.pop(kp[j] - 1)
    assert popped == kp[j] - 1
    out.insert(kp[j - 1], kp[j - 1] - 1)
    return out

def _M1(t: list, c: int) -> list:
    # Flush case: maximals c-1 and c are adjacent.  Dissolve maximal c and
    # re-pair ordinal c-1, renormalising the values in between.
    kp = maximal_positions(t)
    p = len(kp)
    x_c = kp[c] - 1
    out = list(t)
    popped = out.pop(kp[c] - 1)
    assert popped == x_c
    if c + 1 <= p - 1:
        x = kp[c + 1] - 1
        out = [v - 1 if x_c <= v < x else v for v in out]
        out.insert(out.index(x), x - 1)
    else:
        top = len(t) - 1
        out = [v - 1 if v >= x_c else v for v in out]
        out.append(top)
    return out

def _M2(t: list, c: int) -> list:
    # Separated case: swap the neighbours of maximal c, drop the leftmost
    # copy of its value and re-pair ordinal c-1.
    kp = maximal_positions(t)
    kc = kp[c]
    out = list(t)
    out[kc - 2], out[kc] = out[kc], out[kc - 2]
    out.remove(kc - 1)
    prev = kp[c - 1] - 1
    out.insert(out.index(prev) + 1, prev)
    return out

def _undo_M0(t: list) -> list:
    c = mpair(tuple(t))
    kp = maximal_positions(t)
    crit = [l for l in range(kp[c] + 2, len(t) + 1) if t[l - 1] == l - 2]
    assert crit, "no critical maximal to restore"
    lstar = crit[0]
    out = list(t)
    popped = out.pop(kp[c])
    assert popped == kp[c] - 1
    out.insert(lstar - 2, lstar - 2)
    return out

def _undo_M1(t: list) -> list:
    c1 = mpair(tuple(t))
    kp = maximal_positions(t)
    q = kp[c1 + 1]
    w = kp[c1] - 1
    out = list(t)
    if q == len(t):
        popped = out.pop()
        assert popped == len(t) - 1
        out = [v + 1 if idx >= kp[c1] and v >= w else v
               for idx, v in enumerate(out)]
    else:
        assert kp[c1 + 2] == q + 1
        popped = out.pop(q - 1)
        assert popped == q - 1
        out = [v + 1 if idx >= kp[c1] and w <= v <= q - 2 else v
               for idx, v in enumerate(out)]
    out.insert(kp[c1], w + 1)
    return out

def _undo_M2(t: list) -> list:
    c1 = mpair(tuple(t))
    kp = maximal_positions(t)
    K = kp[c1 + 1]
    out = list(t)
    popped = out.pop(kp[c1])
    assert popped == kp[c1] - 1
    out.insert(K - 2, K - 1)
    out[K - 2], out[K] = out[K], out[K - 2]
    return out

def vartheta(s: Seq, i: int, _trace=None) -> Seq:
    """Walk the paired maximal down to ordinal ``i``, creating a critical slot.

    Defined outside block F for any ``i`` below the current paired ordinal;
    the result lands in block J2 with its paired ordinal equal to ``i``.
    rep is preserved and max drops by one.
    """
    _require(is_t21(s) and len(s) > 0,
             f"not a nonempty drop-by-one-avoiding sequence: {tuple(s)!r}")
    _require(not _in_F(s), f"block F is out of range: {tuple(s)!r}")
    j = mpair(s)
    _require(0 <= i < j, f"target ordinal {i} not below paired ordinal {j}")
    cur = _M0(list(s))
    if _trace is not None:
        _trace.append(("M0", Seq(cur)))
    c = j - 1
    while c > i:
        kp = maximal_positions(cur)
        if kp[c - 1] + 1 == kp[c]:
            cur = _M1(cur, c)
            label = "M1"
        else:
            cur = _M2(cur, c)
            label = "M2"
        if _trace is not None:
            _trace.append((label, Seq(cur)))
        c -= 1
    return Seq(cur)

def vartheta_inv(s: Seq, _trace=None) -> MapResult:
    """Rewind :func:`vartheta`; returns the source and the target ordinal."""
    _require(is_t21(s) and len(s) > 0,
             f"not a nonempty drop-by-one-avoiding sequence: {tuple(s)!r}")
    _require(len(s) > _max_stat(s), f"identity run excluded: {tuple(s)!r}")
    _require(mpos(s) != 0, f"no critical maximal: {tuple(s)!r}")
    i = mpair(s)
    cur = list(s)
    for _ in range(len(s) + 1):
        if _in_F(cur):
            cur = _undo_M1(cur)
            label = "undo_M1"
        elif mpos(tuple(cur)) == mpair(tuple(cur)) + 1:
            cur = _undo_M0(cur)
            if _trace is not None:
                _trace.append(("undo_M0", Seq(cur)))
            return MapResult(Seq(cur), i)
        else:
            cur = _undo_M2(cur)
            label = "undo_M2"
        if _trace is not None:
            _trace.append((label, Seq(cur)))
    raise AssertionError(f"paired-maximal rewind did not terminate: {tuple(s)!r}")


# ---------------------------------------------------------------------------
# maps around the paired zero


def phi_G(s: Seq) -> Seq:
    """Erase the zero after the paired one when nothing separates them.

    Bijection from block G onto ascent sequences one shorter; zero drops by
    one, asc and the paired-zero ordinal survive.
    """
    _require(is_ascent(s) and len(s) > 0 and _in_G(s),
             f"not in block G: {tuple(s)!r}")
    j = zpair(s)
    zp = zero_positions(s)
    out = list(s)
    popped = out.pop(zp[j + 1] - 1)
    assert popped == 0
    return Seq(out)

def phi_G_inv(t: Seq) -> Seq:
    _require(is_ascent(t) and len(t) > 0,
             f"not a nonempty ascent sequence: {tuple(t)!r}")
    j = zpair(t)
    zp = zero_positions(t)
    out = list(t)
    if len(zp) == j + 1:
        out.append(0)
    else:
        out.insert(zp[j + 1] - 1, 0)
    return Seq(out)

def _check_R1(s) -> None:
    _require(is_ascent(s), f"not an ascent sequence: {tuple(s)!r}")
    _require(len(s) > len(zero_positions(s)), f"all-zero run excluded: {tuple(s)!r}")
    _require(zpos(s) == 0, f"critical one present: {tuple(s)!r}")

def zpair_shift(s: Seq, direction: str) -> Seq:
    """Move the paired-zero ordinal one step up or down inside block R1.

    asc and zero are preserved; the trailing 1 travels from the old paired
    zero to the new one, with the entries in between renormalised.
    """
    _check_R1(s)
    p = len(zero_positions(s))
    m = zpair(s)
    zp = zero_positions(s)
    out = list(s)
    if direction == "up":
        _require(m < p - 1, f"paired zero already next to top: {tuple(s)!r}")
        ki, ki1 = zp[m], zp[m + 1]
        assert s[ki] == 1
        del out[ki]
        for idx in range(ki, ki1 - 2):
            out[idx] -= 1
        out.insert(ki1 - 1, 1)
        return Seq(out)
    if direction == "down":
        _require(m >= 1, f"paired zero already first: {tuple(s)!r}")
        km = zp[m]
        assert s[km] == 1
        del out[km]
        for idx in range(zp[m - 1], km - 1):
            out[idx] += 1
        out.insert(zp[m - 1], 1)
        return Seq(out)
    raise UsageError(f"direction must be 'up' or 'down', got {direction!r}")

def _Z0(t: list) -> list:
    j = zpair(tuple(t))
    zp = zero_positions(t)
    out = list(t)
    for idx in range(zp[j - 1], zp[j] - 1):
        out[idx] += 1
    popped = out.pop(zp[j] - 1)
    assert popped == 0
    out.insert(zp[j - 1], 1)
    return out

def _Z1(t: list, c: int) -> list:
    # Flush case: zeros c-1 and c are adjacent.  Move the c-th zero just
    # past the next zero (or to the end when there is none).
    zp = zero_positions(t)
    out = list(t)
    popped = out.pop(zp[c] - 1)
    assert popped == 0
    if c + 1 <= len(zp) - 1:
        out.insert(zp[c + 1] - 1, 0)
    else:
        out.append(0)
    return out

def _Z2(t: list, c: int) -> list:
    # Separated case: lift the entries between zeros c-1 and c, then either
    # move the trailing 1 or the whole zero-one block next to zero c-1.
    zp = zero_positions(t)
    out = list(t)
    for idx in range(zp[c - 1], zp[c] - 1):
        out[idx] += 1
    after = t[zp[c] + 1] if zp[c] + 1 < len(t) else None
    if after is not None and after >= 2:
        popped = out.pop(zp[c])
        assert popped == 1
        out.insert(zp[c - 1], 1)
    else:
        block = out[zp[c] - 1:zp[c] + 1]
        assert block == [0, 1]
        del out[zp[c] - 1:zp[c] + 1]
        out[zp[c - 1] - 1:zp[c - 1] - 1] = [0, 1]
    return out

def theta_R(s: Seq, i: int, _trace=None) -> Seq:
    """Walk the paired zero down to ordinal ``i``, creating a critical 1.

    Defined outside block G for any ``i`` below the current paired ordinal;
    the result lands in block R2 with its paired ordinal equal to ``i``.
    asc is preserved and zero drops by one.
    """
    _require(is_ascent(s) and len(s) > 0,
             f"not a nonempty ascent sequence: {tuple(s)!r}")
    _require(not _in_G(s), f"block G is out of range: {tuple(s)!r}")
    j = zpair(s)
    _require(0 <= i < j, f"target ordinal {i} not below paired ordinal {j}")
    cur = _Z0(list(s))
    if _trace is not None:
        _trace.append(("Z0", Seq(cur)))
    c = j - 1
    while c > i:
        zp = zero_positions(cur)
        if zp[c - 1] + 1 == zp[c]:
            cur = _Z1(cur, c)
            label = "Z1"
        else:
            cur = _Z2(cur, c)
            label = "Z2"
        if _trace is not None:
            _trace.append((label, Seq(cur)))
        c -= 1
    return Seq(cur)

def _undo_Z0(t: list) -> list:
    c = zpair(tuple(t))
    zp = zero_positions(t)
    crit = [l for l in range(zp[c] + 2, len(t) + 1) if t[l - 1] == 1]
    assert crit, "no critical one to restore"
    lstar = crit[0]
    out = list(t)
    popped = out.pop(zp[c])
    assert popped == 1
    for idx in range(zp[c], lstar - 2):
        out[idx] -= 1
    out.insert(lstar - 2, 0)
    return out

def _undo_Z1(t: list) -> list:
    c = zpair(tuple(t))
    zp = zero_positions(t)
    out = list(t)
    if zp[c + 1] == len(t):
        popped = out.pop()
        assert popped == 0
    else:
        assert zp[c + 2] == zp[c + 1] + 1
        popped = out.pop(zp[c + 2] - 1)
        assert popped == 0
    out.insert(zp[c], 0)
    return out

def _undo_Z2(t: list) -> list:
    c = zpair(tuple(t))
    zp = zero_positions(t)
    out = list(t)
    after = t[zp[c] + 1] if zp[c] + 1 < len(t) else None
    if after is not None and after >= 2:
        popped = out.pop(zp[c])
        assert popped == 1
        for idx in range(zp[c], zp[c + 1] - 2):
            out[idx] -= 1
        out.insert(zp[c + 1] - 1, 1)
    elif after == 0:
        block = out[zp[c] - 1:zp[c] + 1]
        assert block == [0, 1]
        del out[zp[c] - 1:zp[c] + 1]
        q = len(out) + 1
        for idx in range(zp[c], len(out)):
            if out[idx] <= 1:
                q = idx + 1
                break
        for idx in range(zp[c], q - 1):
            out[idx] -= 1
        out[q - 1:q - 1] = [0, 1]
    else:
        raise AssertionError(f"malformed paired-zero neighbourhood: {t!r}")
    return out

def theta_R_inv(s: Seq, _trace=None) -> MapResult:
    """Rewind :func:`theta_R`; returns the source and the target ordinal."""
    _require(is_ascent(s) and len(s) > 0,
             f"not a nonempty ascent sequence: {tuple(s)!r}")
    _require(len(s) > len(zero_positions(s)), f"all-zero run excluded: {tuple(s)!r}")
    _require(zpos(s) != 0, f"no critical one: {tuple(s)!r}")
    i = zpair(s)
    cur = list(s)
    for _ in range(len(s) + 1):
        if _in_G(cur):
            cur = _undo_Z1(cur)
            label = "undo_Z1"
        elif zpos(tuple(cur)) == zpair(tuple(cur)) + 1:
            cur = _undo_Z0(cur)
            if _trace is not None:
                _trace.append(("undo_Z0", Seq(cur)))
            return MapResult(Seq(cur), i)
        else:
            cur = _undo_Z2(cur)
            label = "undo_Z2"
        if _trace is not None:
            _trace.append((label, Seq(cur)))
    raise AssertionError(f"paired-zero rewind did not terminate: {tuple(s)!r}")
