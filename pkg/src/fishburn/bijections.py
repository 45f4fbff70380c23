"""Codes and bijections between permutations and sequence classes.

Contents:

  lehmer_code     permutation -> inversion sequence, counting larger
                  entries to the left of each position
  bv_code         the labeled-interval permutation code: values are placed
                  one at a time into a shrinking system of intervals, and
                  each output entry is the label of the interval hit
  bv_decode       inverse of bv_code by depth-first search over candidate
                  values (no closed-form inverse is attempted)
  beta/beta_inv   subtraction/addition passes between the class B and
                  ascent sequences, driven by the non-ascent positions
  gamma/gamma_inv the same shape of passes between class C and ascent
                  sequences, with threshold i instead of i - 1
  psi/psi_inv     beta after bv_code, restricted to one bivincular
                  avoidance class
  phi/phi_inv     gamma after bv_code, restricted to the other class
  upsilon         the self-map of ascent sequences obtained by pulling a
                  sequence back through psi, flipping the permutation by
                  inverse-then-complement, and pushing through phi; it
                  swaps asc with rep and sends (zero, max) to (rmin, zero)

A slice is a tuple of (lo, hi, label) triples holding disjoint intervals
in decreasing value order with strictly increasing labels; the intervals
cover exactly the values not yet placed, plus 0.
"""

from __future__ import annotations

from .errors import DomainError
from .seqcore import (Perm, Seq, contains_bivincular_A, contains_bivincular_B,
                      is_ascent, is_b_class, is_c_class, is_inversion,
                      perm_transform)


def lehmer_code(p: Perm) -> Seq:
    """Count, for each entry, the larger entries before it."""
    out = []
    for i, v in enumerate(p):
        out.append(sum(1 for j in range(i) if p[j] > v))
    return Seq._wrap(tuple(out))


# --- the labeled-interval code -------------------------------------------

def _slice_step(slc, val):
    """Remove val from the slice it lies in and relabel.

    The four cases split on whether val is interior, the top, the bottom,
    or the whole of its interval.  Whenever the interval list to the right
    of the hit is reindexed, the label list is treated as extended by one
    more value (last label + 1), so the final interval's label always
    increments.
    """
    v = None
    for idx, (lo, hi, _) in enumerate(slc):
        if lo <= val <= hi:
            v = idx
            break
    if v is None:
        raise AssertionError(f"value {val} lies in no interval of {slc}")
    lo, hi, lab = slc[v]
    pre = slc[:v]
    tail = slc[v + 1:]
    last_label = slc[-1][2]

    if lo < val < hi:
        shifted = _zip_shift(((lo, val - 1),) + tuple((a, b) for a, b, _ in tail),
                             tuple(l for _, _, l in tail) + (last_label + 1,))
        return pre + ((val + 1, hi, lab),) + shifted
    if lo < val == hi:
        shifted = _zip_shift(((lo, val - 1),) + tuple((a, b) for a, b, _ in tail),
                             tuple(l for _, _, l in tail) + (last_label + 1,))
        return pre + shifted
    # val == lo: the last interval always contains 0, which is never
    # placed, so the hit interval cannot be the last one here.
    if v == len(slc) - 1:
        raise AssertionError(f"bottom hit on the final interval of {slc}")
    if val == lo < hi:
        kept = tail[:-1] + ((tail[-1][0], tail[-1][1], tail[-1][2] + 1),)
        return pre + ((val + 1, hi, lab),) + kept
    kept = tail[:-1] + ((tail[-1][0], tail[-1][1], tail[-1][2] + 1),)
    return pre + kept


def _zip_shift(intervals, labels):
    return tuple((a, b, l) for (a, b), l in zip(intervals, labels))


def bv_slices(p: Perm) -> list:
    """All n slices of the permutation, starting from ([0, n], 0)."""
    n = len(p)
    slc = ((0, n, 0),)
    out = [slc]
    for i in range(n - 1):
        slc = _slice_step(slc, p[i])
        out.append(slc)
    return out


def bv_code(p: Perm) -> Seq:
    n = len(p)
    slc = ((0, n, 0),)
    out = []
    for i in range(n):
        lab = None
        for lo, hi, l in slc:
            if lo <= p[i] <= hi:
                lab = l
                break
        if lab is None:
            raise AssertionError(f"value {p[i]} lies in no interval of {slc}")
        out.append(lab)
        if i < n - 1:
            slc = _slice_step(slc, p[i])
    return Seq._wrap(tuple(out))


def bv_decode(s: Seq) -> Perm:
    """Unique permutation whose code is s, found by pruned search."""
    if not is_inversion(s):
        raise DomainError(f"not an inversion sequence: {tuple(s)!r}")
    n = len(s)

    def rec(i, slc):
        hit = None
        for lo, hi, l in slc:
            if l == s[i]:
                hit = (lo, hi)
                break
        if hit is None:
            return None
        lo, hi = hit
        if i == n - 1:
            # the intervals now cover {0} and the single unplaced value
            val = hi if hi >= 1 else None
            return (val,) if val is not None else None
        for val in range(hi, max(lo, 1) - 1, -1):
            tail = rec(i + 1, _slice_step(slc, val))
            if tail is not None:
                return (val,) + tail
        return None

    res = rec(0, ((0, n, 0),)) if n else ()
    if res is None:
        raise AssertionError(f"decode failed for {tuple(s)!r}")
    return Perm._wrap(res)


# --- subtraction/addition passes ------------------------------------------

def _nasc_positions(s):
    return [i for i in range(1, len(s)) if s[i - 1] >= s[i]]


def beta(b: Seq, _trace=None) -> Seq:
    if not is_b_class(b):
        raise DomainError(f"not in the subtraction domain: {tuple(b)!r}")
    s = list(b)
    n = len(s)
    for i in reversed(_nasc_positions(b)):
        if s[i - 1] < i - 1:
            for j in range(i, n):
                if s[j] > i - 1:
                    s[j] -= 1
        if _trace is not None:
            _trace.append((i, Seq._wrap(tuple(s))))
    return Seq._wrap(tuple(s))


def beta_inv(s: Seq, _trace=None) -> Seq:
    if not is_ascent(s):
        raise DomainError(f"not an ascent sequence: {tuple(s)!r}")
    b = list(s)
    n = len(b)
    for i in _nasc_positions(s):
        if b[i - 1] < i - 1:
            for j in range(i, n):
                if b[j] >= i - 1:
                    b[j] += 1
        if _trace is not None:
            _trace.append((i, Seq._wrap(tuple(b))))
    return Seq._wrap(tuple(b))


def gamma(c: Seq, _trace=None) -> Seq:
    if not is_c_class(c):
        raise DomainError(f"not in the subtraction domain: {tuple(c)!r}")
    s = list(c)
    n = len(s)
    for i in reversed(_nasc_positions(c)):
        for j in range(i, n):
            if s[j] > i:
                s[j] -= 1
        if _trace is not None:
            _trace.append((i, Seq._wrap(tuple(s))))
    return Seq._wrap(tuple(s))


def gamma_inv(s: Seq, _trace=None) -> Seq:
    if not is_ascent(s):
        raise DomainError(f"not an ascent sequence: {tuple(s)!r}")
    c = list(s)
    n = len(c)
    for i in _nasc_positions(s):
        for j in range(i, n):
            if c[j] >= i:
                c[j] += 1
        if _trace is not None:
            _trace.append((i, Seq._wrap(tuple(c))))
    return Seq._wrap(tuple(c))


# --- composed bijections ---------------------------------------------------

def psi(p: Perm) -> Seq:
    if contains_bivincular_A(p):
        raise DomainError(f"{p.to_text()} contains the forbidden pattern")
    b = bv_code(p)
    if not is_b_class(b):
        raise AssertionError(f"code of {p.to_text()} left the expected class: {tuple(b)!r}")
    return beta(b)


def psi_inv(s: Seq) -> Perm:
    b = beta_inv(s)
    p = bv_decode(b)
    if contains_bivincular_A(p):
        raise AssertionError(f"decoded permutation {p.to_text()} contains the forbidden pattern")
    return p


def phi(p: Perm) -> Seq:
    if contains_bivincular_B(p):
        raise DomainError(f"{p.to_text()} contains the forbidden pattern")
    c = bv_code(p)
    if not is_c_class(c):
        raise AssertionError(f"code of {p.to_text()} left the expected class: {tuple(c)!r}")
    return gamma(c)


def phi_inv(s: Seq) -> Perm:
    c = gamma_inv(s)
    p = bv_decode(c)
    if contains_bivincular_B(p):
        raise AssertionError(f"decoded permutation {p.to_text()} contains the forbidden pattern")
    return p


def upsilon(s: Seq) -> Seq:
    """Self-map of ascent sequences swapping asc with rep and
    sending (zero, max) to (rmin, zero)."""
    p = psi_inv(s)
    return phi(perm_transform(p, "inverse_then_complement"))
