"""Statistics on sequences and permutations.

Scalar statistics on an inversion sequence s of length n:

  asc    ascents, positions i < n with s_i < s_{i+1}
  nasc   non-ascents, n - 1 - asc
  rep    repeated entries, n minus the number of distinct values
  zero   entries equal to 0
  max    maximal entries, positions with s_i = i - 1
  rmin   right-to-left minima (the last position counts vacuously)

Each of asc/zero/max/rmin/nasc also has a set-valued form listing the
1-based positions, plus DIST, the positions holding the last occurrence of
each distinct positive value.

Marker statistics locate structure near the maximal entries or the zeros.
Maximals and zeros are indexed from 0, left to right; every other reported
position is 1-based.

  ealm   the entry immediately after the last maximal (ascent sequences;
         0 for the strictly increasing sequence, which has no such entry)
  mpair  the largest maximal index whose entry is repeated immediately
         after it (drop-by-one-avoiding sequences; 0 for the strictly
         increasing sequence)
  zpair  the largest zero index whose entry is followed immediately by a 1
         (ascent sequences; 0 for the all-zero sequence)
  mpos   locates the leftmost position l >= (mpair position + 2) holding
         l - 2: one more than the largest maximal index before it, or 0 if
         no such position exists
  zpos   the same with zeros and entries equal to 1

mpair (resp. zpair) is expected to exist for every non-increasing
(resp. not-all-zero) input; if that ever fails the statistic raises
DomainError rather than inventing a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, UsageError
from .seqcore import Perm, Seq, is_ascent, is_inversion, is_t21


@dataclass(frozen=True)
class ScalarStats:
    asc: int
    rep: int
    zero: int
    max: int
    rmin: int
    nasc: int

    def as_dict(self) -> dict:
        return {"asc": self.asc, "rep": self.rep, "zero": self.zero,
                "max": self.max, "rmin": self.rmin, "nasc": self.nasc}


@dataclass(frozen=True)
class SetStats:
    ASC: tuple
    DIST: tuple
    ZERO: tuple
    MAX: tuple
    RMIN: tuple
    NASC: tuple

    def as_dict(self) -> dict:
        return {"ASC": list(self.ASC), "DIST": list(self.DIST),
                "ZERO": list(self.ZERO), "MAX": list(self.MAX),
                "RMIN": list(self.RMIN), "NASC": list(self.NASC)}


@dataclass(frozen=True)
class PermStats:
    DES: tuple
    IDES: tuple
    LMAX: tuple
    LMIN: tuple
    RMAX: tuple
    des: int
    ides: int
    iasc: int

    def as_dict(self) -> dict:
        return {"DES": list(self.DES), "IDES": list(self.IDES),
                "LMAX": list(self.LMAX), "LMIN": list(self.LMIN),
                "RMAX": list(self.RMAX), "des": self.des,
                "ides": self.ides, "iasc": self.iasc}


class MarkerKind(Enum):
    EALM = "ealm"
    MPAIR = "mpair"
    ZPAIR = "zpair"
    MPOS = "mpos"
    ZPOS = "zpos"

    @classmethod
    def from_name(cls, name: str) -> "MarkerKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise UsageError(f"unknown marker {name!r}; expected one of: {valid}")


def _require_inversion(s) -> None:
    if not is_inversion(s):
        raise DomainError(f"not an inversion sequence: {tuple(s)!r}")


def ascent_positions(s) -> tuple:
    return tuple(i for i in range(1, len(s)) if s[i - 1] < s[i])


def maximal_positions(s) -> tuple:
    return tuple(i for i in range(1, len(s) + 1) if s[i - 1] == i - 1)


def zero_positions(s) -> tuple:
    return tuple(i for i in range(1, len(s) + 1) if s[i - 1] == 0)


def scalar_stats(s: Seq) -> ScalarStats:
    _require_inversion(s)
    n = len(s)
    asc = len(ascent_positions(s))
    rep = n - len(set(s))
    zero = sum(1 for v in s if v == 0)
    mx = len(maximal_positions(s))
    rmin = 0
    low = None
    for v in reversed(s):  # strict minima scanned from the right
        if low is None or v < low:
            rmin += 1
            low = v
    return ScalarStats(asc=asc, rep=rep, zero=zero, max=mx, rmin=rmin, nasc=n - 1 - asc)


def set_stats(s: Seq) -> SetStats:
    _require_inversion(s)
    n = len(s)
    asc = ascent_positions(s)
    dist = tuple(i for i in range(2, n + 1)
                 if s[i - 1] != 0 and s[i - 1] not in s[i:])
    rmin = []
    low = None
    for i in range(n, 0, -1):
        if low is None or s[i - 1] < low:
            rmin.append(i)
            low = s[i - 1]
    nasc = tuple(i for i in range(1, n) if s[i - 1] >= s[i])
    return SetStats(ASC=asc, DIST=dist, ZERO=zero_positions(s),
                    MAX=maximal_positions(s), RMIN=tuple(reversed(rmin)), NASC=nasc)


def perm_stats(p: Perm) -> PermStats:
    n = len(p)
    pos = [0] * (n + 2)
    for i, v in enumerate(p):
        pos[v] = i + 1
    des = tuple(i for i in range(1, n) if p[i - 1] > p[i])
    ides = tuple(i for i in range(2, n + 1) if p[i - 1] < n and pos[p[i - 1] + 1] < i)
    lmax = tuple(i for i in range(1, n + 1) if all(p[i - 1] > p[j] for j in range(i - 1)))
    lmin = tuple(i for i in range(1, n + 1) if all(p[i - 1] < p[j] for j in range(i - 1)))
    rmax = tuple(i for i in range(1, n + 1) if all(p[i - 1] > p[j] for j in range(i, n)))
    return PermStats(DES=des, IDES=ides, LMAX=lmax, LMIN=lmin, RMAX=rmax,
                     des=len(des), ides=len(ides), iasc=n - 1 - len(ides))


def _is_identity_run(s) -> bool:
    return all(v == i for i, v in enumerate(s))


def ealm(s: Seq) -> int:
    if not is_ascent(s):
        raise DomainError(f"ealm needs an ascent sequence, got {tuple(s)!r}")
    p = len(maximal_positions(s))
    if p == len(s):
        return 0
    return s[p]  # entry at 1-based position p + 1


def mpair(s: Seq) -> int:
    if not is_t21(s):
        raise DomainError(f"mpair needs a drop-by-one-avoiding sequence, got {tuple(s)!r}")
    best = None
    for idx, k in enumerate(maximal_positions(s)):
        if k < len(s) and s[k] == s[k - 1]:
            best = idx
    if best is None:
        if _is_identity_run(s):
            return 0
        raise DomainError(f"no paired maximal in {tuple(s)!r}")
    return best


def zpair(s: Seq) -> int:
    if not is_ascent(s):
        raise DomainError(f"zpair needs an ascent sequence, got {tuple(s)!r}")
    best = None
    for idx, k in enumerate(zero_positions(s)):
        if k < len(s) and s[k] == 1:
            best = idx
    if best is None:
        if all(v == 0 for v in s):
            return 0
        raise DomainError(f"no zero followed by 1 in {tuple(s)!r}")
    return best


def _pos_marker(s, anchors: tuple, pair_index: int, is_critical) -> int:
    start = anchors[pair_index] + 2
    crit = [l for l in range(start, len(s) + 1) if is_critical(l, s[l - 1])]
    if not crit:
        return 0
    leftmost = crit[0]
    m = max(idx for idx, k in enumerate(anchors) if k < leftmost)
    return m + 1


def mpos(s: Seq) -> int:
    j = mpair(s)
    return _pos_marker(s, maximal_positions(s), j, lambda l, v: v == l - 2)


def zpos(s: Seq) -> int:
    j = zpair(s)
    return _pos_marker(s, zero_positions(s), j, lambda l, v: v == 1)


_MARKER_FUNCS = {
    MarkerKind.EALM: ealm,
    MarkerKind.MPAIR: mpair,
    MarkerKind.ZPAIR: zpair,
    MarkerKind.MPOS: mpos,
    MarkerKind.ZPOS: zpos,
}


def marker(s: Seq, kind) -> int:
    if isinstance(kind, str):
        kind = MarkerKind.from_name(kind)
    return _MARKER_FUNCS[kind](s)
