"""Distribution tables with disk caching, and the named theorem-check suite.

Every check is deterministic given its parameters and seed, iterates lengths
in ascending order and objects in lexicographic order, and stops at the first
failure, so a fail report always carries a minimal counterexample.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bijections, decomp, stats
from .errors import ResourceLimitError, UsageError
from .genfun import (DistTable, SpecPoint, admissible_for_case_identity,
                     admissible_for_length_series, check_case_identity,
                     eval_gf, fishburn_series, random_point, series_G,
                     series_asczero, series_zeromax)
from .seqcore import ClassId, enumerate_class, is_member
from .stats import perm_stats, scalar_stats, set_stats

CACHE_ENV = "FISHBURN_CACHE"

# Enumeration ceilings: the Fishburn-counted classes stay polynomially tame
# through length 12, while inversion sequences and permutations grow like n!.
FISHBURN_CAP = 12
FACTORIAL_CAP = 9

_FACTORIAL_CLASSES = (ClassId.INV, ClassId.PERM_ALL,
                      ClassId.PERM_AVOID_A, ClassId.PERM_AVOID_B)

_SEQ_SCALARS = ("asc", "rep", "zero", "max", "rmin", "nasc")
_SEQ_MARKERS = {
    "ealm": (ClassId.ASC, stats.ealm),
    "zpair": (ClassId.ASC, stats.zpair),
    "zpos": (ClassId.ASC, stats.zpos),
    "mpair": (ClassId.T21, stats.mpair),
    "mpos": (ClassId.T21, stats.mpos),
}
_PERM_SCALARS = ("des", "ides", "iasc", "lmax", "lmin", "rmax")


def cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "fishburn"


def _code_version() -> str:
    """Short hash of the enumeration and statistics sources.

    Any edit to those modules invalidates every cached table.
    """
    from . import seqcore as _seqcore
    digest = hashlib.sha256()
    for module in (_seqcore, stats):
        digest.update(Path(module.__file__).read_bytes())
    return digest.hexdigest()[:12]


def _enum_cap(class_id: ClassId) -> int:
    return FACTORIAL_CAP if class_id in _FACTORIAL_CLASSES else FISHBURN_CAP


def _check_length(class_id: ClassId, n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise UsageError(f"length must be a positive integer, got {n!r}")
    cap = _enum_cap(class_id)
    if n > cap:
        raise ResourceLimitError(
            f"length {n} exceeds the cap of {cap} for {class_id.name}")
    return n


def _value_fn(class_id: ClassId, names: tuple):
    """Build obj -> tuple of statistic values, or refuse the combination."""
    if class_id in _FACTORIAL_CLASSES[1:]:  # permutation classes
        for name in names:
            if name not in _PERM_SCALARS:
                raise UsageError(
                    f"statistic {name!r} does not apply to {class_id.name}; "
                    f"usable: {', '.join(_PERM_SCALARS)}")

        def values(p):
            ps = perm_stats(p)
            lens = {"lmax": len(ps.LMAX), "lmin": len(ps.LMIN),
                    "rmax": len(ps.RMAX)}
            return tuple(lens[n] if n in lens else getattr(ps, n)
                         for n in names)
        return values

    getters = []
    for name in names:
        if name in _SEQ_SCALARS:
            getters.append(name)
        elif name in _SEQ_MARKERS:
            home, fn = _SEQ_MARKERS[name]
            if class_id is not home:
                raise UsageError(
                    f"statistic {name!r} applies to {home.name}, "
                    f"not {class_id.name}")
            getters.append(fn)
        else:
            raise UsageError(
                f"unknown statistic {name!r}; usable: "
                f"{', '.join(_SEQ_SCALARS + tuple(_SEQ_MARKERS))}")

    def values(s):
        sc = scalar_stats(s)
        return tuple(getattr(sc, g) if isinstance(g, str) else g(s)
                     for g in getters)
    return values


def _cache_path(class_id: ClassId, n: int, names: tuple) -> Path:
    tag = "-".join(names)
    return cache_dir() / f"{class_id.name}_n{n}_{tag}_{_code_version()}.json"


def _store_table(path: Path, table: DistTable) -> None:
    payload = {
        "class": table.class_id.name,
        "n": table.n,
        "stats": list(table.stats),
        "version": _code_version(),
        "counts": [[list(key), count]
                   for key, count in sorted(table.counts.items())],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    # write-then-rename so concurrent readers never see a partial file
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(payload, handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_table(path: Path, class_id: ClassId, n: int, names: tuple):
    try:
        with open(path) as handle:
            payload = json.load(handle)
        if (payload["class"] != class_id.name or payload["n"] != n
                or tuple(payload["stats"]) != names
                or payload["version"] != _code_version()):
            return None
        counts = {tuple(key): count for key, count in payload["counts"]}
    except (OSError, ValueError, KeyError, TypeError):
        return None
    return DistTable(class_id, n, names, counts)


def _compute_table(class_id: ClassId, n: int, names: tuple) -> DistTable:
    values = _value_fn(class_id, names)
    counts = Counter()
    for obj in enumerate_class(class_id, n):
        counts[values(obj)] += 1
    return DistTable(class_id, n, names, dict(counts))


def dist_table(class_id: ClassId, n: int, stat_names, use_cache: bool = True) -> DistTable:
    """Exact joint distribution of the named statistics over a class.

    Results are cached on disk under one JSON file per (class, n, stats,
    code-version) key; set the FISHBURN_CACHE environment variable to move
    the cache directory.
    """
    if not isinstance(class_id, ClassId):
        raise UsageError(f"expected a ClassId, got {class_id!r}")
    n = _check_length(class_id, n)
    names = tuple(stat_names)
    if not names:
        raise UsageError("at least one statistic name is required")
    _value_fn(class_id, names)  # validate before touching the cache
    path = _cache_path(class_id, n, names)
    if use_cache:
        cached = _load_table(path, class_id, n, names)
        if cached is not None:
            return cached
    table = _compute_table(class_id, n, names)
    if use_cache:
        _store_table(path, table)
    return table


@dataclass(frozen=True)
class CheckReport:
    name: str
    parameters: dict
    verdict: str                 # "pass" or "fail"
    counterexample: dict | None
    seconds: float

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        return {"name": self.name, "parameters": self.parameters,
                "verdict": self.verdict,
                "counterexample": self.counterexample,
                "seconds": round(self.seconds, 3)}


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, SpecPoint):
        return value.as_dict()
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, ClassId):
        return value.name
    return value


def _table_diff(left: dict, right: dict):
    """Lexicographically first key whose counts differ, or None."""
    for key in sorted(set(left) | set(right)):
        if left.get(key, 0) != right.get(key, 0):
            return key, left.get(key, 0), right.get(key, 0)
    return None


# ---------------------------------------------------------------------------
# the named checks; each returns None on pass or a counterexample dict


def _chk_conjecture1(max_n):
    for n in range(1, max_n + 1):
        tbl = dist_table(ClassId.ASC, n, ("asc", "rep", "zero", "max")).counts
        for key in sorted(tbl):
            a, r, z, m = key
            mirror = (r, a, m, z)
            if tbl.get(mirror, 0) != tbl[key]:
                return {"n": n, "tuple": key, "count": tbl[key],
                        "mirror": mirror, "mirror_count": tbl.get(mirror, 0)}
    return None


def _chk_upsilon_quadruple(max_n):
    for n in range(1, max_n + 1):
        seen = set()
        count = 0
        for s in enumerate_class(ClassId.ASC, n):
            count += 1
            out = bijections.upsilon(s)
            if not is_member(ClassId.ASC, out):
                return {"n": n, "input": s, "output": out,
                        "detail": "image is not an ascent sequence"}
            a, b = scalar_stats(s), scalar_stats(out)
            want = (a.asc, a.rep, a.zero, a.max)
            got = (b.rep, b.asc, b.rmin, b.zero)
            if want != got:
                return {"n": n, "input": s, "output": out,
                        "expected": want, "actual": got}
            if out in seen:
                return {"n": n, "output": out, "detail": "image collision"}
            seen.add(out)
        if len(seen) != count:
            return {"n": n, "detail": "image does not cover the class"}
    return None


def _chk_psi_setvalued(max_n):
    for n in range(1, max_n + 1):
        targets = set(enumerate_class(ClassId.ASC, n))
        seen = set()
        for p in enumerate_class(ClassId.PERM_AVOID_A, n):
            s = bijections.psi(p)
            if s not in targets:
                return {"n": n, "input": p, "output": s,
                        "detail": "image is not an ascent sequence"}
            ps, ss = perm_stats(p), set_stats(s)
            want = (ps.DES, ps.IDES, ps.LMIN, ps.LMAX, ps.RMAX)
            got = (ss.ASC, ss.DIST, ss.MAX, ss.ZERO, ss.RMIN)
            if want != got:
                return {"n": n, "input": p, "output": s,
                        "expected": want, "actual": got}
            if s in seen:
                return {"n": n, "output": s, "detail": "image collision"}
            seen.add(s)
        if seen != targets:
            return {"n": n, "detail": f"image covers {len(seen)} of "
                                      f"{len(targets)} ascent sequences"}
    return None


def _chk_phi_setvalued(max_n):
    for n in range(1, max_n + 1):
        targets = set(enumerate_class(ClassId.ASC, n))
        seen = set()
        for p in enumerate_class(ClassId.PERM_AVOID_B, n):
            s = bijections.phi(p)
            if s not in targets:
                return {"n": n, "input": p, "output": s,
                        "detail": "image is not an ascent sequence"}
            ps, ss = perm_stats(p), set_stats(s)
            want = (ps.DES, ps.IDES, ps.LMAX, ps.RMAX)
            got = (ss.ASC, ss.DIST, ss.ZERO, ss.RMIN)
            if want != got:
                return {"n": n, "input": p, "output": s,
                        "expected": want, "actual": got}
            if s in seen:
                return {"n": n, "output": s, "detail": "image collision"}
            seen.add(s)
        if seen != targets:
            return {"n": n, "detail": f"image covers {len(seen)} of "
                                      f"{len(targets)} ascent sequences"}
    return None


def _chk_zeromax_sym(max_n):
    for n in range(1, max_n + 1):
        tbl = dist_table(ClassId.ASC, n, ("zero", "max")).counts
        for key in sorted(tbl):
            mirror = (key[1], key[0])
            if tbl.get(mirror, 0) != tbl[key]:
                return {"n": n, "tuple": key, "count": tbl[key],
                        "mirror": mirror, "mirror_count": tbl.get(mirror, 0)}
    return None


def _chk_main3(max_n):
    for n in range(1, max_n + 1):
        repmax_asc = dist_table(ClassId.ASC, n, ("rep", "max")).counts
        repmax_t21 = dist_table(ClassId.T21, n, ("rep", "max")).counts
        asczero = dist_table(ClassId.ASC, n, ("asc", "zero")).counts
        for label, other in (("T21 (rep,max)", repmax_t21),
                             ("ASC (asc,zero)", asczero)):
            diff = _table_diff(repmax_asc, other)
            if diff:
                key, a, b = diff
                return {"n": n, "tables": ["ASC (rep,max)", label],
                        "tuple": key, "counts": [a, b]}
    return None


def _chk_t_main3(max_n):
    for n in range(1, max_n + 1):
        t_triple = dist_table(ClassId.T21, n, ("rep", "max", "mpair")).counts
        a_triple = dist_table(ClassId.ASC, n, ("rep", "max", "ealm")).counts
        z_triple = dist_table(ClassId.ASC, n, ("asc", "zero", "zpair")).counts
        for label, other in (("ASC (rep,max,ealm)", a_triple),
                             ("ASC (asc,zero,zpair)", z_triple)):
            diff = _table_diff(t_triple, other)
            if diff:
                key, a, b = diff
                return {"n": n, "tables": ["T21 (rep,max,mpair)", label],
                        "tuple": key, "counts": [a, b]}
    return None


def _chk_foata(max_n):
    # the double Eulerian pair on permutations is (des, iasc); pairing rep
    # with ides instead already fails at n = 2
    for n in range(1, max_n + 1):
        inv_tbl = dist_table(ClassId.INV, n, ("asc", "rep")).counts
        perm_tbl = dist_table(ClassId.PERM_ALL, n, ("des", "iasc")).counts
        diff = _table_diff(inv_tbl, perm_tbl)
        if diff:
            key, a, b = diff
            return {"n": n, "tables": ["INV (asc,rep)", "PERM_ALL (des,iasc)"],
                    "tuple": key, "counts": [a, b]}
    return None


def _chk_inv_sym(max_n):
    for n in range(1, max_n + 1):
        tbl = dist_table(ClassId.INV, n, ("asc", "rep")).counts
        for key in sorted(tbl):
            mirror = (key[1], key[0])
            if tbl.get(mirror, 0) != tbl[key]:
                return {"n": n, "tuple": key, "count": tbl[key],
                        "mirror": mirror, "mirror_count": tbl.get(mirror, 0)}
    return None


def _chk_lehmer_quadruple(max_n):
    for n in range(1, max_n + 1):
        seen = set()
        count = 0
        for p in enumerate_class(ClassId.PERM_ALL, n):
            count += 1
            s = bijections.lehmer_code(p)
            if not is_member(ClassId.INV, s):
                return {"n": n, "input": p, "output": s,
                        "detail": "code is not an inversion sequence"}
            ps, sc = perm_stats(p), scalar_stats(s)
            want = (ps.des, len(ps.LMAX), len(ps.LMIN), len(ps.RMAX))
            got = (sc.asc, sc.zero, sc.max, sc.rmin)
            if want != got:
                return {"n": n, "input": p, "output": s,
                        "expected": want, "actual": got}
            if s in seen:
                return {"n": n, "output": s, "detail": "image collision"}
            seen.add(s)
        if len(seen) != count:
            return {"n": n, "detail": "image does not cover the class"}
    return None


def _chk_gf_G(order, points, seed, sym_order):
    rng = random.Random(seed)
    pts = [random_point(rng, admissible_for_length_series)
           for _ in range(points)]
    tables = [dist_table(ClassId.ASC, n, ("rep", "max", "asc", "zero"))
              for n in range(1, order + 1)]
    for index, point in enumerate(pts):
        series = series_G(order, point)
        for n in range(1, order + 1):
            want = eval_gf(tables[n - 1], point)
            got = series.coefficient(n)
            if want != got:
                return {"point_index": index, "point": point, "n": n,
                        "expected": want, "actual": got}
    for index, point in enumerate(pts):
        swapped = SpecPoint(x=point.u, q=point.z, u=point.x, z=point.q)
        if series_G(sym_order, point) != series_G(sym_order, swapped):
            return {"point_index": index, "point": point,
                    "detail": f"asymmetric under (x,q)<->(u,z) at order {sym_order}"}
    return None


def _chk_gf_zeromax(order, points, seed):
    rng = random.Random(seed)
    pts = [random_point(rng) for _ in range(points)]
    tables = [dist_table(ClassId.ASC, n, ("zero", "max"))
              for n in range(1, order + 1)]
    for index, point in enumerate(pts):
        series = series_zeromax(order, point.q, point.z)
        if series != series_zeromax(order, point.z, point.q):
            return {"point_index": index, "point": point,
                    "detail": "coefficients not symmetric in q and z"}
        for n in range(1, order + 1):
            want = eval_gf(tables[n - 1], point)
            got = series.coefficient(n)
            if want != got:
                return {"point_index": index, "point": point, "n": n,
                        "expected": want, "actual": got}
    return None


def _chk_gf_asczero(order, points, seed):
    rng = random.Random(seed)
    pts = [random_point(rng) for _ in range(points)]
    for index, point in enumerate(pts):
        first = series_asczero(order, point.u, point.z, "primitive")
        second = series_asczero(order, point.u, point.z, "alternative")
        if first != second:
            return {"point_index": index, "point": point,
                    "detail": "the two variants disagree"}
        both = series_G(order, SpecPoint(u=point.u, z=point.z))
        if first != both:
            return {"point_index": index, "point": point,
                    "detail": "variants disagree with the four-marker series at x=q=1"}
    return None


def _chk_case_identities(order, points, seed):
    rng = random.Random(seed)
    usable = lambda p: p.w not in (0, 1) and admissible_for_case_identity(p)
    pts = [random_point(rng, usable) for _ in range(points)]
    # annihilation point: every (z-1) term drops out
    pts.append(SpecPoint(x=2, q=3, u=5, z=1, w=0))
    for index, point in enumerate(pts):
        for case in (1, 2, 3, 4):
            report = check_case_identity(case, order, point)
            if not report.ok:
                bad = next(k for k in range(order + 1)
                           if report.lhs.coeffs[k] != report.rhs.coeffs[k])
                return {"point_index": index, "point": point, "case": case,
                        "order": order, "first_bad_power": bad,
                        "expected": report.lhs.coeffs[bad],
                        "actual": report.rhs.coeffs[bad]}
    return None


def _chk_class_counts(max_n, perm_max_n):
    reference = fishburn_series(max(max_n, perm_max_n, 1))
    jobs = [(cls, max_n) for cls in
            (ClassId.ASC, ClassId.T21, ClassId.B, ClassId.C)]
    jobs += [(cls, perm_max_n) for cls in
             (ClassId.PERM_AVOID_A, ClassId.PERM_AVOID_B)]
    for n in range(1, max(max_n, perm_max_n) + 1):
        for cls, cap in jobs:
            if n > cap:
                continue
            count = sum(1 for _ in enumerate_class(cls, n))
            expected = reference.coefficient(n)
            if count != expected:
                return {"n": n, "class": cls, "expected": int(expected),
                        "actual": count}
    return None


# --- lemma_suite -----------------------------------------------------------


def _zero_stat(s) -> int:
    return scalar_stats(s).zero


def _lemma_phi_P(n, asc_n, asc_prev):
    domain = [s for s in asc_n if decomp.classify(s, "ASC_P") == "P"]
    domain_set = set(domain)
    prev_set = set(asc_prev)
    images = set()
    for s in domain:
        out = decomp.phi_P(s)
        a, b = scalar_stats(s), scalar_stats(out)
        if out not in prev_set:
            return {"map": "phi_P", "n": n, "input": s, "output": out,
                    "detail": "output not an ascent sequence of length n-1"}
        if (a.asc, a.max, a.rep, a.zero, stats.ealm(s)) != \
                (b.asc + 1, b.max + 1, b.rep, b.zero, stats.ealm(out)):
            return {"map": "phi_P", "n": n, "input": s, "output": out,
                    "detail": "statistic contract violated"}
        if decomp.phi_P_inv(out) != s:
            return {"map": "phi_P", "n": n, "input": s,
                    "detail": "round trip failed"}
        images.add(out)
    if len(images) != len(domain):
        return {"map": "phi_P", "n": n, "detail": "not injective"}
    for t in sorted(asc_prev):
        back = decomp.phi_P_inv(t)
        if back not in domain_set or decomp.phi_P(back) != t:
            return {"map": "phi_P", "n": n, "input": t,
                    "detail": "inverse leaves the stated codomain"}
    return None


def _lemma_xi_S4(n, asc_n):
    domain = [s for s in asc_n if scalar_stats(s).max < n
              and decomp.classify(s, "ASC_S") == "S4"]
    pc = [s for s in asc_n if decomp.classify(s, "ASC_P") == "Pc"]
    pc_set = set(pc)
    pairs = set()
    for s in domain:
        res = decomp.xi_S4(s)
        out, i = res.output, res.side_index
        a, b = scalar_stats(s), scalar_stats(out)
        if out not in pc_set:
            return {"map": "xi_S4", "n": n, "input": s, "output": out,
                    "detail": "output not in the complement of the "
                              "single-submaximal subset"}
        if i != stats.ealm(s) or not (0 <= i < stats.ealm(out)):
            return {"map": "xi_S4", "n": n, "input": s, "side_index": i,
                    "detail": "side index out of range"}
        if (a.asc, a.rep, a.max, a.zero) != \
                (b.asc, b.rep, b.max - 1, b.zero + (1 if i == 0 else 0)):
            return {"map": "xi_S4", "n": n, "input": s, "output": out,
                    "detail": "statistic contract violated"}
        if decomp.xi_S4_inv(out, i) != s:
            return {"map": "xi_S4", "n": n, "input": s,
                    "detail": "round trip failed"}
        pairs.add((out, i))
    if len(pairs) != len(domain):
        return {"map": "xi_S4", "n": n, "detail": "not injective"}
    want = {(t, i) for t in pc for i in range(stats.ealm(t))}
    if pairs != want:
        return {"map": "xi_S4", "n": n,
                "detail": f"image covers {len(pairs)} of {len(want)} pairs"}
    return None


def _lemma_s2(n, asc_n, asc_prev):
    domain = [s for s in asc_n if scalar_stats(s).max < n
              and decomp.classify(s, "ASC_S") == "S2"]
    prev_set = set(asc_prev)
    pairs = set()
    for s in domain:
        res = decomp.s2_reduce(s)
        out, i = res.output, res.side_index
        a, b = scalar_stats(s), scalar_stats(out)
        if out not in prev_set or b.max >= n - 1:
            return {"map": "s2_reduce", "n": n, "input": s, "output": out,
                    "detail": "output not a shorter non-identity-run "
                              "ascent sequence"}
        if not stats.ealm(out) <= i <= b.max - 1:
            return {"map": "s2_reduce", "n": n, "input": s, "side_index": i,
                    "detail": "side index out of range"}
        if (a.asc, a.max, a.rep, a.zero) != \
                (b.asc, b.max, b.rep + 1, b.zero + (1 if i == 0 else 0)):
            return {"map": "s2_reduce", "n": n, "input": s, "output": out,
                    "detail": "statistic contract violated"}
        if decomp.s2_insert(out, i) != s:
            return {"map": "s2_reduce", "n": n, "input": s,
                    "detail": "round trip failed"}
        pairs.add((out, i))
    if len(pairs) != len(domain):
        return {"map": "s2_reduce", "n": n, "detail": "not injective"}
    want = {(t, i) for t in asc_prev if scalar_stats(t).max < n - 1
            for i in range(stats.ealm(t), scalar_stats(t).max)}
    if pairs != want:
        return {"map": "s2_reduce", "n": n,
                "detail": f"image covers {len(pairs)} of {len(want)} pairs"}
    return None


def _lemma_s3(n, asc_n, asc_prev):
    domain = [s for s in asc_n if scalar_stats(s).max < n
              and decomp.classify(s, "ASC_S") == "S3"]
    prev_set = set(asc_prev)
    pairs = set()
    for s in domain:
        res = decomp.s3_reduce(s)
        out, i = res.output, res.side_index
        a, b = scalar_stats(s), scalar_stats(out)
        if out not in prev_set:
            return {"map": "s3_reduce", "n": n, "input": s, "output": out,
                    "detail": "output not an ascent sequence of length n-1"}
        if not 0 <= i < stats.ealm(out):
            return {"map": "s3_reduce", "n": n, "input": s, "side_index": i,
                    "detail": "side index out of range"}
        if (a.asc, a.max, a.rep, a.zero) != \
                (b.asc + 1, b.max, b.rep + 1, b.zero + (1 if i == 0 else 0)):
            return {"map": "s3_reduce", "n": n, "input": s, "output": out,
                    "detail": "statistic contract violated"}
        if decomp.s3_insert(out, i) != s:
            return {"map": "s3_reduce", "n": n, "input": s,
                    "detail": "round trip failed"}
        pairs.add((out, i))
    if len(pairs) != len(domain):
        return {"map": "s3_reduce", "n": n, "detail": "not injective"}
    want = {(t, i) for t in asc_prev for i in range(stats.ealm(t))}
    if pairs != want:
        return {"map": "s3_reduce", "n": n,
                "detail": f"image covers {len(pairs)} of {len(want)} pairs"}
    return None


def _lemma_ealm_shift(n, asc_n):
    members = [s for s in asc_n if scalar_stats(s).max < n
               and decomp.classify(s, "ASC_S") != "S4"]
    member_set = set(members)
    profile = Counter()
    for s in members:
        sc = scalar_stats(s)
        i = stats.ealm(s)
        profile[(i, sc.rep, sc.max)] += 1
        if i < sc.max - 1:
            up = decomp.ealm_shift(s, "up")
            usc = scalar_stats(up)
            if (up not in member_set or stats.ealm(up) != i + 1
                    or (usc.rep, usc.max) != (sc.rep, sc.max)):
                return {"map": "ealm_shift", "n": n, "input": s, "output": up,
                        "detail": "up contract violated"}
            if decomp.ealm_shift(up, "down") != s:
                return {"map": "ealm_shift", "n": n, "input": s,
                        "detail": "down(up) round trip failed"}
        if i >= 1:
            down = decomp.ealm_shift(s, "down")
            dsc = scalar_stats(down)
            if (down not in member_set or stats.ealm(down) != i - 1
                    or (dsc.rep, dsc.max) != (sc.rep, sc.max)):
                return {"map": "ealm_shift", "n": n, "input": s,
                        "output": down, "detail": "down contract violated"}
            if decomp.ealm_shift(down, "up") != s:
                return {"map": "ealm_shift", "n": n, "input": s,
                        "detail": "up(down) round trip failed"}
    for (i, rep, mx) in sorted(profile):
        base = profile[(0, rep, mx)]
        if any(profile.get((j, rep, mx), 0) != base for j in range(mx)):
            return {"map": "ealm_shift", "n": n,
                    "detail": f"count depends on the marker at rep={rep}, "
                              f"max={mx}"}
    return None


def _lemma_psi_F(n, t21_n, t21_prev):
    domain = [s for s in t21_n if decomp.classify(s, "T_F") == "F"]
    domain_set = set(domain)
    prev_set = set(t21_prev)
    images = set()
    for s in domain:
        out = decomp.psi_F(s)
        a, b = scalar_stats(s), scalar_stats(out)
        if out not in prev_set:
            return {"map": "psi_F", "n": n, "input": s, "output": out,
                    "detail": "output not a (2-1)-avoiding sequence of "
                              "length n-1"}
        if (a.max, a.rep, stats.mpair(s)) != \
                (b.max + 1, b.rep, stats.mpair(out)):
            return {"map": "psi_F", "n": n, "input": s, "output": out,
                    "detail": "statistic contract violated"}
        if decomp.psi_F_inv(out) != s:
            return {"map": "psi_F", "n": n, "input": s,
                    "detail": "round trip failed"}
        images.add(out)
    if len(images) != len(domain):
        return {"map": "psi_F", "n": n, "detail": "not injective"}
    for t in sorted(t21_prev):
        back = decomp.psi_F_inv(t)
        if back not in domain_set or decomp.psi_F(back) != t:
            return {"map": "psi_F", "n": n, "input": t,
                    "detail": "inverse leaves the stated codomain"}
    return None


def _lemma_mpair_shift(n, t21_n):
    members = [s for s in t21_n if scalar_stats(s).max < n
               and decomp.classify(s, "T_J") == "J1"]
    member_set = set(members)
    profile = Counter()
    for s in members:
        sc = scalar_stats(s)
        i = stats.mpair(s)
        profile[(i, sc.rep, sc.max)] += 1
        if i < sc.max - 1:
            up = decomp.mpair_shift(s, "up")
            usc = scalar_stats(up)
            if (up not in member_set or stats.mpair(up) != i + 1
                    or (usc.rep, usc.max) != (sc.rep, sc.max)):
                return {"map": "mpair_shift", "n": n, "input": s,
                        "output": up, "detail": "up contract violated"}
            if decomp.mpair_shift(up, "down") != s:
                return {"map": "mpair_shift", "n": n, "input": s,
                        "detail": "down(up) round trip failed"}
        if i >= 1:
            down = decomp.mpair_shift(s, "down")
            dsc = scalar_stats(down)
            if (down not in member_set or stats.mpair(down) != i - 1
                    or (dsc.rep, dsc.max) != (sc.rep, sc.max)):
                return {"map": "mpair_shift", "n": n, "input": s,
                        "output": down, "detail": "down contract violated"}
            if decomp.mpair_shift(down, "up") != s:
                return {"map": "mpair_shift", "n": n, "input": s,
                        "detail": "up(down) round trip failed"}
    for (i, rep, mx) in sorted(profile):
        base = profile[(0, rep, mx)]
        if any(profile.get((j, rep, mx), 0) != base for j in range(mx)):
            return {"map": "mpair_shift", "n": n,
                    "detail": f"count depends on the marker at rep={rep}, "
                              f"max={mx}"}
    return None


def _lemma_vartheta(n, t21_n):
    domain = [s for s in t21_n if decomp.classify(s, "T_F") == "Fc"]
    j2 = [s for s in t21_n if scalar_stats(s).max < n
          and decomp.classify(s, "T_J") == "J2"]
    j2_set = set(j2)
    outputs = set()
    for s in domain:
        for i in range(stats.mpair(s)):
            out = decomp.vartheta(s, i)
            a, b = scalar_stats(s), scalar_stats(out)
            if out not in j2_set:
                return {"map": "vartheta", "n": n, "input": s,
                        "side_index": i, "output": out,
                        "detail": "output outside the displaced subset"}
            if stats.mpair(out) != i or a.rep != b.rep or a.max != b.max + 1:
                return {"map": "vartheta", "n": n, "input": s,
                        "side_index": i, "output": out,
                        "detail": "statistic contract violated"}
            res = decomp.vartheta_inv(out)
            if res.output != s or res.side_index != i:
                return {"map": "vartheta", "n": n, "input": s,
                        "side_index": i, "detail": "round trip failed"}
            outputs.add(out)
    if len(outputs) != len(j2):
        return {"map": "vartheta", "n": n,
                "detail": f"image covers {len(outputs)} of {len(j2)}"}
    return None


def _lemma_phi_G(n, asc_n, asc_prev):
    domain = [s for s in asc_n if decomp.classify(s, "ASC_G") == "G"]
    domain_set = set(domain)
    prev_set = set(asc_prev)
    images = set()
    for s in domain:
        out = decomp.phi_G(s)
        a, b = scalar_stats(s), scalar_stats(out)
        if out not in prev_set:
            return {"map": "phi_G", "n": n, "input": s, "output": out,
                    "detail": "output not an ascent sequence of length n-1"}
        if (a.zero, a.asc, stats.zpair(s)) != \
                (b.zero + 1, b.asc, stats.zpair(out)):
            return {"map": "phi_G", "n": n, "input": s, "output": out,
                    "detail": "statistic contract violated"}
        if decomp.phi_G_inv(out) != s:
            return {"map": "phi_G", "n": n, "input": s,
                    "detail": "round trip failed"}
        images.add(out)
    if len(images) != len(domain):
        return {"map": "phi_G", "n": n, "detail": "not injective"}
    for t in sorted(asc_prev):
        back = decomp.phi_G_inv(t)
        if back not in domain_set or decomp.phi_G(back) != t:
            return {"map": "phi_G", "n": n, "input": t,
                    "detail": "inverse leaves the stated codomain"}
    return None


def _lemma_zpair_shift(n, asc_n):
    members = [s for s in asc_n if _zero_stat(s) < n
               and decomp.classify(s, "ASC_R") == "R1"]
    member_set = set(members)
    profile = Counter()
    for s in members:
        sc = scalar_stats(s)
        i = stats.zpair(s)
        profile[(i, sc.asc, sc.zero)] += 1
        if i < sc.zero - 1:
            up = decomp.zpair_shift(s, "up")
            usc = scalar_stats(up)
            if (up not in member_set or stats.zpair(up) != i + 1
                    or (usc.asc, usc.zero) != (sc.asc, sc.zero)):
                return {"map": "zpair_shift", "n": n, "input": s,
                        "output": up, "detail": "up contract violated"}
            if decomp.zpair_shift(up, "down") != s:
                return {"map": "zpair_shift", "n": n, "input": s,
                        "detail": "down(up) round trip failed"}
        if i >= 1:
            down = decomp.zpair_shift(s, "down")
            dsc = scalar_stats(down)
            if (down not in member_set or stats.zpair(down) != i - 1
                    or (dsc.asc, dsc.zero) != (sc.asc, sc.zero)):
                return {"map": "zpair_shift", "n": n, "input": s,
                        "output": down, "detail": "down contract violated"}
            if decomp.zpair_shift(down, "up") != s:
                return {"map": "zpair_shift", "n": n, "input": s,
                        "detail": "up(down) round trip failed"}
    for (i, asc, zero) in sorted(profile):
        base = profile[(0, asc, zero)]
        if any(profile.get((j, asc, zero), 0) != base for j in range(zero)):
            return {"map": "zpair_shift", "n": n,
                    "detail": f"count depends on the marker at asc={asc}, "
                              f"zero={zero}"}
    return None


def _lemma_theta_R(n, asc_n):
    domain = [s for s in asc_n if decomp.classify(s, "ASC_G") == "Gc"]
    r2 = [s for s in asc_n if _zero_stat(s) < n
          and decomp.classify(s, "ASC_R") == "R2"]
    r2_set = set(r2)
    outputs = set()
    for s in domain:
        for i in range(stats.zpair(s)):
            out = decomp.theta_R(s, i)
            a, b = scalar_stats(s), scalar_stats(out)
            if out not in r2_set:
                return {"map": "theta_R", "n": n, "input": s,
                        "side_index": i, "output": out,
                        "detail": "output outside the displaced subset"}
            if stats.zpair(out) != i or a.asc != b.asc or a.zero != b.zero + 1:
                return {"map": "theta_R", "n": n, "input": s,
                        "side_index": i, "output": out,
                        "detail": "statistic contract violated"}
            res = decomp.theta_R_inv(out)
            if res.output != s or res.side_index != i:
                return {"map": "theta_R", "n": n, "input": s,
                        "side_index": i, "detail": "round trip failed"}
            outputs.add(out)
    if len(outputs) != len(r2):
        return {"map": "theta_R", "n": n,
                "detail": f"image covers {len(outputs)} of {len(r2)}"}
    return None


def _chk_lemma_suite(max_n):
    for n in range(2, max_n + 1):
        asc_n = list(enumerate_class(ClassId.ASC, n))
        asc_prev = list(enumerate_class(ClassId.ASC, n - 1))
        t21_n = list(enumerate_class(ClassId.T21, n))
        t21_prev = list(enumerate_class(ClassId.T21, n - 1))
        for verify in (
            lambda: _lemma_phi_P(n, asc_n, asc_prev),
            lambda: _lemma_xi_S4(n, asc_n),
            lambda: _lemma_s2(n, asc_n, asc_prev),
            lambda: _lemma_s3(n, asc_n, asc_prev),
            lambda: _lemma_ealm_shift(n, asc_n),
            lambda: _lemma_psi_F(n, t21_n, t21_prev),
            lambda: _lemma_mpair_shift(n, t21_n),
            lambda: _lemma_vartheta(n, t21_n),
            lambda: _lemma_phi_G(n, asc_n, asc_prev),
            lambda: _lemma_zpair_shift(n, asc_n),
            lambda: _lemma_theta_R(n, asc_n),
        ):
            found = verify()
            if found:
                return found
    return None


_CHECKS = {
    "conjecture1": (_chk_conjecture1, {"max_n": 10}),
    "upsilon_quadruple": (_chk_upsilon_quadruple, {"max_n": 8}),
    "psi_setvalued": (_chk_psi_setvalued, {"max_n": 8}),
    "phi_setvalued": (_chk_phi_setvalued, {"max_n": 8}),
    "zeromax_sym": (_chk_zeromax_sym, {"max_n": 10}),
    "main3": (_chk_main3, {"max_n": 10}),
    "t_main3": (_chk_t_main3, {"max_n": 9}),
    "foata": (_chk_foata, {"max_n": 8}),
    "inv_sym": (_chk_inv_sym, {"max_n": 8}),
    "lehmer_quadruple": (_chk_lehmer_quadruple, {"max_n": 8}),
    "gf_G": (_chk_gf_G,
             {"order": 9, "points": 20, "seed": 2026, "sym_order": 10}),
    "gf_zeromax": (_chk_gf_zeromax, {"order": 9, "points": 20, "seed": 2026}),
    "gf_asczero": (_chk_gf_asczero, {"order": 9, "points": 20, "seed": 2026}),
    "case_identities": (_chk_case_identities,
                        {"order": 8, "points": 10, "seed": 2026}),
    "lemma_suite": (_chk_lemma_suite, {"max_n": 7}),
    "class_counts": (_chk_class_counts, {"max_n": 10, "perm_max_n": 9}),
}

CHECK_NAMES = tuple(_CHECKS)


def check_parameters(name: str) -> tuple:
    """Parameter names a given check accepts."""
    entry = _CHECKS.get(name)
    if entry is None:
        raise UsageError(
            f"unknown check {name!r}; available: {', '.join(CHECK_NAMES)}")
    return tuple(entry[1])


def run_check(name: str, **params) -> CheckReport:
    """Run one named theorem check; unset (None) parameters take defaults."""
    entry = _CHECKS.get(name)
    if entry is None:
        raise UsageError(
            f"unknown check {name!r}; available: {', '.join(CHECK_NAMES)}")
    fn, defaults = entry
    merged = dict(defaults)
    for key, value in params.items():
        if value is None:
            continue
        if key not in defaults:
            raise UsageError(
                f"check {name!r} does not take parameter {key!r}; "
                f"accepted: {', '.join(defaults)}")
        merged[key] = value
    start = time.perf_counter()
    counterexample = fn(**merged)
    elapsed = time.perf_counter() - start
    verdict = "pass" if counterexample is None else "fail"
    return CheckReport(name, _jsonable(merged), verdict,
                       _jsonable(counterexample), elapsed)


def spot_check_cache(rng=None) -> CheckReport:
    """Recompute one randomly chosen cached table and compare.

    Run alongside the full suite to catch stale or corrupted cache files.
    Passes vacuously when the cache is empty.
    """
    rng = rng or random.Random()
    start = time.perf_counter()
    files = sorted(cache_dir().glob("*.json")) if cache_dir().is_dir() else []
    if not files:
        return CheckReport("cache_spotcheck", {"file": None}, "pass", None,
                           time.perf_counter() - start)
    picked = rng.choice(files)
    counterexample = None
    try:
        with open(picked) as handle:
            payload = json.load(handle)
        class_id = ClassId[payload["class"]]
        names = tuple(payload["stats"])
        cached = {tuple(k): c for k, c in payload["counts"]}
        if payload["version"] == _code_version():
            fresh = _compute_table(class_id, payload["n"], names).counts
            diff = _table_diff(cached, fresh)
            if diff:
                key, a, b = diff
                counterexample = {"file": picked.name, "tuple": list(key),
                                  "cached": a, "recomputed": b}
    except (OSError, ValueError, KeyError, TypeError) as exc:
        counterexample = {"file": picked.name, "detail": f"unreadable: {exc}"}
    verdict = "pass" if counterexample is None else "fail"
    return CheckReport("cache_spotcheck", {"file": picked.name}, verdict,
                       counterexample, time.perf_counter() - start)
