"""Command-line interface.

Subcommands: enumerate, stats, apply, table, series, check. Output goes to
stdout as JSON (default) or CSV; all numbers are exact, with rationals
rendered as "p/q". Exit codes: 0 success / all checks pass, 1 a check
failed, 2 usage or domain error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction

from . import bijections, decomp, stats
from .errors import DomainError, ResourceLimitError, UsageError
from .genfun import (SpecPoint, admissible_for_length_series, fishburn_series,
                     random_point, series_G, series_asczero, series_zeromax)
from .harness import (CHECK_NAMES, check_parameters, dist_table, run_check,
                      spot_check_cache)
from .seqcore import ClassId, Perm, Seq, enumerate_class, is_member


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not an exact rational: {text!r} (write e.g. 2/3)")


def _parse_object(class_id: ClassId, text: str):
    return (Perm.from_text(text) if class_id.is_permutation_class
            else Seq.from_text(text))


def _emit_json(payload) -> None:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _emit_csv(rows) -> None:
    writer = csv.writer(sys.stdout)
    writer.writerows(rows)


# --- enumerate -------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    class_id = ClassId.from_name(args.class_name)
    prefix = ()
    if args.prefix:
        prefix = tuple(_parse_object(class_id, args.prefix))
    items = [obj.to_text() for obj in
             enumerate_class(class_id, args.n, prefix=prefix,
                             limit=args.limit)]
    if args.format == "json":
        _emit_json(items)
    else:
        _emit_csv([[item] for item in items])
    return 0


# --- stats -----------------------------------------------------------------


def _stat_bundle(class_id: ClassId, obj) -> dict:
    if not is_member(class_id, obj):
        raise UsageError(
            f"{obj.to_text()!r} is not a member of {class_id.name}")
    if class_id.is_permutation_class:
        ps = stats.perm_stats(obj)
        return {"des": ps.des, "ides": ps.ides, "iasc": ps.iasc,
                "DES": list(ps.DES), "IDES": list(ps.IDES),
                "LMAX": list(ps.LMAX), "LMIN": list(ps.LMIN),
                "RMAX": list(ps.RMAX)}
    sc = stats.scalar_stats(obj)
    st = stats.set_stats(obj)
    bundle = {"asc": sc.asc, "rep": sc.rep, "zero": sc.zero, "max": sc.max,
              "rmin": sc.rmin, "nasc": sc.nasc,
              "ASC": list(st.ASC), "DIST": list(st.DIST),
              "ZERO": list(st.ZERO), "MAX": list(st.MAX),
              "RMIN": list(st.RMIN), "NASC": list(st.NASC)}
    if class_id is ClassId.ASC:
        bundle.update(ealm=stats.ealm(obj), zpair=stats.zpair(obj),
                      zpos=stats.zpos(obj))
    elif class_id is ClassId.T21:
        bundle.update(mpair=stats.mpair(obj), mpos=stats.mpos(obj))
    return bundle


def _cmd_stats(args) -> int:
    class_id = ClassId.from_name(args.class_name)
    obj = _parse_object(class_id, args.object)
    bundle = _stat_bundle(class_id, obj)
    if args.format == "json":
        _emit_json(bundle)
    else:
        _emit_csv([[key, " ".join(map(str, val)) if isinstance(val, list)
                    else val] for key, val in bundle.items()])
    return 0


# --- apply -----------------------------------------------------------------

# name -> (input kind, handler); handlers receive (obj, args, trace) where
# trace is a list collecting (label, sequence) steps, or None
_FORWARD_INVERSE = {
    "phi_P": (decomp.phi_P, decomp.phi_P_inv),
    "psi_F": (decomp.psi_F, decomp.psi_F_inv),
    "phi_G": (decomp.phi_G, decomp.phi_G_inv),
}
_SHIFT_MAPS = {"ealm_shift": decomp.ealm_shift,
               "mpair_shift": decomp.mpair_shift,
               "zpair_shift": decomp.zpair_shift}
_REDUCE_INSERT = {"s2_reduce": (decomp.s2_reduce, decomp.s2_insert),
                  "s3_reduce": (decomp.s3_reduce, decomp.s3_insert)}
_TRACEABLE = {"beta", "beta_inv", "gamma", "gamma_inv",
              "mpair_shift", "vartheta", "theta_R"}

_BIJECTION_MAPS = {
    "theta_lehmer": ("perm", bijections.lehmer_code),
    "bv": ("perm", bijections.bv_code),
    "bv_inv": ("seq", bijections.bv_decode),
    "beta": ("seq", bijections.beta),
    "beta_inv": ("seq", bijections.beta_inv),
    "gamma": ("seq", bijections.gamma),
    "gamma_inv": ("seq", bijections.gamma_inv),
    "psi": ("perm", bijections.psi),
    "psi_inv": ("seq", bijections.psi_inv),
    "phi": ("perm", bijections.phi),
    "phi_inv": ("seq", bijections.phi_inv),
    "upsilon": ("seq", bijections.upsilon),
}
_DECOMP_MAPS = ("phi_P", "xi_S4", "s2_reduce", "s3_reduce", "ealm_shift",
                "psi_F", "mpair_shift", "vartheta", "phi_G", "zpair_shift",
                "theta_R")

MAP_NAMES = tuple(_BIJECTION_MAPS) + _DECOMP_MAPS


def _forward_or_inverse(args, name) -> str:
    direction = args.direction or "forward"
    if direction not in ("forward", "inverse"):
        raise UsageError(
            f"map {name!r} takes --direction forward or inverse, "
            f"not {direction!r}")
    return direction


def _require_side_index(args, name):
    if args.side_index is None:
        raise UsageError(f"map {name!r} needs --side-index here")
    return args.side_index


def _no_side_index(args, name):
    if args.side_index is not None:
        raise UsageError(f"map {name!r} does not take --side-index")


def _apply_named_map(name, obj, args, trace):
    if name in _BIJECTION_MAPS:
        if args.direction is not None:
            raise UsageError(
                f"map {name!r} does not take --direction; inverse maps "
                f"have their own names")
        _no_side_index(args, name)
        fn = _BIJECTION_MAPS[name][1]
        out = fn(obj, _trace=trace) if name in _TRACEABLE else fn(obj)
        return {"output": out}

    if name in _FORWARD_INVERSE:
        _no_side_index(args, name)
        forward, inverse = _FORWARD_INVERSE[name]
        fn = forward if _forward_or_inverse(args, name) == "forward" \
            else inverse
        return {"output": fn(obj)}

    if name in _SHIFT_MAPS:
        _no_side_index(args, name)
        if args.direction not in ("up", "down"):
            raise UsageError(f"map {name!r} needs --direction up or down")
        fn = _SHIFT_MAPS[name]
        if name == "mpair_shift":
            return {"output": fn(obj, args.direction, _trace=trace)}
        return {"output": fn(obj, args.direction)}

    if name in _REDUCE_INSERT:
        reduce_fn, insert_fn = _REDUCE_INSERT[name]
        if _forward_or_inverse(args, name) == "forward":
            _no_side_index(args, name)
            res = reduce_fn(obj)
            return {"output": res.output, "side_index": res.side_index}
        return {"output": insert_fn(obj, _require_side_index(args, name))}

    if name == "xi_S4":
        if _forward_or_inverse(args, name) == "forward":
            _no_side_index(args, name)
            res = decomp.xi_S4(obj)
            return {"output": res.output, "side_index": res.side_index}
        return {"output": decomp.xi_S4_inv(
            obj, _require_side_index(args, name))}

    if name in ("vartheta", "theta_R"):
        forward = decomp.vartheta if name == "vartheta" else decomp.theta_R
        inverse = (decomp.vartheta_inv if name == "vartheta"
                   else decomp.theta_R_inv)
        if _forward_or_inverse(args, name) == "forward":
            i = _require_side_index(args, name)
            return {"output": forward(obj, i, _trace=trace)}
        _no_side_index(args, name)
        res = inverse(obj, _trace=trace)
        return {"output": res.output, "side_index": res.side_index}

    raise UsageError(
        f"unknown map {name!r}; available: {', '.join(MAP_NAMES)}")


def _cmd_apply(args) -> int:
    name = args.map
    if name not in MAP_NAMES:
        raise UsageError(
            f"unknown map {name!r}; available: {', '.join(MAP_NAMES)}")
    if args.trace and name not in _TRACEABLE:
        raise UsageError(
            f"map {name!r} has no trace; traceable maps: "
            f"{', '.join(sorted(_TRACEABLE))}")
    kind = _BIJECTION_MAPS[name][0] if name in _BIJECTION_MAPS else "seq"
    obj = (Perm.from_text(args.object) if kind == "perm"
           else Seq.from_text(args.object))
    trace = [] if args.trace else None
    result = _apply_named_map(name, obj, args, trace)
    payload = {"map": name, "input": obj.to_text(),
               "output": result["output"].to_text()}
    if "side_index" in result:
        payload["side_index"] = result["side_index"]
    if trace is not None:
        payload["trace"] = [[str(label), step.to_text()]
                            for label, step in trace]
    if args.format == "json":
        _emit_json(payload)
    else:
        rows = [["map", "input", "output", "side_index"],
                [name, payload["input"], payload["output"],
                 payload.get("side_index", "")]]
        rows += [["trace", label, step] for label, step
                 in payload.get("trace", [])]
        _emit_csv(rows)
    return 0


# --- table -----------------------------------------------------------------


def _cmd_table(args) -> int:
    class_id = ClassId.from_name(args.class_name)
    names = tuple(name.strip() for name in args.stats.split(",") if name.strip())
    table = dist_table(class_id, args.n, names, use_cache=not args.no_cache)
    counts = sorted(table.counts.items())
    if args.format == "json":
        _emit_json({"class": class_id.name, "n": table.n,
                    "stats": list(names), "total": table.total(),
                    "counts": [[list(key), count] for key, count in counts]})
    else:
        _emit_csv([list(names) + ["count"]]
                  + [list(key) + [count] for key, count in counts])
    return 0


# --- series ----------------------------------------------------------------

_SERIES_MARKERS = {"fishburn": (), "G": ("x", "q", "u", "z"),
                   "zeromax": ("q", "z"), "asczero1": ("u", "z"),
                   "asczero2": ("u", "z")}


def _series_point(args, allowed) -> SpecPoint:
    given = {name: getattr(args, name) for name in ("x", "q", "u", "z", "w")
             if getattr(args, name) is not None}
    for name in given:
        if name not in allowed:
            raise UsageError(
                f"series {args.which!r} does not take --{name}; "
                f"markers: {', '.join(allowed) if allowed else 'none'}")
    if args.seed is not None:
        if given:
            raise UsageError(
                "give either explicit marker values or --seed, not both")
        rng = random.Random(args.seed)
        constraint = (admissible_for_length_series
                      if args.which == "G" else None)
        point = random_point(rng, constraint)
        print(f"point: {json.dumps(point.as_dict())}", file=sys.stderr)
        return point
    return SpecPoint(**{k: _parse_fraction(v) for k, v in given.items()})


def _cmd_series(args) -> int:
    allowed = _SERIES_MARKERS[args.which]
    if args.which == "fishburn":
        if args.seed is not None:
            raise UsageError("series 'fishburn' has no markers to randomize")
        _series_point(args, allowed)  # rejects stray marker flags
        series = fishburn_series(args.order)
    else:
        point = _series_point(args, allowed)
        if args.which == "G":
            series = series_G(args.order, point)
        elif args.which == "zeromax":
            series = series_zeromax(args.order, point.q, point.z)
        else:
            variant = "primitive" if args.which == "asczero1" else "alternative"
            series = series_asczero(args.order, point.u, point.z, variant)
    coeffs = [str(c) for c in series.coeffs]
    if args.format == "json":
        _emit_json(coeffs)
    else:
        _emit_csv([[k, c] for k, c in enumerate(coeffs)])
    return 0


# --- check -----------------------------------------------------------------


def _report_rows(reports):
    yield ["name", "verdict", "seconds", "parameters", "counterexample"]
    for rep in reports:
        d = rep.as_dict()
        yield [d["name"], d["verdict"], d["seconds"],
               json.dumps(d["parameters"]),
               "" if d["counterexample"] is None
               else json.dumps(d["counterexample"])]


def _cmd_check(args) -> int:
    overrides = {"max_n": args.max_n, "order": args.order,
                 "seed": args.seed, "points": args.points}
    if args.name is not None:
        # a named check gets every flag the user set; run_check rejects
        # the ones the check does not accept
        reports = [run_check(args.name, **overrides)]
    else:
        reports = []
        for name in CHECK_NAMES:
            accepted = check_parameters(name)
            reports.append(run_check(name, **{
                k: v for k, v in overrides.items() if k in accepted}))
        reports.append(spot_check_cache(random.Random(args.seed)))
    if args.format == "json":
        _emit_json([rep.as_dict() for rep in reports])
    else:
        _emit_csv(_report_rows(reports))
    return 0 if all(rep.passed for rep in reports) else 1


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Exact combinatorics of ascent sequences: enumeration, "
                    "statistics, bijections, generating functions, and "
                    "theorem checks.",
        epilog="Set FISHBURN_CACHE to relocate the distribution-table cache "
               "(default ~/.cache/fishburn).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("enumerate", help="list a class in lexicographic order")
    p.add_argument("--class", dest="class_name", required=True,
                   help="INV, ASC, T21, B, C, PERM_ALL, PERM_AVOID_A, "
                        "PERM_AVOID_B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prefix", help="restrict to members with this prefix")
    p.add_argument("--limit", type=int,
                   help="override the default length safety ceiling")
    add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("stats", help="all statistics of one object")
    p.add_argument("--class", dest="class_name", required=True)
    p.add_argument("object", help="sequence like 0,1,0,2 or permutation "
                                  "word like 61832547")
    add_format(p)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("apply", help="apply a named bijection or "
                                     "decomposition map")
    p.add_argument("--map", required=True,
                   help=", ".join(MAP_NAMES))
    p.add_argument("--direction",
                   help="up/down for the shift maps, forward/inverse for "
                        "the reducing maps")
    p.add_argument("--side-index", type=int, dest="side_index",
                   help="ordinal parameter for the indexed maps")
    p.add_argument("--trace", action="store_true",
                   help="emit each intermediate sequence")
    p.add_argument("object")
    add_format(p)
    p.set_defaults(handler=_cmd_apply)

    p = sub.add_parser("table", help="joint distribution of statistics "
                                     "over a class")
    p.add_argument("--class", dest="class_name", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", required=True,
                   help="comma-separated statistic names, e.g. rep,max")
    p.add_argument("--no-cache", action="store_true",
                   help="bypass the on-disk table cache")
    add_format(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("series", help="exact truncated power series")
    p.add_argument("--which", required=True,
                   choices=("fishburn", "G", "zeromax", "asczero1",
                            "asczero2"))
    p.add_argument("--order", type=int, default=9)
    for marker in ("x", "q", "u", "z", "w"):
        p.add_argument(f"--{marker}",
                       help=f"marker value as an exact rational, e.g. 2/3")
    p.add_argument("--seed", type=int,
                   help="draw the marker point from a seeded generator "
                        "instead of giving explicit values")
    add_format(p)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("check", help="run one named theorem check, or all "
                                     "of them")
    p.add_argument("--name", choices=CHECK_NAMES,
                   help="omit to run the full suite plus a cache spot check")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--order", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--points", type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
