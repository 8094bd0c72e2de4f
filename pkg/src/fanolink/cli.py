"""Command line front end.

    fanolink rr --genus 2 --basket 2,1 --n 10
    fanolink series --weights 1,1,1,1,2 --degrees 5 --depth 12
    fanolink search --genus 2 --basket 2,1 --codim 1 --max-weight 6
    fanolink link verify --id X4-Y34
    fanolink exclude curve --asq 8 --adotc 3 --csq -5
    fanolink exclude point --h2s 3 --a1 1 --a2 1
    fanolink threshold --n 2 --pair 1,2 --pair 2,3
    fanolink catalog list|show ID|check

Exit status: 0 on success or a reached verdict, 1 when checks fail,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from fanolink import catalog as cat
from fanolink.exclusion import (
    ExclusionCase,
    replay_case,
)
from fanolink.families import Family, default_match_depth, family_hilbert_series, fano_index, search_candidates
from fanolink.families import family_anticanonical_cube
from fanolink.links import MobileSystemData, canonical_threshold, is_weak_maximal, verify_link
from fanolink.rational import as_fraction, fmt
from fanolink.rr import Basket, FanoNumerics, rr_hilbert_sequence

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


# -- argument types ---------------------------------------------------------------


def _rational(text):
    try:
        return as_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma separated values, got {text!r}")
    return parts


# -- output ------------------------------------------------------------------------


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _color(text, code):
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _table(headers, rows):
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cells[0], widths)).rstrip()]
    lines[0] = _color(lines[0], "1")
    lines.append("  ".join("-" * w for w in widths))
    for row in cells[1:]:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _emit(args, data, table_text):
    if args.format == "json":
        print(json.dumps(_jsonable(data), indent=2, sort_keys=True))
    else:
        print(table_text)


def _numerics_from_args(args) -> FanoNumerics:
    try:
        basket = Basket(tuple(tuple(int(x) for x in b) for b in args.basket or ()))
    except ValueError as exc:
        raise InputError(f"--basket: {exc}") from None
    if args.kcube is not None:
        return FanoNumerics(args.genus, args.kcube, basket)
    return FanoNumerics.from_genus(args.genus, basket)


def _load_catalog(args) -> cat.Catalog:
    if args.catalog:
        try:
            return cat.load_catalog(args.catalog)
        except cat.CatalogError as exc:
            raise InputError(f"--catalog: {exc}") from None
    return cat.builtin_catalog()


def _catalog_entry(args, entry_id, kind):
    c = _load_catalog(args)
    entry = c.get(entry_id)
    if entry is None:
        raise InputError(f"--id: no catalog entry {entry_id!r}")
    if entry.kind != kind:
        raise InputError(f"--id: {entry_id!r} is a {entry.kind}, not a {kind}")
    return entry


# -- commands ------------------------------------------------------------------------


def cmd_rr(args):
    numerics = _numerics_from_args(args)
    seq = rr_hilbert_sequence(numerics, args.n)
    data = {
        "genus": numerics.genus,
        "kcube": numerics.kcube,
        "basket": numerics.basket.as_pairs(),
        "consistent": numerics.is_consistent,
        "fano_candidate": numerics.is_fano_candidate,
        "hilbert": list(seq),
        "non_integral": seq.non_integral,
        "negative": seq.negative,
    }
    rows = [[n, fmt(v)] for n, v in enumerate(seq)]
    text = f"{numerics}\n" + _table(["n", "h0(-nK)"], rows)
    if not seq.ok or not numerics.is_fano_candidate:
        text += "\nwarning: not integral/nonnegative or (-K)^3 <= 0"
    _emit(args, data, text)
    return EXIT_OK if seq.ok and numerics.is_fano_candidate and numerics.is_consistent else EXIT_FAILED


def _family_from_args(args) -> tuple[str, Family]:
    if args.id:
        entry = _catalog_entry(args, args.id, "family")
        return args.id, entry.payload
    if not args.weights or not args.degrees:
        raise InputError("give --id, or both --weights and --degrees")
    try:
        return "", Family.of(args.weights, *args.degrees)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_series(args):
    name, family = _family_from_args(args)
    depth = args.depth if args.depth is not None else default_match_depth(family)
    try:
        series = family_hilbert_series(family, depth)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    index = fano_index(family)
    data = {
        "id": name or None,
        "weights": list(family.weights),
        "degrees": list(family.degrees),
        "index": index,
        "kcube": family_anticanonical_cube(family) if index == 1 else None,
        "depth": depth,
        "hilbert": series,
    }
    text = f"{family}  (index {index})\n" + _table(["n", "coeff"], list(enumerate(series)))
    _emit(args, data, text)
    return EXIT_OK


def cmd_search(args):
    target = _numerics_from_args(args)
    found = search_candidates(
        target, args.codim, args.max_weight, args.depth, index=args.index, jobs=args.jobs
    )
    data = {
        "target": {"genus": target.genus, "kcube": target.kcube, "basket": target.basket.as_pairs()},
        "codim": args.codim,
        "max_weight": args.max_weight,
        "index": args.index,
        "match_depth": args.depth if args.depth is not None else "max(10, 2*sum(weights))",
        "candidates": [
            {
                "weights": list(f.weights),
                "degrees": list(f.degrees),
                "depth": args.depth if args.depth is not None else default_match_depth(f),
            }
            for f in found
        ],
    }
    rows = [[",".join(map(str, f.weights)), ",".join(map(str, f.degrees))] for f in found]
    text = f"target: {target}\n" + _table(["weights", "degrees"], rows)
    _emit(args, data, text)
    return EXIT_OK


def cmd_link(args):
    c = _load_catalog(args)
    if args.all:
        entries = c.of_kind("link")
    elif args.id:
        entries = [_catalog_entry(args, args.id, "link")]
    else:
        raise InputError("give --id or --all")
    depth = args.depth if args.depth is not None else 30
    reports = [(e.id, verify_link(e.payload, depth)) for e in entries]
    data = {"links": [dict(r.as_dict(), id=eid) for eid, r in reports]}
    blocks = []
    for eid, r in reports:
        rows = [[ch.name, "pass" if ch.passed else "FAIL", ch.detail] for ch in r.checks]
        blocks.append(f"{eid}: {r.label}\n" + _table(["check", "result", "detail"], rows))
    _emit(args, data, "\n\n".join(blocks))
    return EXIT_OK if all(r.passed for _, r in reports) else EXIT_FAILED


def _case_from_file(path) -> ExclusionCase:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"--case: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"--case: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("--case: expected a JSON object")
    for key in ("test", "params"):
        if key not in doc:
            raise InputError(f"--case: missing field {key!r}")
    if not isinstance(doc["params"], dict):
        raise InputError("--case: field 'params' must be an object")
    try:
        return ExclusionCase(doc["test"], doc["params"], doc.get("expected", {}), doc.get("label", str(path)))
    except ValueError as exc:
        raise InputError(f"--case: field 'test': {exc}") from None


def _inline_case(args) -> ExclusionCase:
    if args.center == "curve":
        if None in (args.asq, args.adotc, args.csq):
            raise InputError("exclude curve needs --asq, --adotc and --csq (or --case/--id)")
        params = {"Asq": fmt(args.asq), "AdotC": fmt(args.adotc), "Csq": fmt(args.csq)}
        return ExclusionCase("fixed_curve", params, label="curve")
    if args.h2s is not None:
        params = {"H2S_over_n2": fmt(args.h2s), "a1": fmt(args.a1), "a2": fmt(args.a2)}
        return ExclusionCase("mobile_point", params, label="point")
    if None in (args.asq, args.adotb, args.bsq):
        raise InputError("exclude point needs --h2s, or --asq, --adotb and --bsq (or --case/--id)")
    params = {"Asq": fmt(args.asq), "AdotB": fmt(args.adotb), "Bsq": fmt(args.bsq)}
    return ExclusionCase("fixed_curve_point", params, label="point on a fixed curve")


def cmd_exclude(args):
    if args.case:
        case = _case_from_file(args.case)
    elif args.id:
        case = _catalog_entry(args, args.id, "exclusion_case").payload
    else:
        case = _inline_case(args)
    try:
        report = replay_case(case)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{case.test}: {exc}") from None
    rows = [[k, json.dumps(_jsonable(v))] for k, v in sorted(report.computed.items())]
    rows.append(["verdict", report.verdict.value])
    text = f"{report.label} [{report.test}]\n" + _table(["quantity", "value"], rows)
    if report.mismatches:
        text += "\nmismatches:\n  " + "\n  ".join(report.mismatches)
    _emit(args, report.as_dict(), text)
    return EXIT_OK if report.reproduced else EXIT_FAILED


def cmd_threshold(args):
    try:
        data_in = MobileSystemData(args.n, tuple(tuple(p) for p in args.pair))
        c = canonical_threshold(data_in)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    weak = [i for i in range(len(data_in.pairs)) if is_weak_maximal(data_in, i)]
    data = {
        "n": args.n,
        "pairs": [list(p) for p in data_in.pairs],
        "canonical_threshold": c,
        "weak_maximal": weak,
    }
    rows = [[i, fmt(a), fmt(m), "yes" if i in weak else "no"] for i, (a, m) in enumerate(data_in.pairs)]
    text = f"canonical threshold {fmt(c)} (n = {args.n})\n" + _table(["i", "a_i", "m_i", "weak maximal"], rows)
    _emit(args, data, text)
    return EXIT_OK


def _entry_summary(e: cat.CatalogEntry) -> str:
    return str(e.payload.label) if e.kind in ("link", "exclusion_case") else str(e.payload)


def cmd_catalog(args):
    c = _load_catalog(args)
    if args.action == "list":
        data = {
            "schema_version": c.schema_version,
            "entries": [
                {"id": e.id, "kind": e.kind, "source": e.provenance.source} for e in c
            ],
        }
        rows = [[e.id, e.kind, e.provenance.source, _entry_summary(e)] for e in c]
        _emit(args, data, _table(["id", "kind", "source", "summary"], rows))
        return EXIT_OK
    if args.action == "show":
        if not args.entry:
            raise InputError("catalog show needs an entry id")
        entry = c.get(args.entry)
        if entry is None:
            raise InputError(f"no catalog entry {args.entry!r}")
        doc = cat.to_document(cat.Catalog((entry,)))["entries"][0]
        _emit(args, doc, json.dumps(doc, indent=2, sort_keys=True))
        return EXIT_OK
    results = cat.check_catalog(c, args.depth if args.depth is not None else 30)
    rows = [[r["id"], r["check"], "pass" if r["passed"] else "FAIL", r["detail"]] for r in results]
    _emit(args, {"results": results}, _table(["id", "check", "result", "detail"], rows))
    return EXIT_OK if all(r["passed"] for r in results) else EXIT_FAILED


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    common.add_argument("--catalog", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--depth", type=int, metavar="N", default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, metavar="N", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="fanolink",
        description="Exact numerics for Fano 3-folds, links and exclusion certificates.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def numerics_opts(p):
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--basket", type=_pair, action="append", metavar="R,A",
                       help="a point 1/r(a,r-a,1); repeat for each point")
        p.add_argument("--kcube", type=_rational, default=None,
                       help="override (-K)^3 instead of deriving it from genus and basket")

    p = sub.add_parser("rr", parents=[common], help="Riemann-Roch Hilbert sequence")
    numerics_opts(p)
    p.add_argument("--n", type=int, default=10, help="last degree (default 10)")
    p.set_defaults(func=cmd_rr)

    p = sub.add_parser("series", parents=[common], help="Hilbert series of a family")
    p.add_argument("--id")
    p.add_argument("--weights", type=_int_list)
    p.add_argument("--degrees", type=_int_list)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("search", parents=[common], help="families matching given numerics")
    numerics_opts(p)
    p.add_argument("--codim", type=int, choices=(1, 2), required=True)
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--index", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("link", parents=[common], help="link ledger")
    link_sub = p.add_subparsers(dest="action", required=True)
    v = link_sub.add_parser("verify", parents=[common], help="verify a cataloged link")
    v.add_argument("--id")
    v.add_argument("--all", action="store_true")
    v.set_defaults(func=cmd_link)

    p = sub.add_parser("exclude", parents=[common], help="replay an exclusion test")
    p.add_argument("center", choices=("curve", "point"))
    p.add_argument("--case", metavar="PATH", help="JSON file with test, params, expected")
    p.add_argument("--id", help="exclusion case from the catalog")
    p.add_argument("--asq", type=_rational)
    p.add_argument("--adotc", type=_rational)
    p.add_argument("--csq", type=_rational)
    p.add_argument("--adotb", type=_rational)
    p.add_argument("--bsq", type=_rational)
    p.add_argument("--h2s", type=_rational, help="H^2.S / n^2 for a mobile restriction")
    p.add_argument("--a1", type=_rational, default=Fraction(1))
    p.add_argument("--a2", type=_rational, default=Fraction(1))
    p.set_defaults(func=cmd_exclude)

    p = sub.add_parser("threshold", parents=[common], help="canonical threshold of a mobile system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pair", type=_pair, action="append", required=True, metavar="A,M")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("catalog", parents=[common], help="inspect the fixture catalog")
    p.add_argument("action", choices=("list", "show", "check"))
    p.add_argument("entry", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    for name, default in (("format", "table"), ("catalog", None), ("depth", None), ("jobs", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
