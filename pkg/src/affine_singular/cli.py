"""Command line front end.

Subcommands:

    alg info          dump a structure table (basis, brackets, form)
    singular verify   annihilation check for a determinant vector
    singular factor   the symbolic-level lowering-factor identity
    zhu project       projection of the determinant vector onto U(g)
    zhu phi           oscillator image of the finite determinant power
    classify sp6      the sp_6 top-level classification (alias: exc6)

Every check prints a report; --json emits it as canonical JSON.  Reports of
singular verify/factor are cached on disk keyed by the full parameter set,
so repeated runs are byte-stable; corrupted or stale cache records are
ignored with a warning.
"""

from __future__ import annotations

import argparse
import sys

from . import cache as cache_mod
from . import category_o, determinants, vacuum, zhu
from .determinants import DeterminantSpec
from .liealg import build_algebra
from .scalars import format_rational, parse_rational
from .serialize import canonical_json

PACKAGE_VERSION = "0.1.0"


def _versions() -> dict:
    return {"package": PACKAGE_VERSION, "cache_format": cache_mod.FORMAT_VERSION}


def _report_obj(report) -> dict:
    obj = report.to_obj()
    obj["versions"] = _versions()
    return obj


def _render_report(obj) -> list:
    lines = ["%s  %s" % ("PASS" if obj["verdict"] else "FAIL", obj["claim"])]
    params = obj.get("parameters") or {}
    if params:
        lines.append("  parameters: " + ", ".join("%s=%s" % kv for kv in sorted(params.items())))
    witness = obj.get("witness")
    if witness:
        for key in sorted(witness):
            lines.append("  witness %s: %s" % (key, witness[key]))
    for note in obj.get("notes", []):
        lines.append("  note: " + note)
    details = obj.get("details")
    if details:
        for key in sorted(details):
            value = details[key]
            if isinstance(value, (str, int, bool)):
                lines.append("  %s: %s" % (key, value))
    lines.append("  timing: %d ms" % obj.get("timing_ms", 0))
    return lines


def _emit(args, obj, text_lines=None) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(canonical_json(obj))
    else:
        for line in text_lines if text_lines is not None else _render_report(obj):
            print(line)


def _spec_from(args) -> DeterminantSpec:
    return DeterminantSpec(args.type, args.rank, args.m, args.n)


def _parse_level(args):
    if getattr(args, "symbolic", False):
        return None
    if getattr(args, "level", None) is not None:
        return parse_rational(args.level)
    return "auto"


def _cached_report(args, key, compute):
    """Fetch the report payload from cache or compute and store it."""
    directory = args.cache_dir or cache_mod.default_cache_dir()
    warnings = []
    obj = None
    if not args.no_cache:
        obj, warnings = cache_mod.cache_get(directory, key)
    if obj is None:
        obj = _report_obj(compute())
        if warnings:
            obj.setdefault("notes", []).extend(warnings)
        if not args.no_cache:
            cache_mod.cache_put(directory, key, obj)
    return obj


def cmd_alg_info(args) -> int:
    table = build_algebra(args.type, args.rank)
    if args.json:
        obj = {
            "algebra": "%s_%d" % (table.kind, table.rank),
            "dimension": table.dimension,
            "basis": [
                {"text": table.text(n),
                 "weight": [format_rational(c) for c in table.weights[n]],
                 "block": table.blocks[n]}
                for n in range(table.dimension)
            ],
            "brackets": [
                {"pair": [table.text(a), table.text(b)],
                 "value": [[table.text(z), format_rational(c)] for z, c in table.bracket(a, b)]}
                for a in range(table.dimension)
                for b in range(a + 1, table.dimension)
                if table.bracket(a, b)
            ],
            "form": [
                {"pair": [table.text(a), table.text(b)], "value": format_rational(table.form(a, b))}
                for a in range(table.dimension)
                for b in range(a, table.dimension)
                if table.form(a, b)
            ],
            "versions": _versions(),
        }
        _emit(args, obj)
    else:
        for line in table.info_lines():
            print(line)
    return 0


def cmd_singular_verify(args) -> int:
    spec = _spec_from(args)
    level = _parse_level(args)
    level_text = "symbolic" if level is None else format_rational(spec.level if level == "auto" else level)
    key = {
        "command": "singular-verify",
        "kind": spec.kind, "rank": spec.rank, "m": spec.m, "n": spec.n,
        "level": level_text,
    }
    obj = _cached_report(args, key, lambda: determinants.verify_singular(spec, level))
    _emit(args, obj)
    return 0 if obj["verdict"] else 1


def cmd_singular_factor(args) -> int:
    spec = _spec_from(args)
    key = {
        "command": "singular-factor",
        "kind": spec.kind, "rank": spec.rank, "m": spec.m, "n": spec.n,
        "level": "symbolic",
    }
    obj = _cached_report(args, key, lambda: determinants.lowering_factor_check(spec))
    _emit(args, obj)
    return 0 if obj["verdict"] else 1


def cmd_zhu_project(args) -> int:
    spec = _spec_from(args)
    obj = _report_obj(zhu.verify_zhu_generator(spec))
    _emit(args, obj)
    return 0 if obj["verdict"] else 1


def cmd_zhu_phi(args) -> int:
    spec = _spec_from(args)
    obj = _report_obj(zhu.verify_weyl_vanishing(spec))
    _emit(args, obj)
    return 0 if obj["verdict"] else 1


def cmd_classify(args) -> int:
    report = category_o.classify_sp6(seed=args.seed, controls=args.controls, dim_cap=args.dim_cap)
    obj = _report_obj(report)
    if args.json:
        _emit(args, obj)
    else:
        lines = _render_report(obj)
        details = obj.get("details", {})
        for entry in details.get("lines", []):
            lines.append("  line %-16s weight (%s)  vanishes: %s" % (
                entry["line"], ", ".join(entry["finite_weight"]), entry["all_polynomials_vanish"]))
        for entry in details.get("points", []):
            lines.append("  point %-22s weight (%s)  vanishes: %s" % (
                entry["weight"], ", ".join(entry["finite_weight"]), entry["all_polynomials_vanish"]))
        ok = sum(1 for c in details.get("negative_controls", []) if c["violates"])
        lines.append("  off-locus controls violating a polynomial: %d/%d" % (
            ok, len(details.get("negative_controls", []))))
        _emit(args, obj, lines)
    return 0 if obj["verdict"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-singular",
        description="Exact checks for determinant singular vectors in vacuum modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a canonical JSON report")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--type", choices=("C", "A"), required=True, help="algebra family")
    algebra.add_argument("--rank", type=int, required=True, help="rank l")

    sized = argparse.ArgumentParser(add_help=False, parents=[algebra])
    sized.add_argument("-m", type=int, required=True, help="matrix size")
    sized.add_argument("-n", type=int, default=1, help="determinant power")

    caching = argparse.ArgumentParser(add_help=False)
    caching.add_argument("--cache-dir", default=None,
                         help="cache directory (default: AFFINE_SINGULAR_CACHE or ~/.cache/affine-singular)")
    caching.add_argument("--no-cache", action="store_true", help="bypass the on-disk cache")

    alg = sub.add_parser("alg", help="structure table commands").add_subparsers(
        dest="subcommand", required=True)
    p = alg.add_parser("info", parents=[common, algebra], help="dump basis, brackets and form")
    p.set_defaults(func=cmd_alg_info)

    singular = sub.add_parser("singular", help="determinant vector checks").add_subparsers(
        dest="subcommand", required=True)
    p = singular.add_parser("verify", parents=[common, sized, caching],
                            help="annihilation check at a numeric level")
    p.add_argument("--level", default=None, help="rational level override, e.g. -1/2")
    p.add_argument("--symbolic", action="store_true", help="keep the level symbolic")
    p.set_defaults(func=cmd_singular_verify)
    p = singular.add_parser("factor", parents=[common, sized, caching],
                            help="symbolic lowering-factor identity")
    p.set_defaults(func=cmd_singular_factor)

    zhu_cmd = sub.add_parser("zhu", help="projection to U(g) and the oscillator image").add_subparsers(
        dest="subcommand", required=True)
    p = zhu_cmd.add_parser("project", parents=[common, sized],
                           help="determinant vector projects onto the finite determinant power")
    p.set_defaults(func=cmd_zhu_project)
    p = zhu_cmd.add_parser("phi", parents=[common, sized],
                           help="oscillator image of the finite determinant power")
    p.set_defaults(func=cmd_zhu_phi)

    classify = sub.add_parser("classify", help="highest weight classifications").add_subparsers(
        dest="subcommand", required=True)
    for name in ("sp6", "exc6"):
        p = classify.add_parser(name, parents=[common],
                                help="sp_6 top-level classification" + ("" if name == "sp6" else " (alias)"))
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--controls", type=int, default=20)
        p.add_argument("--dim-cap", type=int, default=2000)
        p.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
