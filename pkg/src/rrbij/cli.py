"""Command-line interface: ``rrbij <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness, maps
from .catalog import UnknownIdentity, catalog_list, concrete_ids, default_order, verify_identity
from .families import _ARITY, FamilyId, SignedTriple, UnknownFamily, enumerate_family
from .notation import LABEL_STYLES, ParseError, parse_component, render, render_parts, split_components
from .partitions import Label, LabeledPartition, PartitionError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rrbij", description="Verify Rogers-Ramanujan type identities and run "
                "the partition bijections that prove them.")
    p.add_argument("--json", action="store_true", help="emit machine-readable records")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify-identity", help="compare both sides of catalog identities")
    v.add_argument("id", nargs="?", help="identity id, e.g. LW or LWGENK:2")
    v.add_argument("--order", type=int, help="truncation order N (default depends on the id)")
    v.add_argument("--all", action="store_true", help="verify every catalog entry")

    r = sub.add_parser("run-map", help="apply a map to one input")
    r.add_argument("map", choices=maps.MAP_IDS)
    r.add_argument("--input", required=True, help='e.g. "(3+3+5+9+9+15 | 14+16)"')
    r.add_argument("--inverse", action="store_true", help="run a bijection backwards")

    c = sub.add_parser("check-map", help="exhaustively check a map up to a weight")
    c.add_argument("map", choices=maps.MAP_IDS)
    c.add_argument("--max-weight", type=int)

    e = sub.add_parser("enumerate", help="list members of a partition family")
    e.add_argument("family", help='family id, e.g. R, Do, "AI(2)", "BVI(1,2)"')
    e.add_argument("--max-weight", type=int, default=10)

    t = sub.add_parser("emit-table", help="fixed points and cancelling pairs of an involution")
    t.add_argument("map", choices=maps.INVOLUTIONS)
    t.add_argument("--weight", type=int, required=True)

    a = sub.add_parser("run-all", help="run every suite and print the report")
    a.add_argument("--quick", action="store_true", help="smaller bounds")

    sub.add_parser("list", help="list identities, maps and families")
    return p


def _emit(args, text: str, record) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# input parsing --------------------------------------------------------------

def _labeled(text: str, style: str) -> LabeledPartition:
    obj = parse_component(text, style)
    if isinstance(obj, LabeledPartition):
        return obj
    # no suffixes: every part carries the style's unsuffixed label
    default = next((l for l, s in LABEL_STYLES[style].items() if s == ""), Label.NONE)
    return LabeledPartition.uniform(obj, default)


def _plain(text: str) -> tuple:
    obj = parse_component(text, "FULL")
    if isinstance(obj, LabeledPartition):
        raise ParseError(text, "labels are not used here")
    return obj


def _indices(text: str, count: int) -> tuple[int, ...]:
    pieces = "".join(text.split()).split(",")
    try:
        values = tuple(int(v) for v in pieces)
    except ValueError:
        raise ParseError(text, f"expected {count} comma-separated indices") from None
    if len(values) != count or any(v < 0 for v in values):
        raise ParseError(text, f"expected {count} comma-separated non-negative indices")
    return values


def _expect(comps: list[str], *counts: int) -> None:
    if len(comps) not in counts:
        want = " or ".join(map(str, counts))
        raise ParseError("|".join(comps), f"expected {want} component(s)")


def parse_input(map_id: str, text: str, inverse: bool):
    comps = split_components(text)
    if map_id == "phi":
        _expect(comps, 2)
        return (_labeled(comps[0], "AI"), _plain(comps[1]))
    if map_id == "iota":
        _expect(comps, 2)
        return (_labeled(comps[0], "AIII"), _plain(comps[1]))
    if map_id == "psi2":
        _expect(comps, 2, 3)
        t = SignedTriple(_plain(comps[0]), _plain(comps[1]))
        if len(comps) == 3 and _plain(comps[2]) != t.eta:
            raise ParseError(comps[2], f"eta must be {render_parts(t.eta)}")
        return t
    if map_id in ("alpha", "tau") and not inverse:
        _expect(comps, 1, 2, 3)
        comps = comps + [""] * (3 - len(comps))
        a, b = _indices(comps[0], 2)
        return (a, b, _plain(comps[1]), _plain(comps[2]))
    if map_id == "alpha":
        _expect(comps, 1)
        return _plain(comps[0])
    if map_id == "tau":
        _expect(comps, 1)
        return _labeled(comps[0], "FULL")
    _expect(comps, 2)
    return (_plain(comps[0]), _plain(comps[1]))


def render_output(map_id: str, obj, inverse: bool) -> str:
    sep = " | "
    if isinstance(obj, SignedTriple):
        return "(" + sep.join(render_parts(c) for c in (obj.lam, obj.mu, obj.eta)) + ")"
    if isinstance(obj, LabeledPartition):
        return "(" + render(obj, "FULL") + ")"
    if map_id in ("alpha", "tau") and isinstance(obj, tuple) and len(obj) == 4:
        a, b, mu, eta = obj
        return f"({a},{b}{sep}{render_parts(mu)}{sep}{render_parts(eta)})"
    if map_id == "alpha":
        return "(" + render_parts(obj) + ")"
    style = harness.STYLE.get(map_id, "FULL")
    return "(" + sep.join(render(c, style) for c in obj) + ")"


# commands -------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.all:
        ids = catalog_list()
    elif args.id:
        ids = [args.id]
    else:
        raise UsageError("give an identity id or --all")
    status = EXIT_OK
    for ident in ids:
        try:
            concrete = concrete_ids(ident)
            for cid in concrete:
                order = args.order if args.order is not None else default_order(cid)
                report = verify_identity(cid, order)
                if report.equal:
                    text = f"{report.id}: equal to q^{order}"
                else:
                    e, a, b, lhs, rhs = report.first_discrepancy
                    text = (f"{report.id}: NOT equal; first difference at x^{a} y^{b} "
                            f"q^{Fraction(e, 4)}: {lhs} vs {rhs}")
                    status = EXIT_FAIL
                _emit(args, text, report.as_record())
        except UnknownIdentity:
            raise UsageError(f"unknown identity {ident!r}; try 'rrbij list'") from None
    return status


def cmd_run_map(args) -> int:
    obj = parse_input(args.map, args.input, args.inverse)
    report = maps.run_map(args.map, obj, args.inverse)
    out_text = render_output(args.map, report.output, not args.inverse)
    record = {
        "map": args.map, "inverse": args.inverse,
        "input": args.input, "output": out_text,
        "weight_in": report.weight_in, "weight_out": report.weight_out,
        "sign_in": report.sign_in, "sign_out": report.sign_out,
        "fixed_point": report.is_fixed_point,
    }
    _emit(args, out_text, record)
    return EXIT_OK


def cmd_check_map(args) -> int:
    if args.map in maps.INVOLUTIONS:
        w = args.max_weight if args.max_weight is not None else {"phi": 20, "iota": 15}.get(args.map, 60)
        result = harness.check_involution(args.map, w)
    else:
        result = harness.check_bijection(args.map, args.max_weight)
    _emit(args, str(result), result.as_record())
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_enumerate(args) -> int:
    try:
        fam = FamilyId.parse(args.family)
    except UnknownFamily as exc:
        raise UsageError(f"unknown family {args.family!r} ({exc.args[0]})") from None
    members = enumerate_family(fam, args.max_weight)
    if fam.name == "AIIL":
        rows = ["(" + render_parts(m) + " | " + render_parts(e) + ")" for m, e in members]
    elif fam.name == "MII":
        rows = [render_output("psi2", t, False) for t in members]
    else:
        style = {"AI": "AI", "AIII": "AIII"}.get(fam.name, "FULL")
        rows = [render(m, style) for m in members]
    text = "\n".join(rows + [f"# {len(rows)} members of {fam} with weight <= {args.max_weight}"])
    _emit(args, text, {"family": str(fam), "max_weight": args.max_weight,
                       "count": len(rows), "members": rows})
    return EXIT_OK


def cmd_emit_table(args) -> int:
    fixed, pairs = harness.involution_table(args.map, args.weight)
    _emit(args, harness.emit_table(args.map, args.weight),
          {"map": args.map, "weight": args.weight, "fixed": fixed,
           "pairs": [list(p) for p in pairs]})
    return EXIT_OK


def cmd_run_all(args) -> int:
    results = harness.run_all(quick=args.quick)
    sys.stdout.write(harness.format_report(results, as_json=args.json))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_list(args) -> int:
    families = sorted(_ARITY)
    text = "\n".join([
        "identities: " + " ".join(catalog_list()),
        "maps: " + " ".join(maps.MAP_IDS),
        "families: " + " ".join(families),
    ])
    _emit(args, text, {"identities": catalog_list(), "maps": list(maps.MAP_IDS),
                       "families": families})
    return EXIT_OK


COMMANDS = {
    "verify-identity": cmd_verify,
    "run-map": cmd_run_map,
    "check-map": cmd_check_map,
    "enumerate": cmd_enumerate,
    "emit-table": cmd_emit_table,
    "run-all": cmd_run_all,
    "list": cmd_list,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"rrbij: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, PartitionError, maps.MapError) as exc:
        print(f"rrbij: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
