"""Command-line interface.

Four subcommands: `describe` prints the cross-section and polytope summary,
`irreps` the inventory of irreducible representations with the squared-degree
checksum, `character` the character values of a given element, and `verify`
the independent property suite.  Identical configuration always produces
byte-identical JSON; CSV output is restricted to character tables.

Exit codes: 0 success, 1 failed verification, 2 bad configuration
(family, rank, subset J, bounds, format), 3 unparseable or invalid element.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import (
    BadElement,
    BadJ,
    GroupTooLarge,
    UnsupportedType,
)
from .monoid import build_context, enumerate_monoid, format_element, parse_element
from .oracle import exhaustive_property_suite
from .rep import all_irreducibles
from .weyl import FAMILIES


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, choices=sorted(FAMILIES))
    common.add_argument("--rank", required=True, type=int)
    common.add_argument(
        "--J",
        default="",
        help="comma-separated simple root indices, e.g. 2,3 (empty for none)",
    )
    common.add_argument("--format", default="text", choices=["json", "csv", "text"])
    common.add_argument(
        "--max-order", type=int, default=100000, help="largest allowed group order"
    )
    common.add_argument(
        "--max-monoid", type=int, default=100000, help="largest allowed monoid order"
    )
    parser = argparse.ArgumentParser(
        prog="renner",
        description="Renner monoids from (family, rank, J): structure, "
        "representations, characters, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("describe", parents=[common], help="cross-section and polytope summary")
    sub.add_parser("irreps", parents=[common], help="inventory of irreducibles")
    pc = sub.add_parser("character", parents=[common], help="character values of an element")
    pc.add_argument(
        "--element",
        required=True,
        help='element syntax: zero | face=[v1,...];images=[w1,...]',
    )
    pc.add_argument("--entry", type=int, default=None, help="restrict to one entry id")
    sub.add_parser("verify", parents=[common], help="run the independent property suite")
    return parser


def _parse_J(text):
    text = text.strip()
    if not text:
        return set()
    try:
        return {int(tok) for tok in text.split(",") if tok.strip()}
    except ValueError as exc:
        raise BadJ("J must be a comma-separated list of integers") from exc


def _json_label(label):
    if isinstance(label, tuple):
        return [_json_label(x) for x in label]
    return label


def _text_label(label):
    if isinstance(label, str):
        return label
    return repr(label).replace(" ", "")


def _emit_json(payload):
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def cmd_describe(ctx, fmt):
    entries = []
    for e in ctx.cs.entries:
        entries.append(
            {
                "eid": e.eid,
                "zero": e.is_zero,
                "lambda_star": sorted(e.X or ()),
                "lambda_substar": sorted(e.lambda_substar or ()),
                "lambda": sorted(e.lam or ()),
                "orbit_size": e.d_e,
                "factor_group_order": e.wstar.order,
                "class_size": e.class_size,
            }
        )
    payload = {
        "family": ctx.datum.family,
        "rank": ctx.datum.rank,
        "J": sorted(ctx.J),
        "group_order": ctx.group.order,
        "monoid_order": 1 + sum(e.class_size for e in ctx.cs.nonzero_entries()),
        "vertex_count": len(ctx.vertices.coords),
        "f_vector": list(ctx.lattice.f_vector),
        "entries": entries,
    }
    if fmt == "json":
        _emit_json(payload)
        return 0
    print(
        "family %s rank %d J=%s: |W| = %d, |R| = %d"
        % (
            payload["family"],
            payload["rank"],
            payload["J"],
            payload["group_order"],
            payload["monoid_order"],
        )
    )
    print("f-vector of the weight polytope:", tuple(payload["f_vector"]))
    print("cross-section entries:")
    for e in entries:
        tag = "zero" if e["zero"] else str(e["lambda_star"])
        print(
            "  entry %d  lambda*=%s  lambda_*=%s  orbit %d  factor group %d  class %d"
            % (
                e["eid"],
                tag,
                e["lambda_substar"],
                e["orbit_size"],
                e["factor_group_order"],
                e["class_size"],
            )
        )
    return 0


def cmd_irreps(ctx, fmt, max_monoid):
    monoid = enumerate_monoid(ctx, max_monoid=max_monoid)
    irr = all_irreducibles(ctx)
    items = []
    for r in irr:
        items.append(
            {
                "entry": r.entry.eid,
                "chi_row": r.chi_row,
                "label": _json_label(r.label),
                "factor_degree": 1 if r.entry.is_zero else r.degree // r.entry.d_e,
                "degree": r.degree,
                "has_matrices": r.has_matrices,
            }
        )
    checksum = sum(r.degree ** 2 for r in irr)
    payload = {
        "family": ctx.datum.family,
        "rank": ctx.datum.rank,
        "J": sorted(ctx.J),
        "monoid_order": monoid.order,
        "irreducible_count": len(irr),
        "sum_of_squared_degrees": checksum,
        "irreducibles": items,
    }
    if fmt == "json":
        _emit_json(payload)
        return 0
    print(
        "%d irreducibles for family %s rank %d J=%s"
        % (len(irr), ctx.datum.family, ctx.datum.rank, sorted(ctx.J))
    )
    for r in irr:
        mode = "matrices" if r.has_matrices else "characters only"
        print(
            "  entry %d  label %-24s degree %-4d (%s)"
            % (r.entry.eid, _text_label(r.label), r.degree, mode)
        )
    print(
        "checksum: sum of squared degrees = %d, monoid order = %d"
        % (checksum, monoid.order)
    )
    return 0 if checksum == monoid.order else 1


def cmd_character(ctx, fmt, element_text, entry_id, max_monoid):
    enumerate_monoid(ctx, max_monoid=max_monoid)
    sigma = parse_element(ctx, element_text)
    irr = all_irreducibles(ctx)
    if entry_id is not None:
        if entry_id not in {e.eid for e in ctx.cs.entries}:
            raise BadJ("no entry with id %d" % entry_id)
        irr = [r for r in irr if r.entry.eid == entry_id]
    values = [r.character(sigma) for r in irr]
    if fmt == "json":
        _emit_json(
            {
                "element": format_element(sigma),
                "values": [
                    {
                        "entry": r.entry.eid,
                        "chi_row": r.chi_row,
                        "label": _json_label(r.label),
                        "degree": r.degree,
                        "value": v,
                    }
                    for r, v in zip(irr, values)
                ],
            }
        )
        return 0
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["entry", "chi_row", "label", "degree", "value"])
        for r, v in zip(irr, values):
            writer.writerow(
                [r.entry.eid, r.chi_row, _text_label(r.label), r.degree, v]
            )
        sys.stdout.write(buf.getvalue())
        return 0
    print("element:", format_element(sigma))
    for r, v in zip(irr, values):
        print(
            "  entry %d  label %-24s degree %-4d value %d"
            % (r.entry.eid, _text_label(r.label), r.degree, v)
        )
    return 0


def cmd_verify(ctx, fmt, max_monoid):
    monoid = enumerate_monoid(ctx, max_monoid=max_monoid)
    report = exhaustive_property_suite(monoid)
    ok = all(item["status"] == "pass" for item in report)
    if fmt == "json":
        _emit_json(
            {
                "family": ctx.datum.family,
                "rank": ctx.datum.rank,
                "J": sorted(ctx.J),
                "monoid_order": monoid.order,
                "all_pass": ok,
                "checks": report,
            }
        )
    else:
        for item in report:
            line = "%-28s %s" % (item["check"], item["status"])
            if item["status"] != "pass" and "witness" in item:
                line += "  witness: %s" % item["witness"]
            print(line)
        print("result:", "all checks passed" if ok else "FAILURES above")
    return 0 if ok else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "character":
        print("error: CSV output is only available for character tables", file=sys.stderr)
        return 2
    try:
        J = _parse_J(args.J)
        ctx = build_context(args.family, args.rank, J, max_order=args.max_order)
        if args.command == "describe":
            return cmd_describe(ctx, args.format)
        if args.command == "irreps":
            return cmd_irreps(ctx, args.format, args.max_monoid)
        if args.command == "character":
            return cmd_character(ctx, args.format, args.element, args.entry, args.max_monoid)
        return cmd_verify(ctx, args.format, args.max_monoid)
    except (BadJ, UnsupportedType, GroupTooLarge) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BadElement as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
