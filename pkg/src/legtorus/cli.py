"""Deterministic command-line interface.

Every subcommand writes a single JSON document (or, for ``range``, TSV or
SVG) to stdout, newline terminated, with sorted keys and no timestamps:
the same query always produces the same bytes.  Exit codes: 0 on success,
1 on a domain error (reported as {"error": ...} on stdout), 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classes, contact, lattice, oracle, stable

_SIGNS = {"+": 1, "-": -1}


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True) + "\n"


def _parse_direction(text: str) -> lattice.Direction:
    parts = text.split(",")
    try:
        values = [int(part) for part in parts]
    except ValueError:
        values = []
    if len(values) != 3:
        raise ValueError("direction must be three comma-separated integers")
    return lattice.Direction(*values)


def _parse_vec3(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    try:
        values = tuple(int(part) for part in parts)
    except ValueError:
        values = ()
    if len(values) != 3:
        raise ValueError("vector must be three comma-separated integers")
    return values


def _parse_span(text: str) -> contact.TorusSpan:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError("span must be b1,b2,b3:c1,c2,c3")
    return contact.TorusSpan(_parse_vec3(parts[0]), _parse_vec3(parts[1]))


def _parse_presentation(text: str, cs, d) -> classes.Presentation:
    try:
        values = [int(part) for part in text.split(":")]
    except ValueError:
        raise ValueError(f"malformed presentation {text!r}")
    if lattice.knot_type_kind(d).vertical:
        if len(values) != 3:
            raise ValueError("vertical presentations use base:p:m")
        base, p, m = values
        return classes.Presentation(cs, d, base=base, p=p, m=m)
    if len(values) != 2:
        raise ValueError("non-vertical presentations use p:m")
    p, m = values
    return classes.Presentation(cs, d, p=p, m=m)


def _parse_sign(text: str) -> int:
    if text not in _SIGNS:
        raise ValueError("sign must be + or -")
    return _SIGNS[text]


def _sign_label(sign: int) -> str:
    return "+" if sign > 0 else "-"


def _context(args) -> tuple[contact.ContactStructure, lattice.Direction]:
    return contact.ContactStructure(args.n), _parse_direction(args.direction)


def _cmd_tbmax(args) -> str:
    cs, d = _context(args)
    return _json({"tb_max": contact.tb_max(cs, d)})


def _cmd_dividing_profile(args) -> str:
    cs = contact.ContactStructure(args.n)
    profile = contact.dividing_profile(cs, _parse_span(args.span))
    return _json({"slope": str(profile.slope), "count": profile.count})


def _cmd_count(args) -> str:
    cs, d = _context(args)
    return _json({"count": classes.count_classes(cs, d, args.tb, args.r)})


def _cmd_classify(args) -> str:
    cs, d = _context(args)
    pres = [_parse_presentation(text, cs, d) for text in args.pres]
    if len(pres) == 1:
        return _json({"class": classes.canonicalize(pres[0]).as_dict()})
    if len(pres) == 2:
        return _json({"isotopic": classes.is_isotopic(pres[0], pres[1])})
    raise ValueError("classify takes one or two presentations")


def _cmd_stabilize(args) -> str:
    cs, d = _context(args)
    pres = _parse_presentation(args.pres, cs, d)
    result = stable.stabilize(classes.canonicalize(pres), _parse_sign(args.sign))
    return _json({"class": result.as_dict()})


def _cmd_destabilize(args) -> str:
    cs, d = _context(args)
    pres = _parse_presentation(args.pres, cs, d)
    parents = [
        {"class": parent.as_dict(), "sign": _sign_label(sign)}
        for parent, sign in stable.destabilize_parents(classes.canonicalize(pres))
    ]
    parents.sort(key=lambda item: json.dumps(item, sort_keys=True))
    return _json({"parents": parents})


def _cmd_range(args) -> str:
    cs, d = _context(args)
    rows = classes.enumerate_range(cs, d, args.tb_min)
    top = contact.tb_max(cs, d)
    if args.format == "tsv":
        lines = ["tb\tr\tcount"]
        lines.extend(f"{tb}\t{r}\t{count}" for tb, r, count in rows)
        return "\n".join(lines) + "\n"
    if args.format == "svg":
        return _render_svg(cs.n, d, top, args.tb_min, rows)
    return _json({
        "n": cs.n,
        "direction": list(d.as_tuple()),
        "tb_max": top,
        "rows": [{"tb": tb, "r": r, "count": count} for tb, r, count in rows],
    })


def _cmd_stable_merge(args) -> str:
    cs, d = _context(args)
    if len(args.pres) != 2:
        raise ValueError("stable-merge takes exactly two presentations")
    pres = [_parse_presentation(text, cs, d) for text in args.pres]
    merge = stable.minimal_mixed_merge(pres[0], pres[1])
    return _json({"merge": list(merge) if merge is not None else None})


def _cmd_transverse(args) -> str:
    cs, d = _context(args)
    if args.sl is not None:
        return _json({"count": stable.negative_stable_class_count(cs, d, args.sl)})
    return _json({"transversally_simple": stable.is_transversally_simple(cs, d)})


def _cmd_oracle(args) -> str:
    cs, d = _context(args)
    report = oracle.verify_against_closed_form(cs, d, args.depth)
    return _json(report.as_dict())


def _render_svg(n: int, d: lattice.Direction, tb_top: int, tb_min: int, rows) -> str:
    span = tb_top - tb_min
    cell = 36
    left, top_margin = 64, 48
    width = left + (2 * span + 1) * cell + 24
    height = top_margin + (span + 1) * cell + 40
    counts = {(tb, r): count for tb, r, count in rows}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f'<title>Legendrian class counts, n={n}, direction={d.as_tuple()}</title>',
        f'<text x="{left}" y="24" font-family="monospace" font-size="14">'
        f'n={n} direction={d.as_tuple()} tb_max={tb_top}</text>',
    ]
    for tb in range(tb_top, tb_min - 1, -1):
        y = top_margin + (tb_top - tb) * cell
        out.append(
            f'<text x="8" y="{y + cell // 2 + 4}" font-family="monospace" '
            f'font-size="12">{tb}</text>'
        )
        for r in range(-span, span + 1):
            count = counts.get((tb, r))
            if count is None:
                continue
            x = left + (r + span) * cell
            out.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                'fill="#eef2ff" stroke="#445588"/>'
            )
            out.append(
                f'<text x="{x + cell // 2}" y="{y + cell // 2 + 4}" '
                'font-family="monospace" font-size="12" '
                f'text-anchor="middle">{count}</text>'
            )
    base_y = top_margin + (span + 1) * cell + 16
    for r in range(-span, span + 1):
        x = left + (r + span) * cell
        out.append(
            f'<text x="{x + cell // 2}" y="{base_y}" font-family="monospace" '
            f'font-size="12" text-anchor="middle">{r}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _add_direction_options(parser) -> None:
    parser.add_argument("--n", type=int, required=True, help="twisting parameter")
    parser.add_argument("--direction", required=True, help="c1,c2,c3 primitive vector")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legtorus",
        description="Classify Legendrian linear curves in tight contact structures on the 3-torus.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None,
                        help="write the output to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tbmax", parents=[common],
                        help="maximal Thurston-Bennequin number of a knot type")
    _add_direction_options(sp)
    sp.set_defaults(handler=_cmd_tbmax)

    sp = sub.add_parser("dividing-profile", parents=[common],
                        help="slope and curve count of a convex linear torus")
    sp.add_argument("--n", type=int, required=True, help="twisting parameter")
    sp.add_argument("--span", required=True, help="b1,b2,b3:c1,c2,c3 spanning vectors")
    sp.set_defaults(handler=_cmd_dividing_profile)

    sp = sub.add_parser("count", parents=[common],
                        help="number of classes with given invariants")
    _add_direction_options(sp)
    sp.add_argument("--tb", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(handler=_cmd_count)

    sp = sub.add_parser("classify", parents=[common],
                        help="canonical form, or isotopy of two presentations")
    _add_direction_options(sp)
    sp.add_argument("--pres", action="append", required=True,
                    help="base:p:m for vertical kinds, p:m otherwise; repeatable")
    sp.set_defaults(handler=_cmd_classify)

    sp = sub.add_parser("stabilize", parents=[common],
                        help="stabilise the class of a presentation once")
    _add_direction_options(sp)
    sp.add_argument("--pres", required=True)
    sp.add_argument("--sign", required=True, help="+ or -")
    sp.set_defaults(handler=_cmd_stabilize)

    sp = sub.add_parser("destabilize", parents=[common],
                        help="all destabilisations of the class of a presentation")
    _add_direction_options(sp)
    sp.add_argument("--pres", required=True)
    sp.set_defaults(handler=_cmd_destabilize)

    sp = sub.add_parser("range", parents=[common],
                        help="class counts for all tb down to a floor")
    _add_direction_options(sp)
    sp.add_argument("--tb-min", type=int, required=True)
    sp.add_argument("--format", choices=("json", "tsv", "svg"), default="json")
    sp.set_defaults(handler=_cmd_range)

    sp = sub.add_parser("stable-merge", parents=[common],
                        help="minimal extra stabilisations merging two curves")
    _add_direction_options(sp)
    sp.add_argument("--pres", action="append", required=True)
    sp.set_defaults(handler=_cmd_stable_merge)

    sp = sub.add_parser("transverse", parents=[common],
                        help="negative-stable class counts and simplicity")
    _add_direction_options(sp)
    sp.add_argument("--sl", type=int, default=None)
    sp.set_defaults(handler=_cmd_transverse)

    sp = sub.add_parser("oracle", parents=[common],
                        help="compare the word quotient with the closed form")
    _add_direction_options(sp)
    sp.add_argument("--depth", type=int, required=True)
    sp.set_defaults(handler=_cmd_oracle)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        output = args.handler(args)
    except ValueError as exc:
        sys.stdout.write(_json({"error": str(exc)}))
        return 1
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0


def main(argv=None) -> None:
    raise SystemExit(run(sys.argv[1:] if argv is None else argv))
