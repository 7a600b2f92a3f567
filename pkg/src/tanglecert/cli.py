"""Command-line front end.

Subcommands: color, det, certify, cut, build, closure, krebes, report.
Exit codes: 0 when the requested object was found or produced, 1 when a
search legitimately comes up empty, 2 on bad input.  --json switches to
machine output; every JSON document carries "schema": 1, and a fixed seed
makes reruns byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .colorings import (
    ColoringError,
    determinant,
    fox_solution_space,
    link_determinant,
    parse_quandle,
    quandle_colorings,
)
from .diagram import Diagram, DiagramError, components, parse_diagram, serialize
from .moves import records_to_json
from .persistence import (
    CertificateError,
    build_T_plus_Tstar,
    cut_arc_twice,
    cut_two_arcs,
    find_certificate_report,
    irreducibility_report,
    krebes_gcd,
    verify_certificate,
)
from .tangle import (
    denominator_closure,
    numerator_closure,
    rational_tangle,
    tangle_fraction,
)

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2


def _load(path: str) -> Diagram:
    return parse_diagram(Path(path).read_text())


def _twists(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise DiagramError(f"bad twist vector {text!r}")


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_color(args) -> int:
    d = _load(args.diagram)
    if args.quandle:
        q = parse_quandle(Path(args.quandle).read_text(), name=Path(args.quandle).stem)
        search = quandle_colorings(d, q, cap=args.enumerate or 10 ** 6)
        nontrivial = any(c.nontrivial for c in search)
        payload = {
            "schema": 1,
            "quandle": q.name,
            "count": len(search),
            "complete": search.complete,
            "nontrivial": nontrivial,
        }
        lines = [
            f"{len(search)} colorings by {q.name}"
            + ("" if search.complete else " (truncated)")
            + f", nontrivial: {'yes' if nontrivial else 'no'}"
        ]
        if args.enumerate:
            payload["colorings"] = [
                {
                    "quandle": q.name,
                    "colors": {str(a): v for a, v in sorted(c.colors.items())},
                    "nontrivial": c.nontrivial,
                }
                for c in search
            ]
            lines += [str(sorted(c.colors.items())) for c in search]
        _emit(payload, args.json, lines)
        return EXIT_OK
    space = fox_solution_space(d, args.mod)
    nontrivial = space.count > args.mod
    payload = {
        "schema": 1,
        "modulus": args.mod,
        "count": space.count,
        "nontrivial": nontrivial,
    }
    lines = [f"{space.count} colorings, nontrivial: {'yes' if nontrivial else 'no'}"]
    if args.enumerate:
        colorings = list(space.colorings(cap=args.enumerate))
        payload["colorings"] = [
            {
                "modulus": args.mod,
                "colors": {str(a): v for a, v in sorted(c.colors.items())},
                "nontrivial": c.nontrivial,
            }
            for c in colorings
        ]
        lines += [str(sorted(c.colors.items())) for c in colorings]
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_det(args) -> int:
    d = _load(args.diagram)
    n = len(components(d))
    value = determinant(d) if n == 1 and not d.boundary else link_determinant(d)
    _emit(
        {"schema": 1, "determinant": value, "components": n},
        args.json,
        [f"determinant: {value} ({n} component{'s' if n != 1 else ''})"],
    )
    return EXIT_OK


def cmd_certify(args) -> int:
    t = _load(args.tangle)
    moduli = [int(m) for m in args.mods.split(",")] if args.mods else None
    quandles = tuple(
        parse_quandle(Path(p).read_text(), name=Path(p).stem)
        for p in (args.quandles.split(",") if args.quandles else [])
    )
    report = find_certificate_report(t, moduli, quandles)
    if report.certificate is None:
        reasons = []
        if report.cannot_exist:
            reasons.append("krebes gcd = 1: no coloring certificate can exist")
        for entry in report.entries:
            if entry.get("clash"):
                a, b = entry["clash"]
                reasons.append(
                    f"mod {entry['fox']}: propagation forces arcs {a} = {b}; only trivial colorings"
                )
        payload = report.to_json()
        payload["reasons"] = reasons
        _emit(payload, args.json, ["none"] + reasons)
        return EXIT_NOT_FOUND
    cert = report.certificate
    payload = cert.to_json(args.tangle)
    lines = [
        f"certificate: {'fox mod ' + str(cert.kind[1]) if cert.kind[0] == 'fox' else cert.kind[1].name}",
        f"boundary color: {cert.boundary_color}, witness: {cert.witness}",
    ]
    if args.verify:
        vrep = verify_certificate(t, cert, trials=args.verify, seed=args.seed)
        payload["verification"] = vrep.to_json()
        lines.append(f"verification: {vrep.passes} closures pass, {vrep.skipped} skipped")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_cut(args) -> int:
    d = _load(args.diagram)
    space = fox_solution_space(d, args.mod)
    if args.arc2 is None:
        chosen = space.first_nonconstant()
        if chosen is None:
            print(f"no nontrivial coloring mod {args.mod}", file=sys.stderr)
            return EXIT_NOT_FOUND
        t, cert = cut_arc_twice(d, chosen, args.arc)
        moves = []
    else:
        colorings = [c for c in space.colorings() if c.nontrivial]
        chosen = next(
            (c for c in colorings if c.colors[args.arc] == c.colors[args.arc2]), None
        )
        if chosen is None:
            msg = (
                f"no nontrivial coloring mod {args.mod}"
                if not colorings
                else f"arcs {args.arc} and {args.arc2} never share a color mod {args.mod}"
            )
            print(msg, file=sys.stderr)
            return EXIT_NOT_FOUND
        t, cert, moves = cut_two_arcs(d, chosen, args.arc, args.arc2, extra_passes=args.passes)
    out_tangle = args.out + ".pd"
    out_cert = args.out + ".cert.json"
    Path(out_tangle).write_text(serialize(t))
    payload = cert.to_json(out_tangle)
    payload["moves"] = records_to_json(moves)
    Path(out_cert).write_text(json.dumps(payload, indent=2, sort_keys=True))
    _emit(
        payload,
        args.json,
        [f"tangle written to {out_tangle}", f"certificate written to {out_cert}"],
    )
    return EXIT_OK


def cmd_build(args) -> int:
    if args.t_plus_tstar:
        twists = _twists(args.t_plus_tstar)
        try:
            s, cert = build_T_plus_Tstar(twists)
        except CertificateError as exc:
            print(f"none: {exc}", file=sys.stderr)
            return EXIT_NOT_FOUND
        Path(args.out + ".pd").write_text(serialize(s))
        payload = cert.to_json(args.out + ".pd")
        Path(args.out + ".cert.json").write_text(json.dumps(payload, indent=2, sort_keys=True))
        _emit(payload, args.json, [f"tangle written to {args.out}.pd", "certificate found"])
        return EXIT_OK
    twists = _twists(args.rational)
    t = rational_tangle(twists)
    if args.closure:
        d = numerator_closure(t) if args.closure == "N" else denominator_closure(t)
        Path(args.out + ".pd").write_text(serialize(d))
        _emit(
            {"schema": 1, "fraction": str(tangle_fraction(twists)), "file": args.out + ".pd"},
            args.json,
            [f"closure written to {args.out}.pd"],
        )
        return EXIT_OK
    Path(args.out + ".pd").write_text(serialize(t))
    _emit(
        {"schema": 1, "fraction": str(tangle_fraction(twists)), "file": args.out + ".pd"},
        args.json,
        [f"tangle written to {args.out}.pd (fraction {tangle_fraction(twists)})"],
    )
    return EXIT_OK


def cmd_closure(args) -> int:
    t = _load(args.tangle)
    d = numerator_closure(t) if args.type == "N" else denominator_closure(t)
    text = serialize(d)
    if args.out:
        Path(args.out).write_text(text)
    n = len(components(d))
    _emit(
        {"schema": 1, "components": n, "pd": text},
        args.json,
        [text.rstrip(), f"# components: {n}"],
    )
    return EXIT_OK


def cmd_krebes(args) -> int:
    t = _load(args.tangle)
    g = krebes_gcd(t)
    _emit({"schema": 1, "krebes_gcd": g}, args.json, [f"krebes gcd: {g}"])
    return EXIT_OK


def cmd_report(args) -> int:
    t = _load(args.tangle)
    twists = _twists(args.twists) if args.twists else None
    rep = irreducibility_report(t, twists)
    lines = [
        f"closure N: {rep.closure_n.components} component(s), determinant {rep.closure_n.determinant}, nontrivial moduli {rep.closure_n.nontrivial_moduli}",
        f"closure D: {rep.closure_d.components} component(s), determinant {rep.closure_d.determinant}, nontrivial moduli {rep.closure_d.nontrivial_moduli}",
        f"krebes gcd: {rep.krebes_gcd}",
        f"local knots: {rep.local_knots}",
        f"verdict: {rep.verdict}",
    ]
    _emit(rep.to_json(), args.json, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglecert",
        description="Certify tangles as persistent via boundary-monochromatic colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="count or enumerate colorings of a diagram")
    p.add_argument("diagram")
    p.add_argument("--mod", type=int, default=3)
    p.add_argument("--quandle", help="quandle table file")
    p.add_argument("--count", action="store_true", help="report the count (default)")
    p.add_argument("--enumerate", type=int, metavar="CAP", help="list colorings up to CAP")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("det", help="determinant of a closed diagram")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("certify", help="search for a persistence certificate")
    p.add_argument("tangle")
    p.add_argument("--mods", help="comma-separated Fox moduli")
    p.add_argument("--quandles", help="comma-separated quandle files")
    p.add_argument("--verify", type=int, metavar="TRIALS", help="verify over random hosts")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("cut", help="cut a colored diagram into a certified tangle")
    p.add_argument("diagram")
    p.add_argument("--arc", type=int, required=True)
    p.add_argument("--arc2", type=int)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--passes", type=int, default=0, help="extra transport passes")
    p.add_argument("--out", default="cut-output")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("build", help="build rational tangles and sums")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rational", metavar="TWISTS")
    group.add_argument("--t-plus-tstar", metavar="TWISTS")
    p.add_argument("--closure", choices=["N", "D"])
    p.add_argument("--out", default="build-output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("closure", help="numerator or denominator closure of a tangle")
    p.add_argument("tangle")
    p.add_argument("--type", choices=["N", "D"], default="N")
    p.add_argument("--out")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("krebes", help="gcd of the two closure determinants")
    p.add_argument("tangle")
    p.set_defaults(func=cmd_krebes)

    p = sub.add_parser("report", help="irreducibility evidence report")
    p.add_argument("tangle")
    p.add_argument("--twists", help="twist vector if built rationally")
    p.set_defaults(func=cmd_report)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, ColoringError, CertificateError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
