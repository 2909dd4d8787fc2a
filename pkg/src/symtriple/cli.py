"""Command line front-end.

Exit codes: 0 success, 2 malformed input, 3 no case matched (classify),
4 precondition violated, 5 enumeration bound exceeded.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import catalog
from .classifier import MODES, analyze_triple, classify
from .codecs import (decode_design, decode_graph, decode_group, decode_triple, dumps, encode_design,
                     encode_graph, encode_group, encode_triple, read_json, record_kind)
from .config import DEFAULT_LIMITS
from .constructions import three_arc_orbits
from .designs import is_t_design, two_transitive_automorphism_check
from .errors import ExceedsBound, MalformedInput, PreconditionViolation, SymTripleError

CATALOG_HELP = """catalog keys:
  triples:  arc-pair-k5, arc-pair-k7, arc-pair-k5-agl, gamma2-k5, gamma2-k5-60,
            xi-k4, chain-N (N >= 3), c6-antipodal
  designs:  affine-N-M (2 <= N <= 8, 1 <= M < N), fano
  graphs:   k4, k5, c6 (graph with its acting group, for `orbits`)
"""


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symtriple", description="Quotients of imprimitive symmetric graphs.",
                                 epilog=CATALOG_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--catalog", metavar="KEY", help="built-in example key")
        g.add_argument("--in", dest="input", metavar="PATH", help="JSON record")
        p.add_argument("--out", metavar="PATH", help="write JSON here instead of stdout")
        p.add_argument("--summary", action="store_true", help="human-readable summary on stderr")
        p.add_argument("--bound", type=int, default=DEFAULT_LIMITS.enumeration_bound,
                       help="group enumeration bound (default 10^6)")

    for name, text in (("analyze", "parameters, λ, identities, fingerprints and the auto-selected case"),
                       ("classify", "match against the case list of a mode; exit 3 if no case matches")):
        p = sub.add_parser(name, help=text, epilog=CATALOG_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
        source(p)
        p.add_argument("--p", type=int, help="expected v - k")
        p.add_argument("--mode", choices=MODES, help="case list (default: p3/p5 by p, else theorem1)")
    p = sub.add_parser("construct", help="emit the JSON record of a construction",
                       epilog=CATALOG_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    source(p)
    p.add_argument("--family", choices=("arc-pair", "gamma2", "xi"),
                   help="apply a construction to a graph-with-group source")
    p.add_argument("--orbit", type=int, default=0, help="3-arc orbit index for gamma2/xi")
    p = sub.add_parser("orbits", help="list the 3-arc orbits of a graph under its group",
                       epilog=CATALOG_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    source(p)
    sub.add_parser("catalog", help="list catalog keys")
    return ap


def _load(args):
    """(kind, object) from --catalog or --in."""
    if args.catalog:
        e = catalog.entry(args.catalog)
        return e.kind, e.build()
    record = read_json(args.input)
    kind = record_kind(record)
    if kind == "triple":
        return kind, decode_triple(record)
    if kind == "design":
        return kind, catalog.DesignWithGroup(decode_design(record), None)
    if kind == "graph-with-group":
        return "graph", catalog.GraphWithGroup(decode_graph(record["graph"], "graph"),
                                               decode_group(record["group"], "group"))
    raise MalformedInput("a bare graph has no group; supply {graph, group}")


def _emit(args, record, summary=None):
    text = dumps(record) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if summary and getattr(args, "summary", False):
        sys.stderr.write(summary + "\n")


def _analyze(args, force_mode):
    kind, obj = _load(args)
    if kind != "triple":
        raise MalformedInput(f"{kind} records cannot be analyzed; expected a triple")
    limits = replace(DEFAULT_LIMITS, enumeration_bound=args.bound)
    report = classify(analyze_triple(obj, args.p, limits), args.mode)
    _emit(args, report.as_dict(), report.summary())
    code = report.exit_code()
    if code == 3 and not force_mode:
        return 0
    return code


def _construct(args):
    kind, obj = _load(args)
    if args.family:
        if kind != "graph":
            raise MalformedInput("--family needs a graph-with-group source")
        build = {"arc-pair": lambda: catalog.arc_pair_triple(obj),
                 "gamma2": lambda: catalog.gamma2_triple(obj, args.orbit),
                 "xi": lambda: catalog.xi_triple(obj, args.orbit)}[args.family]
        kind, obj = "triple", build()
    if kind == "triple":
        _emit(args, encode_triple(obj))
    elif kind == "design":
        rec = encode_design(obj.design)
        if obj.group is not None:
            rec["group"] = encode_group(obj.group)
        lines = []
        got = is_t_design(obj.design, 2) if obj.design.point_count >= 2 else None
        lines.append(f"2-design: {got.as_dict() if got else 'no'}")
        if obj.group is not None:
            lines.append(f"automorphisms: {two_transitive_automorphism_check(obj.design, obj.group).as_dict()}")
        _emit(args, rec, "\n".join(lines))
    else:
        _emit(args, {"graph": encode_graph(obj.graph), "group": encode_group(obj.group)})
    return 0


def _orbits(args):
    kind, obj = _load(args)
    if kind == "triple":
        obj = catalog.GraphWithGroup(obj.graph, obj.group)
    elif kind != "graph":
        raise MalformedInput("orbits needs a graph with a group")
    orbs = three_arc_orbits(obj.graph, obj.group)
    rec = {"orbits": [{"representative": list(o.representative), "self_paired": o.self_paired, "size": len(o)}
                      for o in orbs]}
    _emit(args, rec, "\n".join(f"{i}: size {len(o)}, self-paired {o.self_paired}, rep {list(o.representative)}"
                               for i, o in enumerate(orbs)))
    return 0


def run_command(argv: list[str]) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if args.command == "catalog":
            rows = {k: {"description": catalog.entry(k).description, "kind": catalog.entry(k).kind}
                    for k in sorted(catalog.FIXED)}
            rows["chain-N"] = {"description": "matched-cycle chain, N >= 3", "kind": "triple"}
            rows["affine-N-M"] = {"description": "affine orbit design in GF(2^N)", "kind": "design"}
            sys.stdout.write(dumps(rows) + "\n")
            return 0
        if args.command in ("analyze", "classify"):
            return _analyze(args, force_mode=args.command == "classify")
        if args.command == "construct":
            return _construct(args)
        return _orbits(args)
    except MalformedInput as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return 2
    except PreconditionViolation as exc:
        sys.stderr.write(f"precondition violated: {exc}\n")
        return 4
    except ExceedsBound as exc:
        sys.stderr.write(f"bound exceeded: {exc}\n")
        return 5
    except SymTripleError as exc:  # pragma: no cover - every subclass is handled above
        sys.stderr.write(f"error: {exc}\n")
        return 4


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
