"""Command-line interface: ``kummer3 {run,verify,duality,diagram,catalog}``.

Exit codes: 0 on success, 1 when a verification or certification fails,
2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .catalog import catalog, catalog_group, entry, load_generator_file, names
from .cohomology import assemble
from .errors import InputError, KummerError
from .matgroup import closure
from .report import (
    DEFAULT_BOUND,
    SCHEMA_VERSION,
    all_reports,
    build_report,
    duality_report,
    inclusion_diagram,
    render_text,
    verify_tables,
)
from .torus import working_level

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2, which matches EXIT_INPUT
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kummer3", description="Poincare polynomials of Kummer 3-folds A^3/G.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=["text", "json"], default="text", help="output format (default: text)")

    r = sub.add_parser("run", help="run the pipeline for one group")
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("name", nargs="?", help="catalog name, e.g. S4(2) or s4_2")
    src.add_argument("--gens", metavar="FILE", help="JSON generator file")
    src.add_argument("--all", action="store_true", help="all catalog groups in catalog order")
    r.add_argument("--format", **fmt)
    r.add_argument("--torsion-level", type=_positive, metavar="N",
                   help="torsion level; must be a multiple of the default level")
    r.add_argument("--jobs", type=_positive, default=1, help="worker processes for --all")

    v = sub.add_parser("verify", help="compare all groups with the reference tables")
    v.add_argument("--format", **fmt)
    v.add_argument("--jobs", type=_positive, default=1)

    for cmd, text in (("duality", "match transposed groups against the catalog"),
                      ("diagram", "inclusion diagram of the catalog classes")):
        c = sub.add_parser(cmd, help=text)
        c.add_argument("--bound", type=_positive, default=DEFAULT_BOUND,
                       help=f"entry bound of the base-change search (default {DEFAULT_BOUND})")
        c.add_argument("--format", **fmt)

    c = sub.add_parser("catalog", help="list the built-in groups")
    c.add_argument("--format", **fmt)
    return p


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_run(args) -> int:
    if args.all:
        if args.torsion_level is not None:
            raise InputError("--torsion-level applies to a single group")
        reports = all_reports(jobs=args.jobs)
        if args.format == "json":
            _emit(_dump({"schema_version": SCHEMA_VERSION, "reports": reports}))
        else:
            _emit("\n".join(render_text(d) for d in reports))
        return EXIT_OK
    if args.gens:
        name, gens = load_generator_file(args.gens)
    else:
        e = entry(args.name)
        name, gens = e.name, list(e.generators)
    group = closure(gens)
    level = args.torsion_level
    if level is not None:
        base = working_level(group)
        if level % base:
            raise InputError(f"torsion level {level} is not a multiple of the default level {base}")
    report = build_report(name, group, level)
    _emit(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    result = verify_tables(jobs=args.jobs)
    if args.format == "json":
        _emit(_dump({
            "schema_version": SCHEMA_VERSION,
            "ok": result.ok,
            "cells_checked": result.checked,
            "p_x_matches": result.p_x_matches(),
            "diffs": [vars(d) for d in result.diffs],
        }))
    else:
        _emit(result.summary())
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_duality(args) -> int:
    entries = duality_report(args.bound)
    # dual classes should give equal Poincare polynomials
    px = {n: assemble(catalog_group(n)).P_X for n in names()}
    unequal = [e.name for e in entries if e.dual and px[e.name] != px[e.dual]]
    inconclusive = [e.name for e in entries if e.witness is None]
    if args.format == "json":
        _emit(_dump({
            "schema_version": SCHEMA_VERSION,
            "bound": args.bound,
            "entries": [e.as_dict() for e in entries],
            "inconclusive": inconclusive,
            "unequal_p_x": unequal,
        }))
    else:
        for e in entries:
            w = "" if e.witness is None else "  witness " + " ".join(
                "[" + ",".join(map(str, r)) + "]" for r in e.witness)
            target = e.dual or "?"
            _emit(f"{e.name:6} -> {target:6} {e.status}{w}")
        pairs = sorted({tuple(sorted((e.name, e.dual), key=names().index))
                        for e in entries if e.dual and e.dual != e.name}, key=lambda p: names().index(p[0]))
        selfdual = [e.name for e in entries if e.dual == e.name]
        _emit(f"{len(selfdual)} self-dual, {len(pairs)} dual pairs, {len(inconclusive)} inconclusive")
        if unequal:
            _emit("dual classes with different P_X: " + ", ".join(unequal))
    return EXIT_OK if not inconclusive and not unequal else EXIT_FAIL


def cmd_diagram(args) -> int:
    d = inclusion_diagram(args.bound)
    if args.format == "json":
        _emit(_dump(d.as_dict()))
    else:
        for e in d.edges:
            _emit(f"{e.sub} -> {e.sup}")
        for item in d.inconclusive:
            _emit(f"inconclusive: {item['subgroup_iso']} subgroup of {item['group']} "
                  f"(candidates: {', '.join(item['fingerprint_candidates']) or 'none'})")
    return EXIT_OK if not d.inconclusive else EXIT_FAIL


def cmd_catalog(args) -> int:
    items = [{"name": e.name, "iso": e.iso.value, "order": e.iso.order,
              "generators": [[list(r) for r in g] for g in e.generators]} for e in catalog()]
    if args.format == "json":
        _emit(_dump({"schema_version": SCHEMA_VERSION, "groups": items}))
    else:
        for it in items:
            gens = "  ".join(" ".join("[" + ",".join(map(str, r)) + "]" for r in g) for g in it["generators"])
            _emit(f"{it['name']:6} order {it['order']:2}  {gens}")
    return EXIT_OK


COMMANDS = {"run": cmd_run, "verify": cmd_verify, "duality": cmd_duality,
            "diagram": cmd_diagram, "catalog": cmd_catalog}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except KummerError as exc:
        # anything raised by the pipeline on user-supplied data is an input problem
        print(f"kummer3: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
