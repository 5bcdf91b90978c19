"""Command-line entry point: ``rainbowsat {gen,check,absorb,exact,export}``.

Exit codes: 0 success / property holds, 1 property fails, 2 usage or IO error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructions as C
from .core import (ColouredGraph, GraphFormatError, LabelledColouredGraph, graph_to_dict, parse_graph,
                   plain, serialize_graph, to_dot)
from .oracle import exact_rsat
from .patterns import PATTERN_NAMES, named_pattern
from .saturation import UNBOUNDED, Palette, PreconditionError, absorb, saturation_report
from .search import SearchConstraint, find_rainbow_embedding


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected u,v but got {text!r}") from None
    return u, v


def _read(path: str) -> str:
    if not os.path.isfile(path):
        raise UsageError(f"no such file: {path}")
    with open(path, encoding="utf-8") as f:
        return f.read()


def load_pattern(spec: str):
    try:
        return named_pattern(spec)
    except KeyError:
        pass
    if not os.path.isfile(spec):
        raise UsageError(f"{spec!r} is neither a pattern file nor a known name ({', '.join(PATTERN_NAMES)})")
    return parse_graph(_read(spec), pattern=True)


def load_graph(path: str):
    g = parse_graph(_read(path), pattern=False)
    if not isinstance(g, (ColouredGraph, LabelledColouredGraph)):
        raise UsageError(f"{path} is not a coloured graph")
    return g


def _check_out(path: str | None):
    if path and path != "-":
        d = os.path.dirname(os.path.abspath(path))
        if not os.path.isdir(d):
            raise UsageError(f"output directory does not exist: {d}")


def _emit(text: str, path: str | None):
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _palette(t: int | None) -> Palette:
    return UNBOUNDED if t is None else Palette.bounded(t)


def _gadget_labelled(gadget: C.CliqueGadget) -> LabelledColouredGraph:
    s = gadget.s
    labels = tuple([("S", i) for i in range(s)] + [("pair", i) for i in range(gadget.graph.n - s)])
    meta = {"construction": "clique-gadget", "s": s,
            "pair_colour": [[x, y, c] for (x, y), c in sorted(gadget.pair_colour.items())]}
    return LabelledColouredGraph(gadget.graph, labels, {}, meta)


def cmd_gen(a) -> int:
    _check_out(a.out)
    if a.kind == "construction31":
        h = load_pattern(a.pattern)
        x, y = a.edge
        out = C.build_Gxy_n(h, x, y, a.n)
    elif a.kind == "pendant":
        out = C.build_pendant(load_pattern(a.pattern), a.n)
    elif a.kind == "disconnect":
        out = C.build_disconnect(load_pattern(a.pattern), plain(load_graph(a.inner)))
    elif a.kind == "clique-gadget":
        out = _gadget_labelled(C.build_clique_gadget(a.s))
    else:
        out = C.build_clique_construction(a.r, a.n)
    _emit(serialize_graph(out) + "\n", a.out)
    return 0


def cmd_check(a) -> int:
    g = plain(load_graph(a.graph))
    h = load_pattern(a.pattern)
    if a.kind == "rainbow":
        c = SearchConstraint(a.require_edge, a.forbid_colour)
        if c.required_edge is not None and not g.has_edge(*c.required_edge):
            raise UsageError(f"required edge {a.require_edge} is not an edge of the graph")
        emb = find_rainbow_embedding(g, h, c)
        if emb is None:
            print("null")
            return 1
        print(json.dumps({str(k): v for k, v in sorted(emb.items())}))
        return 0
    rep = saturation_report(g, h, _palette(a.palette), workers=a.threads)
    print(json.dumps(rep.to_dict()))
    return 0 if rep.is_saturated else 1


def cmd_absorb(a) -> int:
    _check_out(a.out)
    _check_out(a.log)
    g = plain(load_graph(a.graph))
    out, added = absorb(g, load_pattern(a.pattern), _palette(a.palette))
    _emit(serialize_graph(out) + "\n", a.out)
    if a.log:
        _emit(json.dumps([[u, v, c] for (u, v), c in added]) + "\n", a.log)
    return 0


def cmd_exact(a) -> int:
    res = exact_rsat(a.n, load_pattern(a.pattern), _palette(a.palette), a.max_edges,
                     max_n=max(a.n, 6) if a.force else 6)
    print(json.dumps(res.to_dict()))
    return 0 if res.min_edges is not None else 1


def cmd_export(a) -> int:
    _check_out(a.out)
    _emit(to_dot(load_graph(a.graph)), a.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowsat", description=__doc__)
    p.add_argument("--threads", type=int, default=1, help="worker processes for per-non-edge checks")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a construction")
    gsub = gen.add_subparsers(dest="kind", required=True)
    g31 = gsub.add_parser("construction31")
    g31.add_argument("--pattern", required=True)
    g31.add_argument("--edge", type=_pair, required=True)
    g31.add_argument("--n", type=int, required=True)
    gp = gsub.add_parser("pendant")
    gp.add_argument("--pattern", required=True)
    gp.add_argument("--n", type=int, required=True)
    gd = gsub.add_parser("disconnect")
    gd.add_argument("--pattern", required=True)
    gd.add_argument("--inner", required=True)
    gg = gsub.add_parser("clique-gadget")
    gg.add_argument("--s", type=int, required=True)
    gc = gsub.add_parser("clique")
    gc.add_argument("--r", type=int, required=True)
    gc.add_argument("--n", type=int, required=True)
    for sp in (g31, gp, gd, gg, gc):
        sp.add_argument("-o", "--out")
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser("check", help="rainbow search or saturation verdict")
    csub = check.add_subparsers(dest="kind", required=True)
    cr = csub.add_parser("rainbow")
    cr.add_argument("--graph", required=True)
    cr.add_argument("--pattern", required=True)
    cr.add_argument("--require-edge", type=_pair)
    cr.add_argument("--forbid-colour", type=int)
    cs = csub.add_parser("saturation")
    cs.add_argument("--graph", required=True)
    cs.add_argument("--pattern", required=True)
    cs.add_argument("--palette", type=int)
    check.set_defaults(func=cmd_check)

    ab = sub.add_parser("absorb", help="greedy completion to a saturated graph")
    ab.add_argument("--graph", required=True)
    ab.add_argument("--pattern", required=True)
    ab.add_argument("--palette", type=int)
    ab.add_argument("-o", "--out")
    ab.add_argument("--log")
    ab.set_defaults(func=cmd_absorb)

    ex = sub.add_parser("exact", help="exact rsat(n, H) by enumeration (n <= 6)")
    ex.add_argument("--n", type=int, required=True)
    ex.add_argument("--pattern", required=True)
    ex.add_argument("--palette", type=int)
    ex.add_argument("--max-edges", type=int)
    ex.add_argument("--force", action="store_true", help="allow n above the soft limit")
    ex.set_defaults(func=cmd_exact)

    exp = sub.add_parser("export", help="export a graph")
    esub = exp.add_subparsers(dest="kind", required=True)
    ed = esub.add_parser("dot")
    ed.add_argument("--graph", required=True)
    ed.add_argument("-o", "--out")
    exp.set_defaults(func=cmd_export)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, C.ConstructionError, PreconditionError, ValueError, OSError) as exc:
        print(f"rainbowsat: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
