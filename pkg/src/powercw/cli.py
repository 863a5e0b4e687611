"""Command-line front end: ``powercw <command> ...``.

Graph arguments are file paths (``.el`` edge lists, ``.g6`` graph6 lines,
``-`` for stdin).  Query commands print one JSON object on stdout.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import experiments
from .classifier import (
    classify_bigenic,
    classify_monogenic,
    classify_set,
    kappa,
    lambda_,
)
from .cliquewidth import DEFAULT_CAP, clique_width, cw_at_most, is_cograph, nlc_width
from .expression import expression_width, format_expression
from .formats import read_graph, read_graphs, write_graphs
from .generators import FAMILIES, generate, random_split_graph, split_gadget
from .graph import INFINITE, GraphError
from .iso import contains_induced, is_f_free, isomorphism
from .powers import graph_power
from .structure import (
    is_in_class_g,
    is_prime,
    maximal_modules_partition,
    quotient,
    twin_classes,
)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _num(x):
    return "inf" if x == INFINITE else x


def _write_or_print(args, graphs) -> None:
    out = args.out or "-"
    write_graphs(out, graphs, args.format)


def _gen(args) -> int:
    if args.family == "random_split":
        g = random_split_graph(args.n, args.density, args.seed)
    elif args.family == "split_gadget":
        g, _, _ = split_gadget(read_graph(args.graph), args.k)
    else:
        if args.family not in FAMILIES:
            raise GraphError(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILIES))}")
        _, names = FAMILIES[args.family]
        params = {}
        for name in names:
            value = read_graph(args.graph) if name == "h" else getattr(args, name)
            if value is None:
                raise GraphError(f"family {args.family} needs --{name if name != 'h' else 'graph'}")
            params[name] = value
        g = generate(args.family, **params)
    _write_or_print(args, [g])
    return 0


def _power(args) -> int:
    _write_or_print(args, [graph_power(g, args.k) for g in read_graphs(args.graph)])
    return 0


def _contains(args) -> int:
    emb = contains_induced(read_graph(args.g), read_graph(args.h))
    _emit({"contains": emb is not None, "embedding": emb})
    return 0


def _iso(args) -> int:
    phi = isomorphism(read_graph(args.g), read_graph(args.h))
    _emit({"isomorphic": phi is not None, "bijection": phi})
    return 0


def _free(args) -> int:
    forbidden = [h for path in args.forbidden.split(",") if path for h in read_graphs(path)]
    ok, hit = is_f_free(read_graph(args.graph), forbidden)
    _emit({"free": ok, "violated": None if hit is None else {"index": hit[0], "embedding": hit[1]}})
    return 0


def _prime(args) -> int:
    _emit({"prime": is_prime(read_graph(args.graph))})
    return 0


def _twins(args) -> int:
    _emit({"twin_classes": twin_classes(read_graph(args.graph))})
    return 0


def _quotient(args) -> int:
    g = read_graph(args.graph)
    blocks = maximal_modules_partition(g)
    q = quotient(g, blocks)
    if args.out:
        write_graphs(args.out, [q], args.format)
    _emit({"blocks": blocks, "quotient_edges": [list(e) for e in q.edges]})
    return 0


def _ingkd(args) -> int:
    paths = is_in_class_g(read_graph(args.graph), args.k, args.d)
    _emit({
        "member": paths is not None,
        "paths": None if paths is None else [list(p.vertices) for p in paths],
    })
    return 0


def _cap(args) -> int:
    if args.cap != DEFAULT_CAP:
        print(f"warning: exact search cap raised from {DEFAULT_CAP} to {args.cap}; runtime may explode",
              file=sys.stderr)
    return args.cap


def _cw(args) -> int:
    g = read_graph(args.graph)
    cap = _cap(args)
    if args.decide is not None:
        e = cw_at_most(g, args.decide, cap)
        _emit({"k": args.decide, "possible": e is not None, "expression": None if e is None else format_expression(e)})
        return 0
    width, e = clique_width(g, cap)
    _emit({
        "clique_width": width,
        "expression": None if e is None else format_expression(e),
        "labels_used": 0 if e is None else expression_width(e),
    })
    return 0


def _nlcw(args) -> int:
    _emit({"nlc_width": nlc_width(read_graph(args.graph), _cap(args))})
    return 0


def _cograph(args) -> int:
    _emit({"cograph": is_cograph(read_graph(args.graph))})
    return 0


def _classify(args) -> int:
    if args.mode == "mono":
        if len(args.graphs) != 1:
            raise GraphError("classify mono takes one graph")
        c = classify_monogenic(read_graph(args.graphs[0]))
    elif args.mode == "bi":
        if len(args.graphs) != 2:
            raise GraphError("classify bi takes two graphs")
        c = classify_bigenic(read_graph(args.graphs[0]), read_graph(args.graphs[1]))
    else:
        c = classify_set([h for path in args.graphs for h in read_graphs(path)])
    _emit(c.as_dict())
    return 0


def _kappa(args) -> int:
    _emit({"kappa": _num(kappa(read_graph(args.graph)))})
    return 0


def _lambda(args) -> int:
    _emit({"lambda": _num(lambda_(read_graph(args.graph)))})
    return 0


def _verify(args) -> int:
    if args.list_suites:
        for name in experiments.SUITES:
            print(name)
        return 0
    if not args.suite:
        raise GraphError("verify needs a suite name or 'all'")
    names = list(experiments.SUITES) if args.suite == "all" else [args.suite]
    reports = experiments.run_suites(names, args.seed)
    text = experiments.reports_to_csv(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"note: {experiments.PREAMBLE}", file=sys.stderr)
    for rep in reports:
        bad = len(rep.failures())
        status = "PASS" if bad == 0 else "FAIL"
        print(f"{status} {rep.suite}: {len(rep.rows) - bad}/{len(rep.rows)} rows ({rep.wall_clock:.1f}s)", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="powercw", description="Graph powers, clique-width and class verdicts.")
    sub = p.add_subparsers(dest="command", required=True)

    def out_opts(sp):
        sp.add_argument("--out", help="output file (.el, .g6 or .dot); default stdout")
        sp.add_argument("--format", choices=["el", "g6", "dot"], help="override the format implied by --out")

    sp = sub.add_parser("gen", help="generate a graph family")
    sp.add_argument("family", help=f"one of {', '.join(sorted(FAMILIES))}, random_split, split_gadget")
    for name in ("n", "m", "k", "s", "d", "i", "j", "r"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--graph", help="input graph for mH and split_gadget")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--density", type=float, default=0.5)
    out_opts(sp)
    sp.set_defaults(func=_gen)

    sp = sub.add_parser("power", help="k-th power of every graph in a file")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    out_opts(sp)
    sp.set_defaults(func=_power)

    for name, func, help_text in (("contains", _contains, "induced embedding of H in G"),
                                  ("iso", _iso, "isomorphism test")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("g")
        sp.add_argument("h")
        sp.set_defaults(func=func)

    sp = sub.add_parser("free", help="test G against a list of forbidden induced subgraphs")
    sp.add_argument("graph")
    sp.add_argument("--forbidden", required=True, help="comma-separated graph files")
    sp.set_defaults(func=_free)

    for name, func in (("prime", _prime), ("twins", _twins), ("cograph", _cograph),
                       ("kappa", _kappa), ("lambda", _lambda)):
        sp = sub.add_parser(name)
        sp.add_argument("graph")
        sp.set_defaults(func=func)

    sp = sub.add_parser("quotient", help="maximal-module partition and quotient")
    sp.add_argument("graph")
    out_opts(sp)
    sp.set_defaults(func=_quotient)

    sp = sub.add_parser("ingkd", help="membership in G(k, d)")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=_ingkd)

    sp = sub.add_parser("cw", help="exact clique-width")
    sp.add_argument("graph")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="compute cw(G) (default)")
    mode.add_argument("--decide", type=int, metavar="K", help="only decide cw(G) <= K")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=_cw)

    sp = sub.add_parser("nlcw", help="exact NLC-width")
    sp.add_argument("graph")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=_nlcw)

    sp = sub.add_parser("classify", help="power-boundedness verdicts")
    sp.add_argument("mode", choices=["mono", "bi", "set"])
    sp.add_argument("graphs", nargs="+")
    sp.set_defaults(func=_classify)

    sp = sub.add_parser("verify", help="run verification suites and write a CSV report")
    sp.add_argument("suite", nargs="?", help="suite name or 'all'")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--list-suites", action="store_true")
    sp.set_defaults(func=_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
