"""Command line interface.

Machine output (json-lines, csv, graph6, plain numbers) goes to stdout and
human summaries to stderr. Exit codes: 0 ok, 1 assertion or verification
failure (certificate printed), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, constructions, detectors, formats, structure, verify
from .graph import GraphError
from .spectra import ConvergenceError, q_index

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_graphs(args) -> list:
    graphs = formats.read_graphs(_read_text(args.input), args.informat)
    if not graphs:
        raise formats.ParseError("no graphs in input")
    return graphs


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_construct(args) -> int:
    spec = constructions.FamilySpec(args.family, n=args.n, k=args.k, t=args.t)
    G = constructions.construct(spec)
    if args.format == "g6":
        sys.stdout.write(formats.write_graph6(G) + "\n")
    else:
        sys.stdout.write(formats.write_edge_list(G))
    _note(f"{args.family}: n={G.n} e={G.m}")
    return EXIT_OK


def cmd_qindex(args) -> int:
    for G in _read_graphs(args):
        res = q_index(G, args.tol)
        if args.format == "json":
            rec = {"n": G.n, "q": res.q, "iterations": res.iterations,
                   "residual": res.residual, "method": res.method}
            if args.vector:
                rec["vector"] = res.vector.tolist()
            _emit(rec)
        else:
            sys.stdout.write(f"{res.q!r}\n")
            if args.vector:
                sys.stdout.write(" ".join(repr(float(v)) for v in res.vector) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    reports = [bounds.check_bounds(G, args.k, args.tol) for G in _read_graphs(args)]
    fmt = "csv" if args.format == "csv" else "json-lines"
    sys.stdout.write(formats.write_report(reports, fmt))
    failed = [r for r in reports if bounds.FAIL in r.relations.values()]
    return EXIT_FAIL if failed else EXIT_OK


def cmd_free(args) -> int:
    status = EXIT_OK
    for G in _read_graphs(args):
        w = detectors.has_cycle(G, args.cycle)
        _emit({"cycle": args.cycle, "free": w is None,
               "witness": None if w is None else list(w.vertices)})
        if w is not None:
            status = EXIT_FAIL
    return status


def cmd_detect(args) -> int:
    for G in _read_graphs(args):
        if args.path is not None:
            if args.seed is not None:
                r = detectors.has_path_color_coding(G, args.path, args.seed)
                _emit({"path": args.path, "status": r.status,
                       "witness": None if r.witness is None else list(r.witness.vertices)})
                continue
            w = detectors.has_path(G, args.path)
            _emit({"path": args.path, "present": w is not None,
                   "witness": None if w is None else list(w.vertices)})
        elif args.cycle is not None:
            w = detectors.has_cycle(G, args.cycle)
            _emit({"cycle": args.cycle, "present": w is not None,
                   "witness": None if w is None else list(w.vertices)})
        else:
            top = G.n if args.max is None else min(args.max, G.n)
            _emit({"spectrum": sorted(detectors.cycle_spectrum(G, top)),
                   "circumference": detectors.circumference(G)})
    return EXIT_OK


def cmd_peel(args) -> int:
    for G in _read_graphs(args):
        trace = structure.peel(G, args.k - 1)
        _emit(trace.to_dict())
    return EXIT_OK


def cmd_classify(args) -> int:
    for G in _read_graphs(args):
        try:
            _emit(structure.classify(G, args.k).to_dict())
        except structure.UnclassifiedGraph as exc:
            _emit({"tag": "FINDING", "graph6": formats.write_graph6(exc.graph),
                   "message": str(exc)})
            return EXIT_FAIL
    return EXIT_OK


def _write_verification(report, fmt: str) -> None:
    sys.stdout.write(formats.write_report(report, "csv" if fmt == "csv" else "json-lines"))


def cmd_verify(args) -> int:
    if args.input is not None:
        report = verify.verify_stream(_read_text(args.input).splitlines(), args.k)
    else:
        report = verify.verify_exhaustive(args.n, args.k, jobs=args.jobs)
    if args.n is not None and report.n != args.n:
        raise formats.ParseError(f"stream order {report.n} differs from --n {args.n}")
    _write_verification(report, args.format)
    maxi = formats.parse_graph6(report.maximizer)
    if 2 * args.k + 1 <= maxi.n and detectors.has_cycle(maxi, 2 * args.k + 1) is not None:
        _note(f"ASSERTION FAILED: maximizer {report.maximizer} contains C_{2 * args.k + 1}")
        return EXIT_FAIL
    _note(f"n={report.n} k={report.k}: {report.free_graphs}/{report.total_graphs} free, "
          f"max q={report.max_q:.10f}, maximizer is S_(n,k): {report.maximizer_is_snk}")
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = verify.SearchConfig(n=args.n, k=args.k, iterations=args.iters,
                              restarts=args.restarts, seed=args.seed, start=args.start)
    result = verify.local_search(cfg, jobs=args.jobs)
    _write_verification(result.report, args.format)
    for g6 in result.findings:
        sys.stdout.write(f"FINDING {g6}\n")
    _note(f"best q={result.report.max_q:.10f} vs q(S_(n,k))={result.snk_q}")
    return EXIT_FAIL if result.findings else EXIT_OK


def cmd_harness(args) -> int:
    if args.which in ("clique-tail", "lemma8"):
        recs = [verify.clique_tail_harness(args.k, args.n, t) for t in args.t]
    elif args.which in ("star-union", "lemma9"):
        recs = [verify.star_union_harness(args.k, args.parts)]
    else:
        recs = [verify.cycle_range_harness(G, args.k) for G in _read_graphs(args)]
    bad = False
    for rec in recs:
        _emit(rec)
        if rec.get("holds") is False or rec.get("status") == "FINDING":
            bad = True
    return EXIT_FAIL if bad else EXIT_OK


def cmd_convert(args) -> int:
    for G in _read_graphs(args):
        if args.to == "g6":
            sys.stdout.write(formats.write_graph6(G) + "\n")
        else:
            sys.stdout.write(formats.write_edge_list(G))
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--in", dest="input", required=required,
                   help="input file (graph6 lines or an edge list); '-' reads stdin")
    p.add_argument("--informat", choices=["auto", "g6", "edges"], default="auto",
                   help="input format (default: auto-detect)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qextremal",
                                     description="Q-index tools for C_{2k+1}-free graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph family")
    p.add_argument("--family", required=True, choices=constructions.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--format", choices=["g6", "edges"], default="g6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("qindex", help="largest signless Laplacian eigenvalue")
    _add_input(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--vector", action="store_true", help="also print the Perron vector")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_qindex)

    p = sub.add_parser("bounds", help="evaluate every Q-index and edge bound")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("free", help="exit 0 if C_l-free, 1 if a C_l is present")
    _add_input(p)
    p.add_argument("--cycle", type=int, required=True)
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("detect", help="find a path, a cycle, or the cycle spectrum")
    _add_input(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--path", type=int)
    g.add_argument("--cycle", type=int)
    g.add_argument("--spectrum", action="store_true")
    p.add_argument("--max", type=int, help="largest cycle length for --spectrum")
    p.add_argument("--seed", type=int,
                   help="with --path: randomized color coding (reports probably-absent)")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("peel", help="remove min-degree vertices while min degree < k-1")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("classify", help="P_{2k+2} / L_{t,k} / subgraph-of-S_{n,k} trichotomy")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustive or catalogue scan for the Q-index maximizer")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", action="store_true")
    src.add_argument("--in", dest="input", help="graph6 file ('-' for stdin)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="seeded hill-climbing falsification search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--start", choices=["snk", "random", "mixed"], default="mixed")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("harness", help="constructed-instance checks")
    hs = p.add_subparsers(dest="which", required=True)
    h = hs.add_parser("clique-tail", aliases=["lemma8"], help="K_1 v (S_{n-1-t,k-1} u K_t) against S_{n,k}")
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--t", type=int, nargs="+", required=True)
    h = hs.add_parser("star-union", aliases=["lemma9"], help="K_1 v (union of S_{n_i,k-1}) against S_{n,k}")
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--parts", type=int, nargs="+", required=True)
    h = hs.add_parser("cycle-range", aliases=["theorem1"], help="cycle lengths 3..2k+2 when q >= n+2k-2")
    _add_input(h)
    h.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_harness)

    p = sub.add_parser("convert", help="convert between graph6 and edge lists")
    _add_input(p)
    p.add_argument("--to", choices=["g6", "edges"], required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.exhaustive and args.n is None:
        parser.error("verify --exhaustive requires --n")
    try:
        return args.func(args)
    except (GraphError, formats.ParseError, structure.PreconditionError, ValueError,
            OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT
    except ConvergenceError as exc:
        _note(f"solver error: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
