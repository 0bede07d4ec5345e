"""Command-line front end: ``drgen SUBCOMMAND ...``.

Exit codes: 0 feasible/ok, 1 infeasible or refuted (certificate printed),
2 usage or parse error, 3 unresolved window.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .cover import MinCover, OneFactorCover, cover_with_k, min_cover
from .derangements import DerangementSet, MinDerangements, generate_with_k, min_derangements
from .errors import DrgenError, InvalidFamily
from .graphs import BipartiteMultigraph, Digraph, bipartite_double, read_graph, serialize, symmetrize
from .infinite import DEFAULT_K_MAX, as_lazy, family, lower_bound_scan, window_refute

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_UNRESOLVED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _load(args):
    g = read_graph(args.file, dedup=args.dedup)
    if args.undirected:
        if not isinstance(g, Digraph):
            raise UsageError("--undirected applies to digraph input")
        g = symmetrize(g)
    return g


def _load_digraph(args) -> Digraph:
    g = _load(args)
    if not isinstance(g, Digraph):
        raise UsageError("this subcommand needs a digraph")
    return g


def _load_bipartite(args) -> BipartiteMultigraph:
    g = _load(args)
    if not isinstance(g, BipartiteMultigraph):
        raise UsageError("this subcommand needs a bipartite graph")
    return g


def _report_certificate(args, cert) -> int:
    if args.json:
        _emit({"feasible": False, "k": args.k, "certificate": cert.to_json()})
    else:
        print(f"infeasible with k={args.k}")
        print("certificate: " + json.dumps(cert.to_json()))
    return EXIT_INFEASIBLE


def cmd_check(args) -> int:
    g = _load(args)
    res = generate_with_k(g, args.k) if isinstance(g, Digraph) else cover_with_k(g, args.k)
    if isinstance(res, (DerangementSet, OneFactorCover)):
        if args.json:
            _emit({"feasible": True, "k": args.k, "certificate": None})
        else:
            print(f"feasible with k={args.k}")
        return EXIT_OK
    return _report_certificate(args, res)


def cmd_synthesize(args) -> int:
    d = _load_digraph(args)
    res = generate_with_k(d, args.k)
    if not isinstance(res, DerangementSet):
        return _report_certificate(args, res)
    if args.json:
        _emit(res.to_json())
    else:
        for line in res.notation():
            print(line)
    return EXIT_OK


def cmd_cover(args) -> int:
    g = _load_bipartite(args)
    res = cover_with_k(g, args.k)
    if not isinstance(res, OneFactorCover):
        return _report_certificate(args, res)
    if args.json:
        _emit(res.to_json())
    else:
        for f in res.factors:
            print(" ".join(f"{x}-{y}" for x, y in f))
    return EXIT_OK


def cmd_min_k(args) -> int:
    g = _load(args)
    if isinstance(g, Digraph):
        res = min_derangements(g)
        if isinstance(res, MinDerangements):
            if args.json:
                _emit(res.derangements.to_json(res.k))
            else:
                print(f"k={res.k}")
            return EXIT_OK
        reason = res.reason.to_json()
    else:
        res = min_cover(g)
        if isinstance(res, MinCover):
            if args.json:
                _emit(res.cover.to_json(res.k))
            else:
                print(f"k={res.k}")
            return EXIT_OK
        reason = _cover_reason_json(res.reason)
    if args.json:
        _emit({"generable": False, "reason": reason})
    else:
        print("not generable by any set of derangements" if isinstance(g, Digraph) else "no 1-factor cover exists")
        print("reason: " + json.dumps(reason))
    return EXIT_INFEASIBLE


def _cover_reason_json(reason) -> dict:
    if hasattr(reason, "violator"):
        v = reason.violator
        return {"kind": "no-factor", "part": v.part, "T": list(v.T), "N": list(v.neighborhood)}
    out = {"kind": "blocked-edge", "edge": list(reason.edge), "part": reason.part, "T": list(reason.T), "violation": reason.violation}
    if reason.escape is not None:
        out["escape"] = reason.escape
    return out


def cmd_double(args) -> int:
    d = _load_digraph(args)
    sys.stdout.write(serialize(bipartite_double(d)))
    return EXIT_OK


def _family(args):
    params = {}
    if args.family == "subdivided-product":
        if not args.H:
            raise UsageError("--family subdivided-product needs --H FILE")
        h = read_graph(args.H)
        if not isinstance(h, BipartiteMultigraph):
            raise InvalidFamily("H must be a bipartite DGF file")
        params["H"] = h
    elif args.family in ("Gk", "Dk"):
        if args.k_param is None:
            raise UsageError(f"--family {args.family} needs --k-param N")
        params["k"] = args.k_param
    fam = family(args.family, **params)
    if isinstance(fam, (Digraph, BipartiteMultigraph)):
        fam = as_lazy(fam)
    return fam


def cmd_window(args) -> int:
    fam = _family(args)
    rep = window_refute(fam, args.k, args.center, args.radius)
    if args.json:
        _emit(rep.to_json())
    else:
        print(f"{rep.verdict} (k={rep.k}, radius={rep.radius}, window={rep.window_size})")
        if rep.certificate is not None:
            print("certificate: " + json.dumps(rep.certificate.to_json()))
    return EXIT_INFEASIBLE if rep.refuted else EXIT_UNRESOLVED


def cmd_scan(args) -> int:
    fam = _family(args)
    rows = lower_bound_scan(fam, args.k_max, args.r_max, args.center)
    if args.json:
        _emit([{"k": r.k, "radius": r.radius, "certificate": r.report.certificate.to_json() if r.report else None} for r in rows])
    else:
        print("k\tradius")
        for r in rows:
            print(f"{r.k}\t{r.radius if r.radius is not None else 'unresolved'}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args)
    op = args.subop
    if op == "conditions":
        if args.k is None:
            raise UsageError("oracle conditions needs -k")
        cert = oracle.brute_conditions_digraph(g, args.k) if isinstance(g, Digraph) else oracle.brute_conditions_graph(g, args.k)
        if cert is None:
            _emit({"ok": True, "k": args.k}) if args.json else print(f"conditions hold for k={args.k}")
            return EXIT_OK
        return _report_certificate(args, cert)
    if op == "min-k":
        k = oracle.brute_min_derangements(g) if isinstance(g, Digraph) else oracle.brute_min_cover(g)
        _emit({"k": k}) if args.json else print(f"k={k}" if k is not None else "none")
        return EXIT_OK if k is not None else EXIT_INFEASIBLE
    if isinstance(g, Digraph):
        g = bipartite_double(g)
    if op == "matchings":
        ms = oracle.enumerate_perfect_matchings(g)
        if args.json:
            _emit([[list(e) for e in m] for m in ms])
        else:
            for m in ms:
                print(" ".join(f"{x}-{y}" for x, y in m))
        return EXIT_OK
    ext = oracle.brute_one_extendable(g)
    _emit({"one_extendable": ext}) if args.json else print("1-extendable" if ext else "not 1-extendable")
    return EXIT_OK if ext else EXIT_INFEASIBLE


def _file_args(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
    p.add_argument("--dedup", action="store_true", help="drop duplicate arc/edge lines instead of failing")
    p.add_argument("--undirected", action="store_true", help="read each arc as a pair of opposite arcs")
    p.add_argument("file", help="DGF input file")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    files = _file_args(argparse.ArgumentParser(add_help=False))
    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", required=True, choices=["ladder-graph", "ladder-digraph", "subdivided-product", "Gk", "Dk"])
    fam.add_argument("--H", help="DGF file of the regular bipartite factor for subdivided-product")
    fam.add_argument("--k-param", type=int, help="family parameter for Gk/Dk")
    fam.add_argument("--center", help="window centre (default: the family's seed vertex)")

    p = argparse.ArgumentParser(prog="drgen", description="Derangement generation and 1-factor covers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common, files], help="decide generation/cover with at most k")
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("min-k", parents=[common, files], help="least k")
    s.set_defaults(func=cmd_min_k, k=None)

    s = sub.add_parser("synthesize", parents=[common, files], help="derangements in cycle notation")
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("cover", parents=[common, files], help="1-factor cover of a bipartite graph")
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("double", parents=[common, files], help="print the bipartite double as DGF")
    s.set_defaults(func=cmd_double)

    s = sub.add_parser("window", parents=[common, fam], help="refute on a finite window of a family")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--radius", type=int, required=True)
    s.set_defaults(func=cmd_window)

    s = sub.add_parser("scan", parents=[common, fam], help="least refuting radius for k = 1..k-max")
    s.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    s.add_argument("--r-max", type=int, default=None)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("oracle", parents=[common], help="brute-force reference computations")
    s.add_argument("subop", choices=["conditions", "min-k", "matchings", "one-extendable"])
    _file_args(s)
    s.add_argument("-k", type=int, default=None)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "k", None) is not None and args.k < 1:
        print("drgen: error: k must be a positive integer", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DrgenError, OSError) as exc:
        print(f"drgen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
