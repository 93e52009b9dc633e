"""Command-line front end.

Exit codes: 0 success / property holds, 1 property violated or
counterexample, 2 usage or input-format error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from . import formats
from .berge import has_berge_cycle_at_least, find_berge_path, longest_berge_path
from .classify import classify_components, classify_leaf_blocks
from .constructions import (
    FORMULAS,
    FormulaQuery,
    construct_G2,
    construct_G3,
    construct_H,
    construct_W,
    formula_detail,
)
from .core import (
    Graph,
    Hypergraph,
    RedBlueGraph,
    blocks,
    hypergraph_cut_hyperedges,
    hypergraph_cut_vertices,
    is_connected_hypergraph,
)
from .kelmans import kelmans, kelmans_colored, p_star, recolor_pipeline
from .reduction import g_r, reduce, verify_certificate
from .search import GRAPH_KINDS, Counterexample, exact_hypergraph_turan, verify_graph_turan

OK, VIOLATED, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ output


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _render(payload: dict, fmt: str) -> str:
    """Reports as JSON, CSV (flat key,value rows) or aligned text."""
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    rows = list(_flatten(payload))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        return buf.getvalue()
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}[{i}]")
    else:
        if isinstance(obj, list):
            obj = json.dumps(obj, separators=(",", ":"))
        yield prefix, "" if obj is None else obj


def _load(path: str):
    return formats.read(path)


def _load_typed(path: str, *types):
    obj = _load(path)
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise UsageError(f"{path}: expected a {names}, got a {type(obj).__name__}")
    return obj


# ------------------------------------------------------------------- verbs


def cmd_construct(args) -> int:
    if args.family in ("h-path", "h-cycle"):
        _need(args, "n", "k", "r")
        k = args.k if args.family == "h-path" else args.k + 1
        obj = construct_H(args.n, k, args.r)
    elif args.family == "w":
        _need(args, "n", "k", "s")
        obj = construct_W(args.n, args.k, args.s)
    elif args.family == "g2":
        _need(args, "n")
        obj = construct_G2(args.n, args.b)
    else:
        _need(args, "n", "stars")
        sizes = [int(x) for x in args.stars.split(",") if x.strip()]
        obj = construct_G3(args.n, sizes)
    _emit(formats.serialize(obj), args.output)
    return OK


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.family} needs {', '.join(missing)}")


def cmd_check(args) -> int:
    obj = _load(args.input)
    prop = args.property
    report: dict = {"property": prop, "input": args.input}
    if prop in ("berge-path-free", "berge-cycle-free"):
        if args.k is None:
            raise UsageError(f"{prop} needs --k")
        h = _as_hypergraph(obj, args.input)
        emb = find_berge_path(h, args.k) if prop == "berge-path-free" else has_berge_cycle_at_least(h, args.k)
        report.update(k=args.k, holds=emb is None, certificate=emb.to_dict() if emb else None)
    elif prop == "connected":
        if isinstance(obj, Hypergraph):
            holds = is_connected_hypergraph(obj)
        else:
            holds = _graph_of(obj).is_connected()
        report["holds"] = holds
    elif prop == "two-connected":
        if isinstance(obj, Hypergraph):
            if not is_connected_hypergraph(obj):
                report.update(holds=False, reason="disconnected")
            else:
                cv = sorted(hypergraph_cut_vertices(obj))
                ce = [list(e) for e in hypergraph_cut_hyperedges(obj)]
                report.update(holds=not cv and not ce, cut_vertices=cv, cut_hyperedges=ce)
        else:
            g = _graph_of(obj)
            dec = blocks(g)
            holds = g.n >= 3 and len(dec.blocks) == 1 and not dec.cut_vertices
            report.update(holds=holds, cut_vertices=sorted(dec.cut_vertices), blocks=len(dec.blocks))
    elif prop == "longest-berge-path":
        h = _as_hypergraph(obj, args.input)
        emb = longest_berge_path(h)
        report.update(holds=True, order=emb.order if emb else min(h.n, 1), certificate=emb.to_dict() if emb else None)
    else:  # certificate
        if not args.certificate:
            raise UsageError("certificate needs --certificate FILE")
        from .reduction import ReductionCertificate

        cert = ReductionCertificate.from_dict(json.loads(Path(args.certificate).read_text(encoding="utf-8")))
        verdict = verify_certificate(cert)
        same_source = cert.source == _as_hypergraph(obj, args.input)
        report.update(holds=bool(verdict) and same_source,
                      reason=verdict.reason if same_source else "certificate is for another hypergraph")
    _emit(_render(report, args.format), args.output)
    return OK if report["holds"] else VIOLATED


def _as_hypergraph(obj, path: str) -> Hypergraph:
    if not isinstance(obj, Hypergraph):
        raise UsageError(f"{path}: expected a hypergraph")
    return obj


def _graph_of(obj) -> Graph:
    return obj.graph if isinstance(obj, RedBlueGraph) else obj


def cmd_reduce(args) -> int:
    h = _load_typed(args.input, Hypergraph)
    cert = reduce(h)
    verdict = verify_certificate(cert)
    _emit(formats.serialize(cert.output), args.output)
    if args.certificate:
        Path(args.certificate).write_text(json.dumps(cert.to_dict(), sort_keys=True) + "\n", encoding="utf-8")
    summary = {
        "hyperedges": h.m,
        "g_r": g_r(cert.output, h.r),
        "red_hyperedges": len(cert.red_hyperedges),
        "blue_hyperedges": len(cert.blue_hyperedges),
        "certificate_ok": bool(verdict),
        "reason": verdict.reason,
    }
    sys.stderr.write(_render(summary, "text"))
    return OK if verdict else VIOLATED


def cmd_kelmans(args) -> int:
    obj = _load_typed(args.input, Graph, RedBlueGraph)
    if args.action == "apply":
        if args.u is None or args.v is None:
            raise UsageError("kelmans apply needs --u and --v")
        if args.u == args.v:
            raise UsageError("u and v must differ")
        out = kelmans_colored(obj, args.u, args.v) if isinstance(obj, RedBlueGraph) else kelmans(obj, args.u, args.v)
        _emit(formats.serialize(out), args.output)
        return OK
    if not isinstance(obj, RedBlueGraph):
        raise UsageError("kelmans recolor needs a red-blue graph")
    if args.r is None or args.k is None:
        raise UsageError("kelmans recolor needs --r and --k")
    result = recolor_pipeline(obj, args.r, args.k, args.family)
    if args.log:
        Path(args.log).write_text(result.log_csv(), encoding="utf-8")
    _emit(formats.serialize(result.coloring), args.output)
    monotone = all(s.g_r_after >= s.g_r_before for s in result.steps)
    return OK if monotone and result.terminal_color is not None else VIOLATED


def cmd_gr(args) -> int:
    obj = _load_typed(args.input, Graph, RedBlueGraph)
    report: dict = {"r": args.r}
    if isinstance(obj, RedBlueGraph):
        report["g_r"] = g_r(obj, args.r)
    if args.pstar or isinstance(obj, Graph):
        ps = p_star(_graph_of(obj), args.r, args.brute_limit, args.heuristic)
        report["p_star"] = ps.value
        report["p_star_exact"] = ps.exact
    _emit(_render(report, args.format), args.output)
    return OK


def cmd_classify(args) -> int:
    obj = _load_typed(args.input, Graph, RedBlueGraph)
    if args.what == "components":
        items = [c.to_dict() for c in classify_components(obj, args.k)]
    else:
        items = [b.to_dict() for b in classify_leaf_blocks(_graph_of(obj), args.k, args.size_threshold)]
    _emit(_render({"k": args.k, "kind": args.what, "classes": items}, args.format), args.output)
    return OK


def cmd_formula(args) -> int:
    fv = formula_detail(FormulaQuery(args.family, args.n, args.k, args.r))
    if args.format == "text":
        _emit(f"{fv.value}\n", args.output)
    else:
        _emit(_render(fv.to_dict(), args.format), args.output)
    return OK


def cmd_verify(args) -> int:
    from . import verify

    try:
        seed = verify.read_seed_file(args.seed_file)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    ids = None if args.which == "all" else [int(args.which)]
    if ids and ids[0] not in verify.CRITERIA:
        raise UsageError(f"no criterion {args.which}; choose 1-8 or all")
    report = verify.run_all(seed, jobs=args.jobs, timings=args.timings, ids=ids)
    if args.format == "json":
        _emit(verify.dumps_report(report), args.output)
    else:
        lines = [f"{c['id']}. {c['name']}: {c['status']}" for c in report["criteria"]]
        lines.append(f"9. reproducibility digest: {report['reproducibility']['sha256']}")
        _emit("\n".join(lines) + "\n", args.output)
    return OK if all(c["status"] == "PASS" for c in report["criteria"]) else VIOLATED


def cmd_search(args) -> int:
    if args.target == "hypergraph":
        for name in ("n", "r", "k"):
            if getattr(args, name) is None:
                raise UsageError(f"search hypergraph needs --{name}")
        rep = exact_hypergraph_turan(
            args.n, args.r, args.k, args.pattern, args.mode.replace("-", "_"), args.node_cap, args.time_cap, args.heuristic
        )
        _emit(_render(rep.to_dict(args.timings), args.format), args.output)
        return OK if rep.exact else BUDGET
    if args.kind is None or args.n is None:
        raise UsageError("search graph needs --kind and --n (maximum order)")
    ks = [int(x) for x in args.ks.split(",")] if args.ks else None
    try:
        if args.jobs > 1 and ks and len(ks) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                parts = list(pool.map(verify_graph_turan, [args.kind] * len(ks), [args.n] * len(ks), [[k] for k in ks]))
            reports = sorted((r for part in parts for r in part), key=lambda r: (r.n, r.k))
        else:
            reports = verify_graph_turan(args.kind, args.n, ks)
    except Counterexample as exc:
        _emit(_render({"statement": exc.statement, "detail": exc.detail,
                       "counterexample": formats.serialize(exc.graph)}, args.format), args.output)
        return VIOLATED
    payload = {"kind": args.kind, "reports": [r.to_dict(args.timings) for r in reports]}
    _emit(_render(payload, args.format), args.output)
    return OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), help="report format (default json; text for formula)")

    p = argparse.ArgumentParser(prog="berge-turan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("construct", parents=[common], help="generate an extremal construction")
    c.add_argument("family", choices=("h-path", "h-cycle", "w", "g2", "g3"))
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int, help="forbidden order (h-cycle builds H(n,k+1,r))")
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--b", type=int, help="size of the B part of G2")
    c.add_argument("--stars", help="comma-separated star sizes for G3")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", parents=[common], help="test a property of a structure")
    c.add_argument(
        "property",
        choices=("berge-path-free", "berge-cycle-free", "connected", "two-connected", "longest-berge-path", "certificate"),
    )
    c.add_argument("input")
    c.add_argument("--k", type=int)
    c.add_argument("--certificate", help="reduction certificate JSON (for 'certificate')")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("reduce", parents=[common], help="hypergraph to red-blue graph")
    c.add_argument("input")
    c.add_argument("--certificate", help="write the certificate JSON here")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("kelmans", parents=[common], help="Kelmans operation or recolouring pipeline")
    c.add_argument("action", choices=("apply", "recolor"))
    c.add_argument("input")
    c.add_argument("--u", type=int)
    c.add_argument("--v", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--family", choices=("path", "cycle"), default="path")
    c.add_argument("--log", help="CSV step log destination")
    c.set_defaults(func=cmd_kelmans)

    c = sub.add_parser("gr", parents=[common], help="g_r of a red-blue graph, P* of a graph")
    c.add_argument("input")
    c.add_argument("--r", type=int, default=3)
    c.add_argument("--pstar", action="store_true", help="also compute P* of the underlying graph")
    c.add_argument("--brute-limit", type=int, default=22)
    c.add_argument("--heuristic", action="store_true")
    c.set_defaults(func=cmd_gr)

    c = sub.add_parser("classify", parents=[common], help="component or leaf-block classification")
    c.add_argument("what", choices=("components", "leaf-blocks"))
    c.add_argument("input")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--size-threshold", type=int)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("formula", parents=[common], help="evaluate a closed-form value")
    c.add_argument("family", choices=sorted(FORMULAS))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--r", type=int, default=2)
    c.set_defaults(func=cmd_formula)

    c = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    c.add_argument("which", nargs="?", default="all", help="'all' or a criterion number")
    c.add_argument("--seed-file")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identity)")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("search", parents=[common], help="exact Turan searches")
    c.add_argument("target", choices=("graph", "hypergraph"))
    c.add_argument("--kind", choices=GRAPH_KINDS, help="classical statement (graph target)")
    c.add_argument("--n", type=int, help="order (hypergraph) or maximum order (graph)")
    c.add_argument("--k", type=int)
    c.add_argument("--ks", help="comma-separated k values (graph target)")
    c.add_argument("--r", type=int)
    c.add_argument("--pattern", choices=("path", "cycle"), default="path")
    c.add_argument("--mode", choices=("all", "connected", "two-connected"), default="all")
    c.add_argument("--node-cap", type=int, default=5_000_000)
    c.add_argument("--time-cap", type=float, default=120.0)
    c.add_argument("--heuristic", action="store_true")
    c.add_argument("--jobs", type=int, default=1, help="workers, one per k value (graph target)")
    c.add_argument("--timings", action="store_true")
    c.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if args.format is None:
        args.format = "text" if args.verb == "formula" else "json"
    try:
        return args.func(args)
    except formats.FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE
    except (UsageError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
