"""Command-line entry point exposing the whole pipeline.

Exit codes: 0 success, 1 domain failure (growth failure, exhaustion,
degenerate input, failed verification), 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import io as textio
from .auxgraph import build_aux, simple_subgraph
from .core import (
    TripartiteLinearSystem,
    to_triple_system,
    validate_linear,
    verify_configuration,
    Configuration,
    reduce_or_win,
)
from .degsearch import find_dense_2deg
from .driver import DriverParams, find_be_s_configuration
from .errors import BesforgeError, FormatError
from .girth import girth_of, grow_girth_graph, verify_certificate
from .oracle import exists_config, min_span
from .unpack import audit_involvement, check_lemma_bounds, unpack


def _env_seed():
    return int(os.environ.get("BESFORGE_SEED", "0"))


def _read_system(path):
    with open(path, "r", encoding="utf-8") as fh:
        return textio.loads_system(fh.read())


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _write_report(path, payload, no_timestamp):
    if not no_timestamp:
        payload = dict(payload)
        payload["timestamp"] = int(time.time())
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    _write_text(path, text)


def _add_seed(parser):
    parser.add_argument("--seed", type=int, default=None, help="RNG seed (default: BESFORGE_SEED or 0)")


def _seed_of(args):
    return args.seed if args.seed is not None else _env_seed()


def build_parser():
    p = argparse.ArgumentParser(prog="besforge", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a test system")
    gsub = gen.add_subparsers(dest="kind", required=True)
    gg = gsub.add_parser("group", help="cyclic-group system with m^2 edges")
    gg.add_argument("--m", type=int, required=True)
    gg.add_argument("--out", default=None)
    gr = gsub.add_parser("random", help="greedy partial linear system")
    gr.add_argument("--na", type=int, required=True)
    gr.add_argument("--nb", type=int, required=True)
    gr.add_argument("--nc", type=int, required=True)
    gr.add_argument("--target", type=int, required=True)
    _add_seed(gr)
    gr.add_argument("--out", default=None)

    red = sub.add_parser("reduce", help="reduce a triple system or win a trivial configuration")
    red.add_argument("--input", required=True)
    red.add_argument("--e", type=int, required=True)
    _add_seed(red)
    red.add_argument("--out", default=None, help="path for the reduced system")
    red.add_argument("--report", default=None)
    red.add_argument("--no-timestamp", action="store_true")

    aux = sub.add_parser("aux", help="build the pair-vertex multigraph")
    aux.add_argument("--input", required=True)
    aux.add_argument("--out", default=None, help="path for the multigraph dump")
    aux.add_argument("--report", default=None)
    aux.add_argument("--no-timestamp", action="store_true")

    ff = sub.add_parser("findf", help="search for a dense 2-degenerate pair-graph subgraph")
    ff.add_argument("--input", required=True)
    ff.add_argument("--k", type=int, required=True)
    ff.add_argument("--t", type=int, required=True)
    ff.add_argument("--strategy", default="peel", choices=["peel", "greedy", "exhaustive"])
    _add_seed(ff)
    ff.add_argument("--budget-ms", type=int, default=None)
    ff.add_argument("--report", default=None)
    ff.add_argument("--no-timestamp", action="store_true")

    up = sub.add_parser("unpack", help="find a candidate and unpack it into hyperedges")
    up.add_argument("--input", required=True)
    up.add_argument("--k", type=int, required=True)
    up.add_argument("--t", type=int, required=True)
    up.add_argument("--strategy", default="peel", choices=["peel", "greedy", "exhaustive"])
    _add_seed(up)
    up.add_argument("--budget-ms", type=int, default=None)
    up.add_argument("--trace", default=None, help="path for the JSON step trace")
    up.add_argument("--report", default=None)
    up.add_argument("--no-timestamp", action="store_true")

    so = sub.add_parser("solve", help="assemble exactly e hyperedges with small span")
    so.add_argument("--input", required=True)
    so.add_argument("--e", type=int, required=True)
    so.add_argument("--t", type=int, default=4)
    so.add_argument("--k0", type=int, default=1)
    so.add_argument("--tau-max", type=int, default=4)
    so.add_argument("--base-e", type=int, default=4)
    so.add_argument("--paper-mode", action="store_true")
    so.add_argument("--strategy", default="peel", choices=["peel", "greedy", "exhaustive"])
    _add_seed(so)
    so.add_argument("--budget-ms", type=int, default=None)
    so.add_argument("--report", default=None)
    so.add_argument("--no-timestamp", action="store_true")

    orc = sub.add_parser("oracle", help="exact minimum span by branch and bound")
    orc.add_argument("--input", required=True)
    orc.add_argument("--e", type=int, required=True)
    orc.add_argument("--v", type=int, default=None, help="existence query instead of minimum")
    orc.add_argument("--guard", type=int, default=10**7)

    gi = sub.add_parser("girth", help="grow or check high-girth degenerate graphs")
    gisub = gi.add_subparsers(dest="action", required=True)
    gg2 = gisub.add_parser("grow")
    gg2.add_argument("--k", type=int, required=True)
    gg2.add_argument("--t", type=int, required=True)
    gg2.add_argument("--g", type=int, required=True)
    _add_seed(gg2)
    gg2.add_argument("--out", default=None)
    gc = gisub.add_parser("check")
    gc.add_argument("--input", required=True)
    gc.add_argument("--g", type=int, default=None, help="required girth, if any")

    ver = sub.add_parser("verify", help="verify a configuration against a host system")
    ver.add_argument("--input", required=True)
    ver.add_argument("--config", required=True, help="file of 'e a b c' lines")
    ver.add_argument("--v", type=int, required=True)
    ver.add_argument("--e", type=int, required=True)

    sw = sub.add_parser("sweep", help="run solve over a range of e, emit CSV")
    sw.add_argument("--input", required=True)
    sw.add_argument("--e-min", type=int, required=True)
    sw.add_argument("--e-max", type=int, required=True)
    sw.add_argument("--t", type=int, default=4)
    sw.add_argument("--k0", type=int, default=1)
    sw.add_argument("--tau-max", type=int, default=4)
    sw.add_argument("--base-e", type=int, default=4)
    _add_seed(sw)
    sw.add_argument("--csv", default=None)

    return p


def _cmd_gen(args):
    from .generators import group_system, random_linear

    if args.kind == "group":
        system = group_system(args.m)
    else:
        system = random_linear(args.na, args.nb, args.nc, args.target, seed=_seed_of(args))
    _write_text(args.out, textio.dumps_system(system))
    return 0


def _cmd_reduce(args):
    system = _read_system(args.input)
    result = reduce_or_win(system, args.e, seed=_seed_of(args))
    if result.is_win:
        payload = {
            "branch": "win",
            "e": result.win.e,
            "span": result.win.v,
            "edges": [list(x) for x in result.win.edges],
        }
        if args.report:
            _write_report(args.report, payload, args.no_timestamp)
        print(f"win: {result.win.e} edges on {result.win.v} vertices")
        return 0
    payload = {
        "branch": "reduction",
        "tripartite_edges": result.tripartite_edges,
        "kept_edges": result.kept_edges,
    }
    if args.out:
        _write_text(args.out, textio.dumps_system(result.reduction))
    if args.report:
        _write_report(args.report, payload, args.no_timestamp)
    print(
        f"reduction: kept {result.kept_edges} of {result.tripartite_edges} tripartite edges"
    )
    return 0


def _require_tls(system):
    if not isinstance(system, TripartiteLinearSystem):
        raise FormatError("this command needs a 'p tls' input")
    return system


def _cmd_aux(args):
    lts = _require_tls(_read_system(args.input))
    aux = build_aux(lts)
    if args.out:
        _write_text(args.out, textio.dumps_aux(aux))
    payload = {
        "a_vertices": len(aux.a_vertices),
        "b_vertices": len(aux.b_vertices),
        "multi_edges": aux.multi_edge_count,
        "simple_edges": simple_subgraph(aux).graph.m,
    }
    if args.report:
        _write_report(args.report, payload, args.no_timestamp)
    print(f"aux: {aux.multi_edge_count} multi-edges on "
          f"{len(aux.a_vertices)}+{len(aux.b_vertices)} pair-vertices")
    return 0


def _find_candidate(args, lts):
    aux = build_aux(lts)
    simple = simple_subgraph(aux)
    result = find_dense_2deg(
        simple.graph, args.k, args.t,
        strategy=args.strategy, seed=_seed_of(args), budget_ms=args.budget_ms,
    )
    return aux, simple, result


def _cmd_findf(args):
    lts = _require_tls(_read_system(args.input))
    _aux, _simple, result = _find_candidate(args, lts)
    cand = result.candidate
    payload = {
        "success": result.success,
        "k": cand.k,
        "edges": len(cand.edges),
        "achieved_t": cand.achieved_t,
        "vertices": [list(v[1:]) + [v[0]] for v in cand.vertices],
    }
    if args.report:
        _write_report(args.report, payload, args.no_timestamp)
    print(f"candidate: k={cand.k} edges={len(cand.edges)} achieved_t={cand.achieved_t} "
          f"({'ok' if result.success else 'best-found'})")
    return 0


def _cmd_unpack(args):
    lts = _require_tls(_read_system(args.input))
    aux, simple, result = _find_candidate(args, lts)
    cand = result.candidate
    cfg, trace = unpack(cand, aux, lts, simple=simple)
    bounds = check_lemma_bounds(trace, cand.k, cand.achieved_t)
    audit_involvement(trace)
    if args.trace:
        steps = [s.to_json_dict() for s in trace.steps]
        _write_text(args.trace, json.dumps(steps, indent=2) + "\n")
    payload = {
        "k": cand.k,
        "achieved_t": cand.achieved_t,
        "config_edges": trace.e_total,
        "config_vertices": trace.v_total,
        "assertion1_ok": bounds.assertion1_ok,
        "assertion2_branch": bounds.assertion2_branch,
        "within_hypotheses": bounds.within_hypotheses,
    }
    if args.report:
        _write_report(args.report, payload, args.no_timestamp)
    print(f"unpacked: {trace.e_total} hyperedges on {trace.v_total} vertices "
          f"(branch {bounds.assertion2_branch})")
    return 0


def _cmd_solve(args):
    lts = _require_tls(_read_system(args.input))
    params = DriverParams(
        t=args.t, k0=args.k0, tau_max=args.tau_max, base_e=args.base_e,
        paper_mode=args.paper_mode, seed=_seed_of(args),
        budget_ms=args.budget_ms, strategy=args.strategy,
    )
    report = find_be_s_configuration(lts, args.e, params)
    if args.report:
        _write_report(args.report, report.to_json_dict(), args.no_timestamp)
    print(f"solved: {report.e} edges on {report.span} vertices (d={report.d_achieved})")
    return 0


def _cmd_oracle(args):
    system = _read_system(args.input)
    if args.v is not None:
        ok = exists_config(system, args.v, args.e, guard=args.guard)
        print("true" if ok else "false")
        return 0
    result = min_span(system, args.e, guard=args.guard)
    print(result.v)
    return 0


def _cmd_girth(args):
    if args.action == "grow":
        graph, cert = grow_girth_graph(args.k, args.t, args.g, seed=_seed_of(args))
        girth = girth_of(graph)
        if args.out:
            _write_text(args.out, textio.dumps_graph(graph, cert))
        print(f"grown: {graph.n} vertices, {graph.m} edges, "
              f"girth {'acyclic' if girth is None else girth}")
        return 0
    with open(args.input, "r", encoding="utf-8") as fh:
        graph, cert = textio.loads_graph(fh.read())
    girth = girth_of(graph)
    ok = True
    if cert is not None:
        ok = verify_certificate(graph, cert)
    if args.g is not None:
        ok = ok and (girth is None or girth >= args.g)
    print(f"girth {'acyclic' if girth is None else girth}, "
          f"certificate {'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_verify(args):
    system = _read_system(args.input)
    edges = []
    with open(args.config, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if tokens[0] != "e" or len(tokens) != 4:
                raise FormatError(f"line {lineno}: expected 'e a b c'")
            edges.append(tuple(int(x) for x in tokens[1:]))
    cfg = Configuration.from_edges(system, edges)
    ok = verify_configuration(system, cfg, args.v, args.e)
    print("true" if ok else "false")
    return 0


def _cmd_sweep(args):
    lts = _require_tls(_read_system(args.input))
    params = DriverParams(
        t=args.t, k0=args.k0, tau_max=args.tau_max, base_e=args.base_e,
        seed=_seed_of(args),
    )
    rows = ["e,span,d_achieved"]
    for e in range(args.e_min, args.e_max + 1):
        report = find_be_s_configuration(lts, e, params)
        rows.append(f"{e},{report.span},{report.d_achieved}")
    _write_text(args.csv, "\n".join(rows) + "\n")
    return 0


_DISPATCH = {
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "aux": _cmd_aux,
    "findf": _cmd_findf,
    "unpack": _cmd_unpack,
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "girth": _cmd_girth,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except FormatError as err:
        print(f"format error: {err}", file=sys.stderr)
        return 2
    except FileNotFoundError as err:
        print(f"cannot read {err.filename}", file=sys.stderr)
        return 2
    except BesforgeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
