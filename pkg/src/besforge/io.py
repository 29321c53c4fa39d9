"""Text formats for systems, pair-graph dumps, graphs and growth certificates.

All formats are line-based; '#' starts a comment line; tokens are
whitespace-separated and every record line is newline-terminated.
"""

from __future__ import annotations

from .core import TripartiteLinearSystem, TripleSystem
from .errors import FormatError
from .girth import GrowthCertificate
from .graphs import Graph


def _records(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _ints(tokens, lineno):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {tokens}") from None


def dumps_system(system):
    if isinstance(system, TripleSystem):
        lines = [f"p ts {system.n} {system.m}"]
        lines += [f"e {u} {v} {w}" for u, v, w in system.edges]
    elif isinstance(system, TripartiteLinearSystem):
        na, nb, nc = system.sizes
        lines = [f"p tls {na} {nb} {nc} {system.m}"]
        lines += [f"e {a} {b} {c}" for a, b, c in system.edges]
    else:
        raise FormatError(f"cannot serialize {type(system).__name__}")
    return "\n".join(lines) + "\n"


def loads_system(text):
    header = None
    edges = []
    expect = None
    for lineno, tokens in _records(text):
        if tokens[0] == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if tokens[1] == "ts" and len(tokens) == 4:
                header = ("ts", *_ints(tokens[2:], lineno))
            elif tokens[1] == "tls" and len(tokens) == 6:
                header = ("tls", *_ints(tokens[2:], lineno))
            else:
                raise FormatError(f"line {lineno}: bad header {' '.join(tokens)}")
        elif tokens[0] == "e":
            if header is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(tokens) != 4:
                raise FormatError(f"line {lineno}: edge needs three vertices")
            edges.append(tuple(_ints(tokens[1:], lineno)))
        else:
            raise FormatError(f"line {lineno}: unknown record {tokens[0]!r}")
    if header is None:
        raise FormatError("missing 'p' header")
    kind = header[0]
    if kind == "ts":
        n, m = header[1], header[2]
        if len(edges) != m:
            raise FormatError(f"header declares {m} edges, found {len(edges)}")
        return TripleSystem(n, tuple(edges))
    na, nb, nc, m = header[1:]
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return TripartiteLinearSystem((na, nb, nc), tuple(edges))


def dumps_aux(aux):
    lines = [f"p aux {len(aux.a_vertices)} {len(aux.b_vertices)} {aux.multi_edge_count}"]
    for ed in aux.edges:
        lines.append(
            f"x {ed.u[1]} {ed.u[2]} {ed.w[1]} {ed.w[2]} {ed.apex} {ed.pairing}"
        )
    return "\n".join(lines) + "\n"


def dumps_graph(graph, cert=None):
    lines = [f"p graph {graph.n} {graph.m}"]
    lines += [f"g {u} {v}" for u, v in graph.edges]
    if cert is not None:
        lines.append(f"c {cert.t}")
        lines += [f"a {v} {u1} {u2}" for v, u1, u2 in cert.attachments]
    return "\n".join(lines) + "\n"


def loads_graph(text):
    """Parse a graph file; returns (Graph, GrowthCertificate | None).

    Certificate sides are reconstructed by replaying the balanced growth rule.
    """
    n = None
    edges = []
    t = None
    attachments = []
    for lineno, tokens in _records(text):
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "graph":
                raise FormatError(f"line {lineno}: bad header")
            n, _m = _ints(tokens[2:], lineno)
        elif tokens[0] == "g":
            u, v = _ints(tokens[1:], lineno)
            edges.append((u, v))
        elif tokens[0] == "c":
            (t,) = _ints(tokens[1:], lineno)
        elif tokens[0] == "a":
            v, u1, u2 = _ints(tokens[1:], lineno)
            attachments.append((v, u1, u2))
        else:
            raise FormatError(f"line {lineno}: unknown record {tokens[0]!r}")
    if n is None:
        raise FormatError("missing 'p graph' header")
    graph = Graph(vertices=range(n), edges=edges)
    cert = None
    if t is not None:
        sides = _replay_sides(n, t)
        cert = GrowthCertificate(t, tuple(range(n)), tuple(attachments), sides)
    return graph, cert


def _replay_sides(n, t):
    sides = []
    count = {"A": 0, "B": 0}
    for _ in range(n):
        s = "A" if count["A"] <= count["B"] else "B"
        sides.append(s)
        count[s] += 1
    return tuple(sides)
