"""Core hypergraph types: triple systems, tripartite linear systems, configurations.

Vertex addressing conventions:
  * TripleSystem uses global 0-based ids in [0, n).
  * TripartiteLinearSystem uses 0-based part-local ids; a vertex is addressed
    by a key ('A', i), ('B', i) or ('C', i) wherever parts can mix (spans,
    pair maps).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DegenerateInputError, ParameterError


@dataclass(frozen=True)
class TripleSystem:
    """A 3-uniform hypergraph on global vertex ids 0..n-1."""

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be non-negative")
        canon = []
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise ParameterError(f"edge {e} does not have three distinct vertices")
            if not all(isinstance(x, int) and 0 <= x < self.n for x in t):
                raise ParameterError(f"edge {e} has a vertex outside [0, {self.n})")
            canon.append(t)
        if len(set(canon)) != len(canon):
            raise ParameterError("duplicate triples")
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def edge_keys(self, edge):
        return edge

    @property
    def m(self):
        return len(self.edges)


@dataclass(frozen=True)
class TripartiteLinearSystem:
    """A linear 3-partite 3-graph with parts A, B, C and part-local edges (a, b, c).

    Linearity itself is not enforced at construction (validate_linear checks
    it); tripartiteness and range checks are.
    """

    sizes: tuple  # (nA, nB, nC)
    edges: tuple  # (a, b, c), part-local

    def __post_init__(self):
        na, nb, nc = self.sizes
        if min(na, nb, nc) < 0:
            raise ParameterError("part sizes must be non-negative")
        canon = []
        for e in self.edges:
            a, b, c = e
            if not (0 <= a < na and 0 <= b < nb and 0 <= c < nc):
                raise ParameterError(f"edge {e} has a vertex outside its part")
            canon.append((a, b, c))
        if len(set(canon)) != len(canon):
            raise ParameterError("duplicate triples")
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def edge_keys(self, edge):
        a, b, c = edge
        return (("A", a), ("B", b), ("C", c))

    @property
    def n(self):
        return sum(self.sizes)

    @property
    def m(self):
        return len(self.edges)

    def apex_degrees(self):
        """d(c) for every c in the C part, as a list indexed by c."""
        d = [0] * self.sizes[2]
        for _, _, c in self.edges:
            d[c] += 1
        return d


@dataclass(frozen=True)
class Configuration:
    """A set of hyperedges of some host system together with its span."""

    edges: tuple
    span: frozenset

    @classmethod
    def from_edges(cls, host, edges):
        edges = tuple(sorted(set(edges)))
        span = frozenset(k for e in edges for k in host.edge_keys(e))
        return cls(edges, span)

    @property
    def e(self):
        return len(self.edges)

    @property
    def v(self):
        return len(self.span)

    @property
    def deficiency(self):
        return self.v - self.e


@dataclass(frozen=True)
class LinearityVerdict:
    ok: bool
    pair: tuple = None
    edges: tuple = None

    def __bool__(self):
        return self.ok


def pair_map(system):
    """Map each unordered vertex-key pair to the list of edges containing it."""
    pm = {}
    for e in system.edges:
        keys = system.edge_keys(e)
        for p, q in combinations(sorted(keys), 2):
            pm.setdefault((p, q), []).append(e)
    return pm


def validate_linear(system):
    """Check that no pair of vertices lies in two or more edges.

    Total function over TripleSystem and TripartiteLinearSystem; returns a
    verdict carrying one violating pair if any.
    """
    pm = pair_map(system)
    for pair in sorted(pm):
        hits = pm[pair]
        if len(hits) >= 2:
            return LinearityVerdict(False, pair, tuple(sorted(hits)[:2]))
    return LinearityVerdict(True)


def verify_configuration(host, cfg, v, e):
    """True iff cfg has exactly e distinct host edges spanning at most v vertices."""
    edges = cfg.edges
    if len(edges) != e or len(set(edges)) != e:
        return False
    host_edges = set(host.edges)
    if any(x not in host_edges for x in edges):
        return False
    span = {k for x in edges for k in host.edge_keys(x)}
    return len(span) <= v


def to_triple_system(lts):
    """Flatten a tripartite system to global ids (A first, then B, then C)."""
    na, nb, _ = lts.sizes
    edges = [(a, na + b, na + nb + c) for a, b, c in lts.edges]
    return TripleSystem(lts.n, tuple(edges))


@dataclass(frozen=True)
class ReduceOrWin:
    """Result of reduce_or_win: exactly one of win / reduction is set."""

    win: Configuration = None
    reduction: TripartiteLinearSystem = None
    tripartite_edges: int = 0
    kept_edges: int = 0
    coloring: tuple = ()
    part_vertices: tuple = ()  # (globals in A, in B, in C) for the reduction

    @property
    def is_win(self):
        return self.win is not None


def _greedy_coloring(ts):
    """First-fit rainbow 3-coloring; recovers a tripartition when one is easy."""
    color = {}
    for e in ts.edges:
        used = {color[x] for x in e if x in color}
        for x in e:
            if x in color:
                continue
            avail = [c for c in range(3) if c not in used]
            c = avail[0] if avail else len(color) % 3
            color[x] = c
            used.add(c)
    for x in range(ts.n):
        color.setdefault(x, x % 3)
    return tuple(color[x] for x in range(ts.n))


def _tripartite_count(ts, coloring):
    return sum(1 for e in ts.edges if len({coloring[x] for x in e}) == 3)


def reduce_or_win(ts, e, seed=0):
    """Either find e edges through one pair (a trivial (e+2, e)-configuration)
    or reduce ts to a linear tripartite subsystem.

    The reduction 3-colors vertices (one deterministic first-fit candidate,
    then 20 seeded uniform candidates; best properly-tripartite count wins)
    and then keeps edges greedily so no vertex pair repeats. Since in the
    reduction branch every pair lies in at most e-1 edges, each kept edge
    blocks at most 3(e-2) others, so at least a 1/(3e-5) fraction of the
    properly tripartite edges is retained.
    """
    if e < 1:
        raise ParameterError("e must be positive")
    pm = pair_map(ts)
    heavy = sorted(p for p, hits in pm.items() if len(hits) >= e)
    if heavy:
        pair = heavy[0]
        chosen = sorted(pm[pair])[:e]
        return ReduceOrWin(win=Configuration.from_edges(ts, chosen))

    candidates = [_greedy_coloring(ts)]
    for i in range(20):
        rng = random.Random(f"{seed}:{i}")
        candidates.append(tuple(rng.randrange(3) for _ in range(ts.n)))
    coloring = max(candidates, key=lambda c: _tripartite_count(ts, c))
    tri_edges = [x for x in ts.edges if len({coloring[v] for v in x}) == 3]

    rng = random.Random(f"{seed}:block")
    order = list(tri_edges)
    rng.shuffle(order)
    used_pairs = set()
    kept = []
    for x in order:
        pairs = [tuple(sorted(p)) for p in combinations(x, 2)]
        if any(p in used_pairs for p in pairs):
            continue
        kept.append(x)
        used_pairs.update(pairs)

    if not kept:
        raise DegenerateInputError("no win available and the reduction is empty")

    parts = [sorted(v for v in range(ts.n) if coloring[v] == c) for c in range(3)]
    local = [{v: i for i, v in enumerate(part)} for part in parts]
    edges = []
    for x in kept:
        by_color = sorted(x, key=lambda v: coloring[v])
        a, b, c = by_color
        edges.append((local[0][a], local[1][b], local[2][c]))
    lts = TripartiteLinearSystem(tuple(len(p) for p in parts), tuple(edges))
    return ReduceOrWin(
        reduction=lts,
        tripartite_edges=len(tri_edges),
        kept_edges=len(kept),
        coloring=coloring,
        part_vertices=tuple(tuple(p) for p in parts),
    )
