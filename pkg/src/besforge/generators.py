"""Deterministic and seeded sources of dense linear tripartite systems."""

from __future__ import annotations

import random

from .core import TripartiteLinearSystem
from .errors import ParameterError

_MAX_REJECTIONS = 10**6


def group_system(m):
    """The cyclic-group system: parts Z_m, edges {(a, b, a+b mod m)}.

    Linear because any two coordinates determine the third; exactly m^2 edges,
    every vertex of degree m.
    """
    if m < 1:
        raise ParameterError("m must be positive")
    edges = tuple((a, b, (a + b) % m) for a in range(m) for b in range(m))
    return TripartiteLinearSystem((m, m, m), edges)


def random_linear(na, nb, nc, target_edges, seed=0):
    """Greedy partial linear system: sample triples, accept if all 3 pairs are fresh.

    Stops at target_edges or after 10^6 consecutive rejections; may return
    fewer edges than requested. Deterministic in (sizes, target, seed).
    """
    if min(na, nb, nc) < 1:
        raise ParameterError("part sizes must be positive")
    if target_edges < 0:
        raise ParameterError("target_edges must be non-negative")
    rng = random.Random(f"{na},{nb},{nc},{target_edges},{seed}")
    used = set()
    edges = []
    rejections = 0
    while len(edges) < target_edges and rejections < _MAX_REJECTIONS:
        a = rng.randrange(na)
        b = rng.randrange(nb)
        c = rng.randrange(nc)
        pairs = ((("A", a), ("B", b)), (("A", a), ("C", c)), (("B", b), ("C", c)))
        if any(p in used for p in pairs):
            rejections += 1
            continue
        rejections = 0
        edges.append((a, b, c))
        used.update(pairs)
    return TripartiteLinearSystem((na, nb, nc), tuple(edges))
