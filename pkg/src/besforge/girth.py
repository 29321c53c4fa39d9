"""Growth of exactly-(2,t)-degenerate bipartite graphs of prescribed girth.

Vertices are labeled 0..k-1 in construction order. The first t form an
independent set; each later vertex joins the smaller bipartition side and
attaches to two vertices of the larger side that have degree at most 7 and
no path of length at most g-2 between them.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import GrowthError, ParameterError
from .graphs import Graph, two_coloring, within_distance

log = logging.getLogger(__name__)

_MAX_DEGREE = 8
_PAIR_DEGREE_CAP = 7
_RANDOM_ATTEMPTS = 128


@dataclass(frozen=True)
class GrowthCertificate:
    t: int
    order: tuple  # all vertices in construction order
    attachments: tuple  # (v, u1, u2) for every post-seed vertex
    sides: tuple  # 'A' or 'B' per vertex id


def grow_girth_graph(k, t, g, seed=0, deterministic=False):
    """Grow a k-vertex graph of girth >= g; returns (Graph, GrowthCertificate).

    Raises GrowthError when no valid attachment pair exists at some step,
    which signals that t is too small for this g at this size.
    """
    if not (k >= t >= 1):
        raise ParameterError("need k >= t >= 1")
    if g < 3:
        raise ParameterError("girth target must be at least 3")
    rng = random.Random(seed)
    graph = Graph()
    sides = []
    side_members = {"A": [], "B": []}
    attachments = []

    def join_side():
        return "A" if len(side_members["A"]) <= len(side_members["B"]) else "B"

    for v in range(t):
        s = join_side()
        graph.add_vertex(v)
        sides.append(s)
        side_members[s].append(v)

    for v in range(t, k):
        s = join_side()
        other = "B" if s == "A" else "A"
        eligible = [u for u in side_members[other] if graph.degree(u) <= _PAIR_DEGREE_CAP]
        gate = comb(max((len(side_members[other]) + 3) // 4, 0), 2)
        log.debug(
            "step %d: %d eligible vertices on side %s (counting gate %d pairs)",
            v, len(eligible), other, gate,
        )
        pair = _pick_pair(graph, eligible, g, rng, deterministic)
        if pair is None:
            raise GrowthError(v, graph.n)
        u1, u2 = pair
        graph.add_vertex(v)
        sides.append(s)
        side_members[s].append(v)
        graph.add_edge(v, u1)
        graph.add_edge(v, u2)
        attachments.append((v, u1, u2))
        if graph.degree(u1) > _MAX_DEGREE or graph.degree(u2) > _MAX_DEGREE:
            raise AssertionError("degree cap violated")

    cert = GrowthCertificate(t, tuple(range(k)), tuple(attachments), tuple(sides))
    return graph, cert


def _pick_pair(graph, eligible, g, rng, deterministic):
    limit = g - 2
    if len(eligible) < 2:
        return None
    if deterministic:
        for i, u in enumerate(eligible):
            for w in eligible[i + 1 :]:
                if not within_distance(graph, u, w, limit):
                    return (u, w)
        return None
    for _ in range(_RANDOM_ATTEMPTS):
        u, w = rng.sample(eligible, 2)
        if not within_distance(graph, u, w, limit):
            return (min(u, w), max(u, w))
    pairs = [(u, w) for i, u in enumerate(eligible) for w in eligible[i + 1 :]]
    rng.shuffle(pairs)
    for u, w in pairs:
        if not within_distance(graph, u, w, limit):
            return (u, w)
    return None


def girth_of(graph):
    """Exact girth by BFS from every vertex; None for acyclic graphs."""
    best = None
    adj = graph.adjacency()
    for root in graph.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def verify_certificate(graph, cert):
    """Replay a growth certificate against a graph; True iff it checks out."""
    k = len(cert.order)
    if tuple(sorted(graph.vertices)) != tuple(sorted(cert.order)):
        return False
    if len(cert.sides) != k or any(s not in ("A", "B") for s in cert.sides):
        return False
    seeds = list(cert.order[: cert.t])
    built_edges = set()
    placed = set(seeds)
    if len(cert.attachments) != k - cert.t:
        return False
    for (v, u1, u2), expected in zip(cert.attachments, cert.order[cert.t :]):
        if v != expected or u1 == u2:
            return False
        if u1 not in placed or u2 not in placed or v in placed:
            return False
        placed.add(v)
        built_edges.add((min(v, u1), max(v, u1)))
        built_edges.add((min(v, u2), max(v, u2)))
    if built_edges != set(graph.edges):
        return False
    # seeds must be mutually non-adjacent (vacuous when edges only touch later vertices)
    for i, u in enumerate(seeds):
        for w in seeds[i + 1 :]:
            if graph.has_edge(u, w):
                return False
    pos = {v: i for i, v in enumerate(cert.order)}
    for u, w in graph.edges:
        if cert.sides[pos[u]] == cert.sides[pos[w]]:
            return False
    if two_coloring(graph) is None:
        return False
    return True


def find_growth_t(k, g, seed=0, t_start=2):
    """Double t until growth succeeds for the requested k and g.

    Returns (t, graph, certificate). The existence threshold t(g) is not
    known in closed form, so this is the practical substitute.
    """
    t = max(1, t_start)
    while t <= k:
        try:
            graph, cert = grow_girth_graph(k, t, g, seed=seed)
            return t, graph, cert
        except GrowthError:
            t *= 2
    graph, cert = grow_girth_graph(k, k, g, seed=seed)
    return k, graph, cert
