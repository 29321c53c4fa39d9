"""A small simple-graph container shared by the pair-graph, search and girth code."""

from __future__ import annotations

from collections import deque


def canon_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on hashable, mutually comparable vertices."""

    __slots__ = ("_adj",)

    def __init__(self, vertices=(), edges=()):
        self._adj = {}
        for v in vertices:
            self._adj.setdefault(v, set())
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v):
        self._adj.setdefault(v, set())

    def add_edge(self, u, v):
        if u == v:
            raise ValueError("loops are not allowed")
        self._adj.setdefault(u, set()).add(v)
        self._adj.setdefault(v, set()).add(u)

    @property
    def vertices(self):
        return tuple(sorted(self._adj))

    @property
    def edges(self):
        return tuple(sorted(canon_edge(u, v) for u in self._adj for v in self._adj[u] if u < v))

    @property
    def n(self):
        return len(self._adj)

    @property
    def m(self):
        return sum(len(s) for s in self._adj.values()) // 2

    def degree(self, v):
        return len(self._adj[v])

    def neighbors(self, v):
        return self._adj[v]

    def has_vertex(self, v):
        return v in self._adj

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def adjacency(self):
        return self._adj

    def induced(self, vertex_set):
        keep = set(vertex_set)
        g = Graph(vertices=sorted(keep))
        for u in keep:
            if u not in self._adj:
                continue
            for v in self._adj[u]:
                if v in keep and u < v:
                    g.add_edge(u, v)
        return g


def two_coloring(g):
    """A BFS 2-coloring as a dict vertex -> 0/1, or None if not bipartite."""
    color = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def within_distance(g, u, v, limit):
    """True iff there is a u-v path of length at most limit."""
    if u == v:
        return True
    if limit <= 0:
        return False
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if dist[x] == limit:
            continue
        for w in g.neighbors(x):
            if w in dist:
                continue
            if w == v:
                return True
            dist[w] = dist[x] + 1
            queue.append(w)
    return False
