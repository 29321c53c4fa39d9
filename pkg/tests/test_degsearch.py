import random

import pytest

from besforge import (
    Graph,
    ParameterError,
    brute_force_best_2deg,
    build_aux,
    degeneracy_ordering,
    find_dense_2deg,
    group_system,
    simple_subgraph,
)


def path3():
    return Graph(edges=[(0, 1), (1, 2)])


def c4():
    return Graph(edges=[(0, 1), (1, 2), (2, 3), (0, 3)])


def k4():
    return Graph(edges=[(i, j) for i in range(4) for j in range(i + 1, 4)])


def k33():
    return Graph(edges=[(i, j) for i in range(3) for j in range(3, 6)])


def test_degeneracy_values():
    assert degeneracy_ordering(path3()).degeneracy == 1
    assert degeneracy_ordering(c4()).degeneracy == 2
    assert degeneracy_ordering(k33()).degeneracy == 3


def test_degeneracy_back_degrees_consistent():
    g = k33()
    ordering = degeneracy_ordering(g)
    pos = {v: i for i, v in enumerate(ordering.order)}
    for i, v in enumerate(ordering.order):
        back = sum(1 for u in g.neighbors(v) if pos[u] < i)
        assert back == ordering.back_degrees[i]
    assert ordering.degeneracy == max(ordering.back_degrees)


def test_find_on_aux_k33_hits_a_4_cycle():
    simple = simple_subgraph(build_aux(group_system(3)))
    res = find_dense_2deg(simple.graph, 4, 4, strategy="exhaustive")
    assert res.success
    assert res.candidate.k == 4 and len(res.candidate.edges) == 4


def test_find_single_edge():
    g = Graph(edges=[(0, 1)])
    res = find_dense_2deg(g, 2, 3, strategy="exhaustive")
    assert res.success and len(res.candidate.edges) == 1


def test_find_c4_k4_t3_fails_with_best_found():
    res = find_dense_2deg(c4(), 4, 3, strategy="exhaustive")
    assert not res.success
    assert len(res.candidate.edges) == 4 and res.achieved_t == 4


def test_parameter_errors():
    with pytest.raises(ParameterError):
        find_dense_2deg(c4(), 5, 3)
    with pytest.raises(ParameterError):
        find_dense_2deg(c4(), 1, 3)


def test_brute_force_trivia():
    assert brute_force_best_2deg(k4(), 4)[0] == 5
    assert brute_force_best_2deg(c4(), 4)[0] == 4
    assert brute_force_best_2deg(Graph(vertices=range(4)), 3)[0] == 0


def test_brute_force_witness_validates():
    val, witness = brute_force_best_2deg(k33(), 5)
    witness.validate(k33())
    assert len(witness.edges) == val


def _random_bipartite(rng, max_side=5):
    na = rng.randint(1, max_side)
    nb = rng.randint(1, max_side)
    left = list(range(na))
    right = list(range(na, na + nb))
    g = Graph(vertices=left + right)
    for u in left:
        for v in right:
            if rng.random() < 0.5:
                g.add_edge(u, v)
    return g


def test_exhaustive_matches_brute_force_and_heuristics_never_exceed():
    rng = random.Random(42)
    for _ in range(60):
        g = _random_bipartite(rng)
        k = rng.randint(2, g.n) if g.n >= 2 else 2
        if g.n < 2:
            continue
        opt, _w = brute_force_best_2deg(g, k)
        exact = find_dense_2deg(g, k, 0, strategy="exhaustive")
        assert len(exact.candidate.edges) == opt
        for strategy in ("peel", "greedy"):
            res = find_dense_2deg(g, k, 0, strategy=strategy, seed=1)
            res.candidate.validate(g)
            assert len(res.candidate.edges) <= opt


def test_candidate_revalidates_by_reverse_peeling():
    simple = simple_subgraph(build_aux(group_system(4)))
    res = find_dense_2deg(simple.graph, 6, 6, strategy="peel")
    cand = res.candidate
    pos = {v: i for i, v in enumerate(cand.vertices)}
    for v in cand.vertices:
        back = sum(1 for u, w in cand.edges if max(u, w, key=pos.get) == v)
        assert back <= 2
