import itertools
import math

import pytest

from grasscolor.errors import BadDim, BadSubset, ParamMismatch, SizeLimitExceeded
from grasscolor.graphs import (
    GraphHandle,
    build_graph,
    ctx_for_q,
    grassmann_adjacent,
    johnson_adjacent,
    kneser_adjacent,
    pencil_clique,
    valency,
)
from grasscolor.projlinalg import enumerate_subspaces, gaussian_binomial, intersect_dim, rref

F2 = ctx_for_q(2, 1).base


def e(*idx, n=4):
    return rref([tuple(int(j == i) for j in range(n)) for i in idx], F2)


def test_adjacency_predicates():
    a, b, c = e(0, 1), e(1, 2), e(2, 3)
    assert not grassmann_adjacent(a, a)
    assert grassmann_adjacent(a, b)
    assert not grassmann_adjacent(a, c)
    assert not kneser_adjacent(a, a)
    assert kneser_adjacent(a, c)
    assert kneser_adjacent(e(0), e(1))
    with pytest.raises(ParamMismatch):
        grassmann_adjacent(a, e(0))


def test_johnson_adjacent():
    assert johnson_adjacent((1, 2), (1, 3))
    assert not johnson_adjacent((1, 2), (3, 4))
    assert not johnson_adjacent((1, 2), (1, 2))
    with pytest.raises(BadSubset):
        johnson_adjacent((1, 1), (1, 2))
    with pytest.raises(BadSubset):
        johnson_adjacent((1, 2), (1, 2, 3))


def test_valency_values():
    assert valency(2, 4, 2) == 18
    assert valency(2, 4, 1) == 14 == gaussian_binomial(4, 1, 2) - 1
    with pytest.raises(ValueError):
        valency(2, 4, 4)


@pytest.mark.parametrize("q,n,m", [(2, 3, 2), (2, 4, 2), (2, 4, 1), (3, 3, 2), (2, 5, 2), (3, 4, 2)])
def test_grassmann_graph_matches_rank_oracle(q, n, m):
    g = build_graph("grassmann", (q, n, m))
    assert len(g) == gaussian_binomial(n, m, q)
    for i, j in itertools.combinations(range(min(len(g), 60)), 2):
        a, b = g.vertices[i], g.vertices[j]
        assert g.adjacent(i, j) == (intersect_dim(a, b) == m - 1)
        assert bool(g.adj[i] >> j & 1) == bool(g.adj[j] >> i & 1) == g.adjacent(i, j)
    assert all(not g.adj[i] >> i & 1 for i in range(len(g)))
    assert g.regular_degree() == valency(q, n, m)


def test_grassmann_2_3_2_is_complete():
    g = build_graph("grassmann", (2, 3, 2))
    assert len(g) == 7 and g.edge_count == 21


def test_qkneser_2_4_2_degree():
    # complements of a 2-space in F_2^4: 35 - 1 - 18 = 16 = 2^(2*2)
    g = build_graph("qkneser", (2, 4, 2))
    brute = {sum(intersect_dim(a, b) == 0 for b in g.vertices) for a in g.vertices}
    assert brute == {16}
    assert g.regular_degree() == 16
    assert build_graph("qkneser", (2, 3, 1)).regular_degree() == 6  # K_7


def test_johnson_graph():
    g = build_graph("johnson", (6, 3))
    assert len(g) == math.comb(6, 3)
    assert g.regular_degree() == 3 * 3
    for i, j in itertools.combinations(range(len(g)), 2):
        assert g.adjacent(i, j) == johnson_adjacent(g.vertices[i], g.vertices[j])


def test_summary_and_caps():
    g = build_graph("grassmann", (2, 4, 2))
    assert g.summary() == {"family": "grassmann", "q": 2, "n": 4, "m": 2,
                           "vertices": 35, "edges": 315, "regular_degree": 18}
    with pytest.raises(SizeLimitExceeded):
        build_graph("grassmann", (2, 6, 3), enum_cap=100)


def test_unmaterialized_adjacency_agrees():
    g = build_graph("grassmann", (2, 4, 2))
    lazy = GraphHandle(g.family, g.params, g.vertices, g.adjacent)
    assert [lazy.neighbors(i) for i in range(len(g))] == g.adj


def test_pencil_clique_examples():
    ctx = ctx_for_q(2, 1)
    pencil = pencil_clique(e(0), 4, 2, ctx)
    assert len(pencil) == 7 == len(set(pencil))
    assert all(grassmann_adjacent(a, b) for a, b in itertools.combinations(pencil, 2))
    assert all(intersect_dim(s, e(0)) == 1 for s in pencil)
    # maximal as a pencil: nothing else contains the point
    others = [s for s in enumerate_subspaces(4, 2, ctx.base) if s not in pencil]
    assert all(intersect_dim(s, e(0)) == 0 for s in others)
    points = pencil_clique(None, 4, 1, ctx)
    assert len(points) == 15
    with pytest.raises(BadDim):
        pencil_clique(e(0, 1), 4, 2, ctx)


@pytest.mark.parametrize("q,n,m", [(3, 4, 2), (2, 5, 3), (3, 4, 3), (4, 4, 2)])
def test_pencil_clique_size(q, n, m):
    ctx = ctx_for_q(q, 1)
    t = next(iter(enumerate_subspaces(n, m - 1, ctx.base)))
    pencil = pencil_clique(t, n, m, ctx)
    assert len(pencil) == gaussian_binomial(n - m + 1, 1, q)
    assert all(grassmann_adjacent(a, b) for a, b in itertools.combinations(pencil, 2))
