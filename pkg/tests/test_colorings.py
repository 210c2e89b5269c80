import itertools
import random

import pytest

from grasscolor.colorings import (
    Coloring,
    color_graph,
    coloring_csv,
    g_value,
    hawtin_color,
    hawtin_ctx,
    hawtin_image,
    hawtin_image_graph,
    johnson_sum_color,
    kneser_point_color,
    moore_color,
    v_from_coords,
    verify_coloring,
)
from grasscolor.errors import BadSubset, DependentPair, OddCharacteristic, OddN
from grasscolor.graphs import GraphHandle, build_graph, ctx_for_q, johnson_adjacent, kneser_adjacent
from grasscolor.projlinalg import Subspace, enumerate_subspaces, intersect_dim, rank, rref, span_vectors


def random_basis(s, F, rng):
    """Rows of an invertible random recombination of the RREF rows of s."""
    m = s.dim
    while True:
        M = [[rng.randrange(F.size) for _ in range(m)] for _ in range(m)]
        rows = []
        for i in range(m):
            v = [0] * s.n
            for k in range(m):
                v = [F.add(a, F.mul(M[i][k], b)) for a, b in zip(v, s.rows[k])]
            rows.append(tuple(v))
        if rank(rows, F) == m:
            assert rref(rows, F) == s
            return rows


def moore_color_from_rows(rows, ctx):
    return moore_color(Subspace(len(rows[0]), tuple(rows), ctx.base), ctx)


# --- moore


def test_moore_points_are_injective():
    ctx = ctx_for_q(2, 4)
    pts = list(enumerate_subspaces(4, 1, ctx.base))
    cols = [moore_color(p, ctx).coords for p in pts]
    assert cols == [p.rows[0] for p in pts]


@pytest.mark.parametrize("q,n,m", [(2, 4, 2), (3, 4, 2), (2, 5, 3)])
def test_moore_basis_independence(q, n, m):
    ctx = ctx_for_q(q, n)
    rng = random.Random(11)
    for s in list(enumerate_subspaces(n, m, ctx.base))[:40]:
        ref = moore_color(s, ctx)
        for _ in range(10):
            assert moore_color_from_rows(random_basis(s, ctx.base, rng), ctx) == ref


def test_moore_proper_by_pairwise_rank_check():
    g = build_graph("grassmann", (2, 4, 2))
    c = color_graph("moore", g)
    for i, j in itertools.combinations(range(len(g)), 2):
        if intersect_dim(g.vertices[i], g.vertices[j]) == 1:
            assert c.color_of[i] != c.color_of[j]
    r = verify_coloring(c)
    assert r.valid and r.colors_used <= 15


# --- kneser point


@pytest.mark.parametrize("N,m", [(3, 1), (4, 2), (6, 2)])
def test_kneser_point_proper(N, m):
    F2 = ctx_for_q(2, 1).base
    subs = list(enumerate_subspaces(N, m, F2))
    cols = [kneser_point_color(s, m) for s in subs]
    for s, c in zip(subs, cols):
        assert c.coords in span_vectors(s) and not any(c.coords[N - m + 1:])
    for i, j in itertools.combinations(range(len(subs)), 2):
        if cols[i] == cols[j]:
            assert not kneser_adjacent(subs[i], subs[j])
    assert len(set(cols)) <= 2 ** (N - m + 1) - 1
    if (N, m) == (3, 1):
        assert len(set(cols)) == 7
    if (N, m) == (6, 2):
        assert len(subs) == 651 and len(set(cols)) <= 31


def test_kneser_point_inside_u():
    F2 = ctx_for_q(2, 1).base
    s = rref([(0, 1, 1, 0), (1, 1, 0, 0)], F2)
    assert kneser_point_color(s, 2).coords == (0, 1, 1, 0)


# --- line map


def all_v(ctx):
    for coords in itertools.product(range(ctx.q), repeat=ctx.d + 1):
        yield v_from_coords(coords, ctx)


def test_g_on_equal_arguments_vanishes():
    for q, n in [(2, 4), (4, 4), (2, 6)]:
        ctx = hawtin_ctx(q, n)
        for xbar in itertools.islice(all_v(ctx), 200):
            assert g_value(ctx, xbar, xbar) == 0


def test_hawtin_image_errors():
    ctx = hawtin_ctx(2, 4)
    with pytest.raises(DependentPair):
        hawtin_image((3, 1), (3, 1), ctx)
    with pytest.raises(DependentPair):
        hawtin_image((0, 0), (3, 1), ctx)
    with pytest.raises(OddCharacteristic):
        hawtin_ctx(3, 4)
    with pytest.raises(OddN):
        hawtin_ctx(2, 5)


def span_pairs(xbar, ybar, ctx):
    T, Fq = ctx.top, ctx.base
    for a, b in itertools.product(range(ctx.q), repeat=2):
        yield (T.add(T.mul(a, xbar[0]), T.mul(b, ybar[0])),
               Fq.add(Fq.mul(a, xbar[1]), Fq.mul(b, ybar[1])))


@pytest.mark.parametrize("q,n,sample", [(2, 4, None), (4, 4, 60)])
def test_g_values_on_span_lie_in_image(q, n, sample):
    ctx = hawtin_ctx(q, n)
    lines = list(enumerate_subspaces(n, 2, ctx.base))
    if sample:
        lines = random.Random(5).sample(lines, sample)
    for s in lines:
        xbar, ybar = (v_from_coords(r, ctx) for r in s.rows)
        img = hawtin_image(xbar, ybar, ctx)
        assert len(img.member_codes) == q and 0 in img.member_codes
        span = list(span_pairs(xbar, ybar, ctx))
        for z in span:
            for w in span:
                assert g_value(ctx, z, w) in img.member_codes
        assert img.as_subspace.dim == ctx.e


def test_image_well_defined_on_span():
    ctx = hawtin_ctx(4, 4)
    rng = random.Random(9)
    lines = list(enumerate_subspaces(4, 2, ctx.base))
    for s in rng.sample(lines, 40):
        ref = hawtin_color(s, ctx)
        for _ in range(5):
            rows = random_basis(s, ctx.base, rng)
            img = hawtin_image(v_from_coords(rows[0], ctx), v_from_coords(rows[1], ctx), ctx)
            assert kneser_point_color(img.as_subspace, ctx.e) == ref


@pytest.mark.parametrize("q,n", [(2, 4), (4, 4)])
def test_g_onto_for_fixed_first_argument(q, n):
    ctx = hawtin_ctx(q, n)
    vs = list(all_v(ctx))
    xs = [v for v in vs if v != (0, 0)]
    if q == 4:
        xs = random.Random(2).sample(xs, 40) + [(0, 1), (5, 0)]
    for xbar in xs:
        assert {g_value(ctx, xbar, ybar) for ybar in vs} == set(range(ctx.top.size))


def test_hawtin_2_4_full_parallelism():
    g = build_graph("grassmann", (2, 4, 2))
    r = verify_coloring(color_graph("hawtin", g))
    assert r.valid and r.colors_used == 7
    assert all(c.size == 5 and c.is_spread for c in r.classes)
    assert r.parallelism == {"classes": 7, "spread_classes": 7, "non_spread_classes": 0,
                             "is_parallelism": True}


def test_image_graph_2_4_is_complete_on_seven_points():
    g, pencil = hawtin_image_graph(2, 4)
    assert len(g) == 7 and g.edge_count == 21 and len(pencil) == 7


# --- johnson


def test_johnson_sum_examples():
    assert johnson_sum_color((1, 2), 4) == 3
    for m in range(1, 5):
        assert johnson_sum_color(tuple(range(1, m + 1)), 7) == m * (m + 1) // 2 % 7
    with pytest.raises(BadSubset):
        johnson_sum_color((0, 1), 4)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(2, 8) for m in range(1, 4) if m <= n])
def test_johnson_sum_proper(n, m):
    verts = list(itertools.combinations(range(1, n + 1), m))
    for a, b in itertools.combinations(verts, 2):
        if johnson_adjacent(a, b):
            assert johnson_sum_color(a, n) != johnson_sum_color(b, n)


# --- verification


def test_verify_constant_coloring_invalid():
    g = build_graph("grassmann", (2, 3, 2))
    r = verify_coloring(Coloring("const", g, [0] * 7, 1))
    assert not r.valid
    i, j = r.witness_edge
    assert g.adjacent(i, j)
    assert "witness_edge" in r.to_dict()


def test_verify_injective_coloring_valid():
    g = build_graph("grassmann", (2, 4, 2))
    r = verify_coloring(Coloring("inj", g, list(range(35)), 35))
    assert r.valid and r.colors_used == 35
    assert not any(c.is_spread for c in r.classes)


def test_csv_export():
    g = build_graph("grassmann", (2, 3, 2))
    text = coloring_csv(color_graph("moore", g))
    lines = text.splitlines()
    assert lines[0] == "vertex_index,vertex_rref,color_code"
    assert len(lines) == 8
