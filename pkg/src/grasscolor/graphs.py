"""Grassmann, q-Kneser and Johnson graphs.

Every subspace vertex is converted to a bitmask over the projective points of
the ambient space. Two subspaces meet in a k-space exactly when their masks
share (q^k - 1)/(q - 1) points, so all adjacency tests reduce to an AND and a
popcount. Adjacency is materialized as one neighbour bitmask per vertex, which
is a packed symmetric bit matrix.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BadDim, BadSubset, ParamMismatch, SizeLimitExceeded
from .gfarith import FieldCtx
from .projlinalg import (
    DEFAULT_ENUM_CAP,
    PointIndex,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    intersect_dim,
    points_in_dim,
    rref,
)

MATERIALIZE_LIMIT = 1 << 15

FAMILIES = ("grassmann", "qkneser", "johnson", "custom")


def _check_pair(a: Subspace, b: Subspace):
    if a.n != b.n or a.dim != b.dim:
        raise ParamMismatch(f"({a.n},{a.dim}) vs ({b.n},{b.dim})")


def grassmann_adjacent(a: Subspace, b: Subspace) -> bool:
    _check_pair(a, b)
    return a != b and intersect_dim(a, b) == a.dim - 1


def kneser_adjacent(a: Subspace, b: Subspace) -> bool:
    _check_pair(a, b)
    return intersect_dim(a, b) == 0


def _check_subset(a, n=None, m=None):
    s = set(a)
    if len(s) != len(a) or (m is not None and len(s) != m):
        raise BadSubset(a)
    if any(not isinstance(x, int) or x < 1 or (n is not None and x > n) for x in s):
        raise BadSubset(a)


def johnson_adjacent(a, b) -> bool:
    _check_subset(a)
    _check_subset(b, m=len(a))
    return len(set(a) & set(b)) == len(a) - 1


def valency(q: int, n: int, m: int) -> int:
    """Common degree of the Grassmann graph J_q(n, m)."""
    if not 0 < m < n:
        raise ValueError(f"valency needs 0 < m < n, got m={m}, n={n}")
    return q * gaussian_binomial(m, 1, q) * gaussian_binomial(n - m, 1, q)


@dataclass
class GraphHandle:
    family: str
    params: dict
    vertices: list
    adjacent: Callable[[int, int], bool] = field(repr=False)
    adj: list[int] | None = field(default=None, repr=False)
    masks: list[int] | None = field(default=None, repr=False)
    points: PointIndex | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.vertices)

    def neighbors(self, i: int) -> int:
        if self.adj is not None:
            return self.adj[i]
        out = 0
        for j in range(len(self.vertices)):
            if self.adjacent(i, j):
                out |= 1 << j
        return out

    def degree(self, i: int) -> int:
        return self.neighbors(i).bit_count()

    @property
    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(len(self))) // 2

    def regular_degree(self) -> int | None:
        degs = {self.degree(i) for i in range(len(self))}
        return degs.pop() if len(degs) == 1 else None

    def summary(self) -> dict:
        out = {"family": self.family}
        out.update(self.params)
        out.update(vertices=len(self), edges=self.edge_count,
                   regular_degree=self.regular_degree())
        return out

    @classmethod
    def from_edges(cls, n: int, edges) -> "GraphHandle":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("self-loop")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls("custom", {}, list(range(n)), lambda i, j: bool(adj[i] >> j & 1), adj)


def _materialize(n, pred):
    adj = [0] * n
    for i in range(n):
        row = adj[i]
        for j in range(i + 1, n):
            if pred(i, j):
                row |= 1 << j
                adj[j] |= 1 << i
        adj[i] = row
    return adj


def build_graph(family: str, params: Sequence[int], ctx: FieldCtx | None = None,
                enum_cap: int = DEFAULT_ENUM_CAP) -> GraphHandle:
    """Build a graph; params are (q, n, m) for subspace families, (n, m) for johnson.

    ``ctx`` supplies F_q; when omitted it is derived from q.
    """
    if family == "johnson":
        n, m = params
        if not 0 < m <= n:
            raise ValueError(f"need 0 < m <= n, got ({n}, {m})")
        if math.comb(n, m) > enum_cap:
            raise SizeLimitExceeded(f"C({n},{m}) exceeds cap {enum_cap}")
        verts = list(itertools.combinations(range(1, n + 1), m))
        bits = [sum(1 << (x - 1) for x in v) for v in verts]

        def pred(i, j):
            return i != j and (bits[i] & bits[j]).bit_count() == m - 1

        adj = _materialize(len(verts), pred) if len(verts) <= MATERIALIZE_LIMIT else None
        g = GraphHandle("johnson", {"n": n, "m": m}, verts, pred, adj)
        g.masks = bits
        return g
    if family not in ("grassmann", "qkneser"):
        raise ValueError(f"unknown family {family!r}")
    q, n, m = params
    if ctx is None:
        ctx = ctx_for_q(q, 1)
    F = ctx.base
    if F.size != q:
        raise ParamMismatch(f"context field has size {F.size}, expected {q}")
    verts = list(enumerate_subspaces(n, m, F, cap=enum_cap))
    index = PointIndex(n, F)
    masks = [index.mask(s) for s in verts]
    target = points_in_dim(m - 1, q) if family == "grassmann" else 0

    def pred(i, j):
        return i != j and (masks[i] & masks[j]).bit_count() == target

    adj = _materialize(len(verts), pred) if len(verts) <= MATERIALIZE_LIMIT else None
    return GraphHandle(family, {"q": q, "n": n, "m": m}, verts, pred, adj, masks, index)


def ctx_for_q(q: int, d: int) -> FieldCtx:
    """Field tower with base F_q and a degree-d top extension."""
    from .gfarith import make_ctx, prime_factors

    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"q={q} is not a prime power")
    p = ps[0]
    e = round(math.log(q, p))
    if p**e != q:
        raise ValueError(f"q={q} is not a prime power")
    return make_ctx(p, e, d)


def pencil_clique(t: Subspace | None, n: int, m: int, ctx: FieldCtx) -> list[Subspace]:
    """All m-spaces of F_q^n containing the (m-1)-space ``t`` (None for m = 1)."""
    F = ctx.base
    tdim = 0 if t is None else t.dim
    if tdim != m - 1 or not m - 1 < n or (t is not None and t.n != n):
        raise BadDim(f"need an (m-1)-space of F_q^{n}, got dim {tdim} for m={m}")
    if t is None:
        return list(enumerate_subspaces(n, 1, F))
    # m-spaces through t correspond to points of the quotient F_q^n / t
    pivots = set(t.pivots)
    comp = [j for j in range(n) if j not in pivots]
    out = []
    for pt in enumerate_subspaces(n - tdim, 1, F):
        v = [0] * n
        for j, x in zip(comp, pt.rows[0]):
            v[j] = x
        out.append(rref(list(t.rows) + [tuple(v)], F))
    return out
