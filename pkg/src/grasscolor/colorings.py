"""Explicit colorings of Grassmann, q-Kneser and Johnson graphs.

moore        J_q(n, m): color an m-space by the projective class of the Moore
             determinant of any basis, viewed inside F_{q^n}.
hawtin       J_q(n, 2) for q = 2^e and even n: map each line of
             V = F_{q^(n-1)} x F_q to an e-space of F_2^((n-1)e), then color
             that e-space with kneser_point.
kneser_point K_q(N, m): color by the least nonzero vector of s meet U, where U
             is spanned by the first N-m+1 standard basis vectors.
johnson_sum  J(n, m): sum of the subset mod n.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .errors import BadSubset, DependentPair, OddCharacteristic, OddN, ParamMismatch
from .gfarith import FieldCtx, digits, is_permutation_exponent, moore_det_codes, undigits
from .graphs import GraphHandle, _check_subset, ctx_for_q
from .projlinalg import (
    ProjectivePoint,
    Subspace,
    gaussian_binomial,
    normalize_projective,
    rank,
    rref,
    span_vectors,
)
from . import spreads

METHODS = ("moore", "hawtin", "kneser_point", "johnson_sum")


# --- Moore determinant coloring


def moore_color(s: Subspace, ctx: FieldCtx) -> ProjectivePoint:
    q, n = ctx.q, ctx.d
    if s.n != n or not s.dim < n:
        raise ParamMismatch(f"need an m-space of F_q^{n} with m < {n}")
    xs = [undigits(r, q) for r in s.rows]
    d = moore_det_codes(ctx, xs)
    return normalize_projective(digits(d, q, n), ctx.base)


# --- q-Kneser point coloring


def kneser_point_color(s: Subspace, m: int) -> ProjectivePoint:
    N = s.n
    if s.dim != m or N < m:
        raise ParamMismatch(f"need an {m}-space, got dim {s.dim}")
    cut = N - m + 1
    inside = [v for v in span_vectors(s) if any(v) and not any(v[cut:])]
    assert inside, "dimension count guarantees a nonzero vector in s meet U"
    F = s.F
    return min((normalize_projective(v, F) for v in inside), key=lambda pt: pt.coords)


# --- char-2 line map


VVector = tuple[int, int]  # (top-field code, F_q code)


@dataclass(frozen=True)
class EImage:
    A: int
    B: int
    members: tuple[tuple[int, ...], ...]
    member_codes: frozenset[int]
    as_subspace: Subspace | None


def hawtin_ctx(q: int, n: int) -> FieldCtx:
    if q & (q - 1) or q < 2:
        raise OddCharacteristic(f"q={q} is not a power of 2")
    if n % 2 or n < 2:
        raise OddN(f"n={n} must be even")
    ctx = ctx_for_q(q, n - 1)
    assert is_permutation_exponent(ctx)
    return ctx


def v_from_coords(coords, ctx: FieldCtx) -> VVector:
    """(field part, scalar) of a vector of V written in F_q coordinates."""
    return undigits(coords[:-1], ctx.q), coords[-1]


def _independent(ctx, xbar, ybar) -> bool:
    q, d = ctx.q, ctx.d
    rows = [digits(xbar[0], q, d) + (xbar[1],), digits(ybar[0], q, d) + (ybar[1],)]
    return rank(rows, ctx.base) == 2


def g_value(ctx: FieldCtx, xbar: VVector, ybar: VVector) -> int:
    """(x1*y + y1*x)^(q+1) + x*y^q + x^q*y as a top-field code."""
    A, B = _ab(ctx, xbar, ybar)
    return ctx.top.add(A, B)


def _ab(ctx, xbar, ybar):
    T, q = ctx.top, ctx.q
    x, x1 = xbar
    y, y1 = ybar
    lin = T.add(T.mul(T.embed(x1), y), T.mul(T.embed(y1), x))
    A = T.pow(lin, q + 1)
    B = T.add(T.mul(x, T.pow(y, q)), T.mul(T.pow(x, q), y))
    return A, B


def hawtin_image(xbar: VVector, ybar: VVector, ctx: FieldCtx) -> EImage:
    if ctx.p != 2:
        raise OddCharacteristic("the line map needs characteristic 2")
    if ctx.d % 2 == 0:
        raise OddN(f"n={ctx.d + 1} must be even")
    if not _independent(ctx, xbar, ybar):
        raise DependentPair("x and y must be linearly independent")
    T, Fq = ctx.top, ctx.base
    A, B = _ab(ctx, xbar, ybar)
    codes = []
    for a in range(ctx.q):
        codes.append(T.add(T.mul(T.embed(Fq.mul(a, a)), A), T.mul(T.embed(a), B)))
    nbits = ctx.e * ctx.d
    members = tuple(digits(c, 2, nbits) for c in codes)
    nonzero = [v for v in members if any(v)]
    sub = rref(nonzero, ctx.prime) if nonzero else None
    return EImage(A, B, members, frozenset(codes), sub)


def hawtin_color(s: Subspace, ctx: FieldCtx) -> ProjectivePoint:
    if s.dim != 2 or s.n != ctx.d + 1:
        raise ParamMismatch(f"need a line of F_q^{ctx.d + 1}")
    img = hawtin_image(v_from_coords(s.rows[0], ctx), v_from_coords(s.rows[1], ctx), ctx)
    return kneser_point_color(img.as_subspace, ctx.e)


# --- Johnson


def johnson_sum_color(a, n: int) -> int:
    _check_subset(a, n=n)
    if not a:
        raise BadSubset(a)
    return sum(a) % n


# --- whole-graph colorings and verification


@dataclass
class Coloring:
    method: str
    graph: GraphHandle
    color_of: list[int]
    palette_bound: int
    lower_bound: int | None = None

    @property
    def colors_used(self) -> int:
        return len(set(self.color_of))


@dataclass(frozen=True)
class ClassInfo:
    color: int
    dense: int
    size: int
    is_partial_spread: bool | None = None
    is_spread: bool | None = None


@dataclass
class ColoringReport:
    method: str
    graph: dict
    valid: bool
    colors_used: int
    palette_bound: int
    lower_bound: int | None
    classes: list[ClassInfo] = field(default_factory=list)
    witness_edge: tuple[int, int] | None = None
    parallelism: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "method": self.method,
            "graph": self.graph,
            "valid": self.valid,
            "colors_used": self.colors_used,
            "palette_bound": self.palette_bound,
            "lower_bound": self.lower_bound,
            "classes": [
                {"color": c.color, "dense": c.dense, "size": c.size,
                 "is_partial_spread": c.is_partial_spread, "is_spread": c.is_spread}
                for c in self.classes
            ],
        }
        if self.witness_edge is not None:
            out["witness_edge"] = list(self.witness_edge)
        if self.parallelism is not None:
            out["parallelism"] = self.parallelism
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def hawtin_palette(q: int, n: int) -> int:
    e = q.bit_length() - 1
    return 2 ** ((n - 2) * e + 1) - 1


def color_graph(method: str, g: GraphHandle) -> Coloring:
    """Run ``method`` over every vertex of ``g``."""
    fam, par = g.family, g.params
    if method == "johnson_sum":
        if fam != "johnson":
            raise ParamMismatch("johnson_sum colors Johnson graphs")
        n, m = par["n"], par["m"]
        cols = [johnson_sum_color(v, n) for v in g.vertices]
        return Coloring(method, g, cols, n, n - m + 1)
    q, n, m = par["q"], par["n"], par["m"]
    if method == "moore":
        if fam != "grassmann":
            raise ParamMismatch("moore colors Grassmann graphs")
        ctx = ctx_for_q(q, n)
        cols = [moore_color(s, ctx).code for s in g.vertices]
        return Coloring(method, g, cols, gaussian_binomial(n, 1, q),
                        gaussian_binomial(n - m + 1, 1, q))
    if method == "hawtin":
        if fam != "grassmann" or m != 2:
            raise ParamMismatch("hawtin colors lines, m = 2")
        ctx = hawtin_ctx(q, n)
        cols = [hawtin_color(s, ctx).code for s in g.vertices]
        return Coloring(method, g, cols, hawtin_palette(q, n), gaussian_binomial(n - 1, 1, q))
    if method == "kneser_point":
        if fam != "qkneser":
            raise ParamMismatch("kneser_point colors q-Kneser graphs")
        cols = [kneser_point_color(s, m).code for s in g.vertices]
        return Coloring(method, g, cols, gaussian_binomial(n - m + 1, 1, q))
    raise ValueError(f"unknown method {method!r}")


def verify_coloring(c: Coloring) -> ColoringReport:
    g = c.graph
    classes: dict[int, int] = {}
    for v, col in enumerate(c.color_of):
        classes[col] = classes.get(col, 0) | (1 << v)
    witness = None
    for col, members in sorted(classes.items()):
        rest = members
        while rest and witness is None:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            clash = g.neighbors(v) & members
            if clash:
                witness = (v, (clash & -clash).bit_length() - 1)
        if witness:
            break
    verdicts = None
    parallelism = None
    if g.family in ("grassmann", "qkneser") and g.params["m"] == 2 and witness is None:
        verdicts = spreads.class_verdicts(c)
        if g.family == "grassmann":
            parallelism = spreads.classify_coloring(c).to_dict()
    infos = []
    for dense, (col, members) in enumerate(sorted(classes.items())):
        v = verdicts.get(col) if verdicts else None
        infos.append(ClassInfo(col, dense, members.bit_count(),
                               v.is_partial_spread if v else None, v.is_spread if v else None))
    gsum = {"family": g.family, **g.params, "vertices": len(g)}
    return ColoringReport(c.method, gsum, witness is None, c.colors_used, c.palette_bound,
                          c.lower_bound, infos, witness, parallelism)


def coloring_csv(c: Coloring) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertex_index", "vertex_rref", "color_code"])
    for i, (v, col) in enumerate(zip(c.graph.vertices, c.color_of)):
        key = v.serialize() if isinstance(v, Subspace) else ",".join(map(str, v))
        w.writerow([i, key, col])
    return buf.getvalue()


def hawtin_image_graph(q: int, n: int) -> tuple[GraphHandle, list[int]]:
    """Subgraph of K_2((n-1)e, e) induced on the images of all lines of V.

    Also returns the image indices of the lines through the first point of V,
    which pairwise meet trivially and so form a clique.
    """
    from .graphs import _materialize, MATERIALIZE_LIMIT
    from .projlinalg import PointIndex, enumerate_subspaces

    ctx = hawtin_ctx(q, n)
    images: dict[Subspace, int] = {}
    line_image = []
    lines = list(enumerate_subspaces(n, 2, ctx.base))
    for s in lines:
        img = hawtin_image(v_from_coords(s.rows[0], ctx), v_from_coords(s.rows[1], ctx), ctx)
        line_image.append(images.setdefault(img.as_subspace, len(images)))
    verts = list(images)
    N = ctx.e * ctx.d
    index = PointIndex(N, ctx.prime)
    masks = [index.mask(s) for s in verts]

    def pred(i, j):
        return i != j and not masks[i] & masks[j]

    adj = _materialize(len(verts), pred) if len(verts) <= MATERIALIZE_LIMIT else None
    g = GraphHandle("qkneser", {"q": 2, "n": N, "m": ctx.e, "induced": True},
                    verts, pred, adj, masks, index)
    first = tuple([0] * (n - 1) + [1])
    pencil = sorted({line_image[i] for i, s in enumerate(lines) if first in span_vectors(s)})
    return g, pencil
