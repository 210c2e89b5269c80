"""Linear algebra over F_q: canonical subspaces, enumeration and projective points.

Vectors are tuples of F_q codes. A subspace is stored as its reduced row
echelon form, which is unique for the row space, so equality and hashing of
``Subspace`` objects is equality of subspaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (
    AmbientMismatch,
    DependentInput,
    SizeLimitExceeded,
    ZeroSpace,
    ZeroVector,
)
from .gfarith import FieldElement, digits, undigits

DEFAULT_ENUM_CAP = 10**6


def gaussian_binomial(n: int, m: int, q: int) -> int:
    """Number of m-dimensional subspaces of F_q^n."""
    if m < 0 or m > n:
        return 0
    num = den = 1
    for i in range(m):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def vector_code(v: Sequence[int], q: int) -> int:
    return undigits(v, q)


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[int, ...]
    q: int

    @property
    def code(self) -> int:
        return vector_code(self.coords, self.q)


@dataclass(frozen=True)
class Subspace:
    n: int
    rows: tuple[tuple[int, ...], ...]
    F: object = field(compare=False, repr=False, default=None)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.rows)

    def serialize(self) -> str:
        return ";".join(",".join(str(x) for x in r) for r in self.rows)


def _echelon(rows, F):
    """Row-reduce in place; return the nonzero rows of the RREF."""
    m = [list(r) for r in rows]
    if not m:
        return []
    n = len(m[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][col])
        if inv != 1:
            m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]]


def rank(rows, F) -> int:
    return len(_echelon(rows, F))


def rref(rows, F) -> Subspace:
    rows = [tuple(r) for r in rows]
    if not rows:
        raise ZeroSpace("no rows")
    red = _echelon(rows, F)
    if not red:
        raise ZeroSpace("rows span the zero space")
    return Subspace(len(rows[0]), tuple(red), F)


def enumerate_subspaces(n: int, m: int, F, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Subspace]:
    """Every m-space of F_q^n exactly once, ordered by pivot profile then free entries."""
    if not 0 < m <= n:
        raise ValueError(f"need 0 < m <= n, got m={m}, n={n}")
    q = F.size
    total = gaussian_binomial(n, m, q)
    if total > cap:
        raise SizeLimitExceeded(f"{total} subspaces exceeds cap {cap}")
    return _enumerate(n, m, F)


def _enumerate(n, m, F):
    q = F.size
    for pivots in itertools.combinations(range(n), m):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        base = [[0] * n for _ in range(m)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        for vals in itertools.product(range(q), repeat=len(free)):
            rows = [list(r) for r in base]
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield Subspace(n, tuple(tuple(r) for r in rows), F)


def intersect_dim(a: Subspace, b: Subspace) -> int:
    if a.n != b.n:
        raise AmbientMismatch(f"ambient {a.n} vs {b.n}")
    return a.dim + b.dim - rank(a.rows + b.rows, a.F)


def normalize_projective(v: Sequence[int], F) -> ProjectivePoint:
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ZeroVector("zero vector has no projective point")
    if lead != 1:
        inv = F.inv(lead)
        v = [F.mul(inv, x) for x in v]
    return ProjectivePoint(tuple(v), F.size)


def span_vectors(s: Subspace) -> list[tuple[int, ...]]:
    """All q^dim vectors of ``s``, zero first."""
    F = s.F
    vecs = [tuple([0] * s.n)]
    for row in s.rows:
        nxt = []
        for c in range(F.size):
            scaled = [F.mul(c, x) for x in row]
            nxt.extend(tuple(F.add(a, b) for a, b in zip(v, scaled)) for v in vecs)
        vecs = nxt
    return vecs


def point_vectors(s: Subspace) -> list[tuple[int, ...]]:
    """Normalized representatives of the projective points of ``s``.

    In RREF, a combination whose first nonzero coefficient is 1 has a leading 1
    at the corresponding pivot, so it is already normalized.
    """
    F = s.F
    out = []
    rows = s.rows
    for lead in range(len(rows)):
        partial = [rows[lead]]
        for row in rows[lead + 1:]:
            nxt = []
            for c in range(F.size):
                scaled = [F.mul(c, x) for x in row]
                nxt.extend(tuple(F.add(a, b) for a, b in zip(v, scaled)) for v in partial)
            partial = nxt
        out.extend(partial)
    return out


class PointIndex:
    """Indexes the projective points of F_q^n so subspaces become bitmasks."""

    def __init__(self, n: int, F):
        self.n = n
        self.F = F
        self.points = [s.rows[0] for s in _enumerate(n, 1, F)]
        self.index = {v: i for i, v in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    def mask(self, s: Subspace) -> int:
        out = 0
        for v in point_vectors(s):
            out |= 1 << self.index[v]
        return out


def points_in_dim(k: int, q: int) -> int:
    return (q**k - 1) // (q - 1)


def flatten(a: FieldElement, to_prime: bool = False) -> tuple[int, ...]:
    """Coordinates of ``a`` one level down, or all the way to F_p."""
    F = a.field
    if to_prime:
        length = 0
        size = 1
        while size < F.size:
            size *= F.p
            length += 1
        return digits(a.code, F.p, length)
    return a.coeffs


def element_span_to_subspace(xs: Sequence[FieldElement]) -> Subspace:
    """RREF subspace of F_q^d spanned by top-field elements viewed as vectors."""
    if not xs:
        raise ZeroSpace("no elements")
    F = xs[0].field
    rows = [flatten(x) for x in xs]
    if rank(rows, F.base) < len(xs):
        raise DependentInput("elements are linearly dependent over the base field")
    return rref(rows, F.base)
