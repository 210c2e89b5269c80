"""Ground-truth chromatic bounds at desk scale.

Everything here is deterministic: ties are broken by vertex index and search
effort is limited by node counts, never by wall-clock time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import SizeLimitExceeded
from .graphs import GraphHandle

DEFAULT_NODE_BUDGET = 200_000
DEFAULT_EXACT_CAP = 64


class _OutOfBudget(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class CliqueResult:
    clique: list[int]
    nodes_expanded: int
    approximate: bool

    @property
    def size(self) -> int:
        return len(self.clique)


@dataclass
class ChromaticBounds:
    lower: int
    upper: int
    exact: int | None = None
    nodes_expanded: int = 0
    budget_hit: bool = False
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        out = {"lower": self.lower, "upper": self.upper}
        if self.exact is not None:
            out["exact"] = self.exact
        out.update(nodes_expanded=self.nodes_expanded, budget_hit=self.budget_hit)
        return out


def greedy_dsatur(g: GraphHandle) -> tuple[list[int], int]:
    """DSATUR coloring; returns (colors, number of colors)."""
    n = len(g)
    if n == 0:
        return [], 0
    adj = [g.neighbors(i) for i in range(n)]
    deg = [a.bit_count() for a in adj]
    colors = [-1] * n
    forb = [0] * n  # bitmask of colors seen among neighbours
    for _ in range(n):
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                k = (forb[v].bit_count(), deg[v], -v)
                if key is None or k > key:
                    best, key = v, k
        f = forb[best]
        c = (~f & (f + 1)).bit_length() - 1
        colors[best] = c
        for u in _bits(adj[best]):
            forb[u] |= 1 << c
    return colors, max(colors) + 1


def clique_ceiling(g: GraphHandle) -> int | None:
    """Upper bound on the clique number of a q-Kneser graph (or induced subgraph).

    A clique is a set of pairwise trivially meeting m-spaces, so at most
    points(F_q^n) / points(F_q^m) of them fit.
    """
    if g.family != "qkneser":
        return None
    q, n, m = g.params["q"], g.params["n"], g.params["m"]
    return (q**n - 1) // (q**m - 1)


def max_clique(g: GraphHandle, budget: int = DEFAULT_NODE_BUDGET,
               seed: list[int] | None = None) -> CliqueResult:
    """Branch and bound with greedy-coloring bounds, warm-started from ``seed``."""
    n = len(g)
    if n == 0:
        return CliqueResult([], 0, False)
    adj = [g.neighbors(i) for i in range(n)]
    best = list(seed) if seed else [0]
    for i, u in enumerate(best):
        for v in best[i + 1:]:
            if not adj[u] >> v & 1:
                raise ValueError("seed is not a clique")
    ceiling = clique_ceiling(g)
    if ceiling is not None and len(best) >= ceiling:
        return CliqueResult(sorted(best), 0, False)
    nodes = 0

    def color_order(P):
        order = []
        k = 0
        while P:
            k += 1
            Q = P
            while Q:
                v = (Q & -Q).bit_length() - 1
                Q &= ~adj[v] & ~(1 << v)
                P &= ~(1 << v)
                order.append((v, k))
        return order

    def expand(R, P):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _OutOfBudget
        for v, k in reversed(color_order(P)):
            if len(R) + k <= len(best):
                return
            R2 = R + [v]
            P2 = P & adj[v]
            if P2:
                expand(R2, P2)
            elif len(R2) > len(best):
                best = R2
            P &= ~(1 << v)

    approximate = False
    try:
        expand([], (1 << n) - 1)
    except _OutOfBudget:
        approximate = True
    return CliqueResult(sorted(best), min(nodes, budget), approximate)


def _k_colorable(adj, k, precolor, counter, budget):
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    colors = [-1] * n
    forb = [[0] * k for _ in range(n)]  # neighbour counts per color

    def assign(v, c, sign):
        colors[v] = c if sign > 0 else -1
        for u in _bits(adj[v]):
            forb[u][c] += sign

    used = 0
    for v, c in precolor:
        assign(v, c, 1)
        used = max(used, c + 1)

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                k_ = (sum(1 for x in forb[v] if x), deg[v], -v)
                if key is None or k_ > key:
                    best, key = v, k_
        return best

    def search(used):
        counter[0] += 1
        if counter[0] > budget:
            raise _OutOfBudget
        v = pick()
        if v < 0:
            return True
        for c in range(min(k, used + 1)):
            if forb[v][c] == 0:
                assign(v, c, 1)
                if search(max(used, c + 1)):
                    return True
                assign(v, c, -1)
        return False

    return search(used), colors


def exact_chromatic(g: GraphHandle, budget: int = DEFAULT_NODE_BUDGET,
                    cap: int = DEFAULT_EXACT_CAP) -> ChromaticBounds:
    """Chromatic number by iterative deepening on k from the clique bound."""
    n = len(g)
    if n > cap:
        raise SizeLimitExceeded(f"{n} vertices exceeds exact cap {cap}")
    t0 = time.perf_counter()
    if n == 0:
        return ChromaticBounds(0, 0, 0)
    clique = max_clique(g, budget)
    _, upper = greedy_dsatur(g)
    lower = clique.size
    out = ChromaticBounds(lower, upper, nodes_expanded=clique.nodes_expanded)
    if clique.approximate:
        out.notes.append("clique search hit budget")
    adj = [g.neighbors(i) for i in range(n)]
    counter = [0]
    precolor = [(v, i) for i, v in enumerate(clique.clique)]
    try:
        for k in range(lower, upper):
            ok, _ = _k_colorable(adj, k, precolor, counter, budget)
            if ok:
                out.exact = out.upper = k
                break
            out.lower = k + 1
        else:
            out.exact = upper
    except _OutOfBudget:
        out.budget_hit = True
        out.notes.append("coloring search hit budget")
    out.nodes_expanded += counter[0]
    out.elapsed = time.perf_counter() - t0
    return out


def chromatic_bounds(g: GraphHandle, budget: int = DEFAULT_NODE_BUDGET,
                     seed: list[int] | None = None) -> ChromaticBounds:
    """Clique lower bound and DSATUR upper bound without exact search."""
    t0 = time.perf_counter()
    clique = max_clique(g, budget, seed)
    _, upper = greedy_dsatur(g)
    out = ChromaticBounds(clique.size, upper, nodes_expanded=clique.nodes_expanded,
                          budget_hit=clique.approximate)
    if clique.approximate:
        out.notes.append("clique search hit budget; lower bound is best found")
    out.elapsed = time.perf_counter() - t0
    return out
