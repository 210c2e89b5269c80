"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the library's own arithmetic and linear
algebra so that agreement means something.
"""

import itertools

import pytest

ACCEPTANCE_LINES = []


def clmul_mod(a, b, mod):
    """Product in F_2[y]/(mod) with polynomials packed as bit integers."""
    deg = mod.bit_length() - 1
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= mod
    return out


def f2_dependent(xs):
    """True iff some nonempty subset of the bit-vectors XORs to zero."""
    for r in range(1, len(xs) + 1):
        for sub in itertools.combinations(xs, r):
            acc = 0
            for x in sub:
                acc ^= x
            if acc == 0:
                return True
    return False


def chromatic_dp(n, edges):
    """Exact chromatic number by DP over vertex subsets and independent sets."""
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    full = (1 << n) - 1
    indep = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        indep[s] = indep[rest] and not (adj[low] & rest)
    best = [0] + [n + 1] * full
    for s in range(1, 1 << n):
        low = s & -s
        sub = s
        while sub:
            if sub & low and indep[sub]:
                best[s] = min(best[s], best[s ^ sub] + 1)
            sub = (sub - 1) & s
    return best[full]


def k_colorable_bruteforce(n, edges, k):
    """Literal search over all k^n assignments."""
    for assign in itertools.product(range(k), repeat=n):
        if all(assign[i] != assign[j] for i, j in edges):
            return True
    return False


def span_f_q(rows, F):
    """Set of all vectors in the row span, via explicit coefficient tuples."""
    n = len(rows[0])
    out = set()
    for coeffs in itertools.product(range(F.size), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(coeffs, rows):
            for j in range(n):
                v[j] = F.add(v[j], F.mul(c, r[j]))
        out.add(tuple(v))
    return frozenset(out)


@pytest.fixture
def acceptance_line():
    def emit(number, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
