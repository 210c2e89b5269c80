"""Exact arithmetic in a two-level tower F_p < F_q < F_{q^d}.

Elements at every level are plain non-negative integers ("codes"). An element
of an extension of degree k over a field of size s is the polynomial
c_0 + c_1 y + ... + c_{k-1} y^{k-1} with code sum(c_i * s**i), where each c_i
is itself a code one level down. Unwinding the recursion, the base-p digits of
a code are the F_p coordinates of the element, lowest level first.

Hot loops work directly on codes through the field objects; ``FieldElement``
is a thin wrapper for callers who prefer operator syntax.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DivisionByZero,
    IrreducibleNotFound,
    LevelMismatch,
    NotPrime,
    SizeLimitExceeded,
    TooManyVectors,
)

DEFAULT_SIZE_LIMIT = 1 << 20
TABLE_LIMIT = 1 << 16  # log/exp tables are built up to this field size
ADD_TABLE_LIMIT = 243  # full addition tables for small odd-characteristic fields


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = 3
    while r * r <= n:
        if n % r == 0:
            return False
        r += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


def digits(code: int, base: int, length: int) -> tuple[int, ...]:
    """Little-endian base-``base`` digits of ``code``, padded to ``length``."""
    out = []
    for _ in range(length):
        code, r = divmod(code, base)
        out.append(r)
    return tuple(out)


def undigits(ds: Sequence[int], base: int) -> int:
    code = 0
    for d in reversed(ds):
        code = code * base + d
    return code


class PrimeField:
    """F_p with codes 0..p-1."""

    degree = 1
    base = None

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(p)
        self.p = p
        self.size = p
        self.zero, self.one = 0, 1

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, k):
        if k == 0:
            return 1
        return pow(a, k, self.p)


# polynomial helpers over a field object; polys are little-endian code lists


def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return _trim(out)


def poly_divmod(F, f, g):
    f = list(f)
    g = _trim(list(g))
    if not g:
        raise DivisionByZero("polynomial division by zero")
    lead_inv = F.inv(g[-1])
    dg = len(g) - 1
    quot = [0] * max(len(f) - dg, 0)
    _trim(f)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = F.mul(f[-1], lead_inv)
        quot[shift] = c
        for i, b in enumerate(g):
            f[i + shift] = F.sub(f[i + shift], F.mul(c, b))
        _trim(f)
    return _trim(quot), f


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_powmod(F, f, k, g):
    result = [1]
    base = poly_mod(F, f, g)
    while k:
        if k & 1:
            result = poly_mod(F, poly_mul(F, result, base), g)
        k >>= 1
        if k:
            base = poly_mod(F, poly_mul(F, base, base), g)
    return result


def poly_sub(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return _trim([F.sub(a, b) for a, b in zip(f, g)])


def poly_gcd(F, f, g):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, poly_mod(F, f, g)
    if f:
        c = F.inv(f[-1])
        f = [F.mul(c, a) for a in f]
    return f


def is_irreducible(F, f) -> bool:
    """Rabin's test for a monic polynomial ``f`` over ``F``."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    s = F.size
    x = [0, 1]

    def frob_iter(j):
        h = x
        for _ in range(j):
            h = poly_powmod(F, h, s, f)
        return h

    if poly_sub(F, frob_iter(k), x):
        return False
    for r in prime_factors(k):
        h = poly_sub(F, frob_iter(k // r), x)
        if len(poly_gcd(F, h, f)) != 1:
            return False
    return True


def least_irreducible(F, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree ``k`` over ``F`` by integer code."""
    for low in range(F.size ** k):
        f = list(digits(low, F.size, k)) + [1]
        if is_irreducible(F, f):
            return tuple(f)
    raise IrreducibleNotFound(f"no irreducible of degree {k} over {F!r}")


class ExtensionField:
    """F_{s^k} = base[y] / (modulus) with integer codes."""

    def __init__(self, base, modulus: Sequence[int]):
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.size = base.size ** self.degree
        self.p = base.p
        self.zero, self.one = 0, 1
        self._exp = self._log = None
        self._add_table = None
        if self.size <= TABLE_LIMIT:
            self._build_tables()
        if self.p != 2 and self.size <= ADD_TABLE_LIMIT:
            self._add_table = [[self._add_digits(a, b) for b in range(self.size)]
                               for a in range(self.size)]
        self._prime_len = round(math.log(self.size, self.p))

    def __repr__(self):
        return f"GF({self.base.size}^{self.degree})"

    # --- internal polynomial-level ops
    def _poly_mul(self, a, b):
        s = self.base.size
        fa = _trim(list(digits(a, s, self.degree)))
        fb = _trim(list(digits(b, s, self.degree)))
        r = poly_mod(self.base, poly_mul(self.base, fa, fb), self.modulus)
        return undigits(r, s)

    def _add_digits(self, a, b):
        p = self.p
        out, mult = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * mult
            mult *= p
        return out

    def _build_tables(self):
        n = self.size - 1
        factors = prime_factors(n) if n > 1 else []
        gen = None
        for g in range(1 if n == 1 else 2, self.size):
            if all(self._poly_pow(g, n // r) != 1 for r in factors):
                gen = g
                break
        if gen is None:
            raise IrreducibleNotFound("no primitive element; modulus not irreducible")
        exp = [0] * (2 * n)
        log = [0] * self.size
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, gen)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log
        self.generator = gen

    def _poly_pow(self, a, k):
        result = 1
        while k:
            if k & 1:
                result = self._poly_mul(result, a)
            k >>= 1
            if k:
                a = self._poly_mul(a, a)
        return result

    # --- public code-level ops
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        return undigits([(-d) % p for d in digits(a, p, self._prime_len)], p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._poly_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._exp is not None:
            n = self.size - 1
            return self._exp[(n - self._log[a]) % n]
        return self.pow(a, self.size - 2)

    def pow(self, a, k):
        if k == 0:
            return 1
        if a == 0:
            return 0
        n = self.size - 1
        if self._exp is not None:
            return self._exp[self._log[a] * (k % n) % n]
        return self._poly_pow(a, k % n or n)

    def embed(self, c):
        """Image of a base-field code (the constant polynomial has the same code)."""
        return c


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable description of the tower F_p < F_q < F_{q^d}."""

    p: int
    e: int
    d: int
    mod_base: tuple[int, ...]
    mod_top: tuple[int, ...]
    prime: PrimeField
    base: ExtensionField
    top: ExtensionField

    @property
    def q(self) -> int:
        return self.base.size

    def to_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "d": self.d,
                "mod_base": list(self.mod_base), "mod_top": list(self.mod_top)}

    def element(self, code: int, level: str = "top") -> "FieldElement":
        return FieldElement(getattr(self, level), code, self)


def make_ctx(p: int, e: int, d: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FieldCtx:
    if e < 1 or d < 1:
        raise ValueError("extension degrees must be positive")
    if not is_prime(p):
        raise NotPrime(p)
    if p ** (e * d) > size_limit:
        raise SizeLimitExceeded(f"field of size {p}^{e * d} exceeds limit {size_limit}")
    return _make_ctx(p, e, d)


@functools.lru_cache(maxsize=None)
def _make_ctx(p, e, d):
    prime = PrimeField(p)
    mod_base = least_irreducible(prime, e)
    base = ExtensionField(prime, mod_base)
    mod_top = least_irreducible(base, d)
    top = ExtensionField(base, mod_top)
    if not (is_irreducible(prime, list(mod_base)) and is_irreducible(base, list(mod_top))):
        raise IrreducibleNotFound("modulus failed re-verification")
    return FieldCtx(p, e, d, mod_base, mod_top, prime, base, top)


def frobenius_code(ctx: FieldCtx, a: int, i: int) -> int:
    """a ** (q ** i) in the top field."""
    top = ctx.top
    if a == 0:
        return 0
    return top.pow(a, pow(ctx.q, i, top.size - 1) or top.size - 1)


def det(F, matrix) -> int:
    """Determinant by Gaussian elimination over ``F`` (codes)."""
    m = [list(row) for row in matrix]
    n = len(m)
    result = F.one
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = F.neg(result)
        pv = m[col][col]
        result = F.mul(result, pv)
        pinv = F.inv(pv)
        for r in range(col + 1, n):
            if m[r][col]:
                c = F.mul(m[r][col], pinv)
                m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[col])]
    return result


def moore_matrix(ctx: FieldCtx, xs: Sequence[int]) -> list[list[int]]:
    m = len(xs)
    return [[frobenius_code(ctx, x, i) for x in xs] for i in range(m)]


def moore_det_codes(ctx: FieldCtx, xs: Sequence[int]) -> int:
    if len(xs) > ctx.d:
        raise TooManyVectors(f"{len(xs)} vectors in a degree-{ctx.d} extension")
    if not xs:
        raise ValueError("need at least one element")
    return det(ctx.top, moore_matrix(ctx, xs))


def is_permutation_exponent(ctx: FieldCtx) -> bool:
    """Whether x -> x^(q+1) permutes the top field."""
    return math.gcd(ctx.q + 1, ctx.top.size - 1) == 1


@dataclass(frozen=True)
class FieldElement:
    field: object
    code: int
    ctx: FieldCtx | None = None

    @property
    def coeffs(self) -> tuple[int, ...]:
        F = self.field
        if F.base is None:
            return (self.code,)
        return digits(self.code, F.base.size, F.degree)

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise LevelMismatch(f"{self.field!r} vs {getattr(other, 'field', other)!r}")

    def _new(self, code):
        return FieldElement(self.field, code, self.ctx)

    def __add__(self, other):
        self._check(other)
        return self._new(self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return self._new(self.field.sub(self.code, other.code))

    def __neg__(self):
        return self._new(self.field.neg(self.code))

    def __mul__(self, other):
        self._check(other)
        return self._new(self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return self._new(self.field.mul(self.code, self.field.inv(other.code)))

    def __pow__(self, k: int):
        if k < 0:
            return self._new(self.field.pow(self.field.inv(self.code), -k))
        return self._new(self.field.pow(self.code, k))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field!r}({self.code})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a._new(a.field.inv(a.code))


def power(a: FieldElement, k: int) -> FieldElement:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return a ** k


def _require_top(a: FieldElement) -> FieldCtx:
    if a.ctx is None or a.field is not a.ctx.top:
        raise LevelMismatch("operation needs a top-field element")
    return a.ctx


def frobenius(a: FieldElement, i: int) -> FieldElement:
    ctx = _require_top(a)
    return a._new(frobenius_code(ctx, a.code, i))


def moore_det(xs: Sequence[FieldElement]) -> FieldElement:
    """Determinant of the Moore matrix with entries xs[j] ** (q ** i).

    Vanishes exactly when ``xs`` are linearly dependent over F_q.
    """
    if not xs:
        raise ValueError("need at least one element")
    ctx = _require_top(xs[0])
    for x in xs[1:]:
        xs[0]._check(x)
    return ctx.element(moore_det_codes(ctx, [x.code for x in xs]))
