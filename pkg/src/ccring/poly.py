"""Dense univariate polynomials over F_{p^m}.

Coefficients are encoded field ints (see gf), stored little endian in a
normalized tuple (no trailing zeros, zero polynomial = empty tuple).
Degree of the zero polynomial is reported as -1.

Products switch between schoolbook and int64 convolutions depending on
size; for m > 1 a product is assembled from m*m convolutions of the
coordinate arrays followed by reduction with the field modulus.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import (
    BothZero,
    ConstantInput,
    ContextMismatch,
    NotSquarefree,
    RangeError,
    ZeroPolynomial,
)
from .gf import FieldCtx, _prime_factors

_SCHOOL_CUTOFF = 2048  # schoolbook below this many coefficient products

DEFAULT_FACTOR_SEED = 0xC0DEC


def _trim(coeffs) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        self.ctx = ctx
        self.coeffs = _trim(coeffs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (0, 1))

    @classmethod
    def const(cls, ctx: FieldCtx, c: int) -> "Poly":
        return cls(ctx, (c,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c: int = 1) -> "Poly":
        if e < 0:
            raise RangeError("monomial exponent must be >= 0")
        return cls(ctx, (0,) * e + (c,))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of 0")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.ctx.p, self.ctx.m, self.ctx.modulus))

    def sort_key(self) -> tuple:
        """Canonical order: degree first, then coefficient tuple."""
        return (len(self.coeffs), self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.term_string()})"

    def term_string(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if c == 1 else f"{c}*{xs}")
        return " + ".join(parts)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly(ctx, out)

    def __neg__(self) -> "Poly":
        ctx = self.ctx
        return Poly(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.ctx)
        if c == 1:
            return self
        ctx = self.ctx
        return Poly(ctx, [ctx.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Poly(self.ctx, (0,) * k + self.coeffs)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.ctx)
        if len(a) * len(b) <= _SCHOOL_CUTOFF or self.ctx.q > (1 << 16):
            return Poly(self.ctx, _mul_school(a, b, self.ctx))
        return Poly(self.ctx, _mul_conv(a, b, self.ctx))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        db = other.degree
        if self.degree < db:
            return Poly.zero(ctx), self
        inv_lc = ctx.inv(other.lc())
        rem = list(self.coeffs)
        quo = [0] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = ctx.mul(c, inv_lc)
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = ctx.sub(rem[i - db + j], ctx.mul(c, bc[j]))
        return Poly(ctx, quo), Poly(ctx, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, c: int) -> int:
        """Evaluate at the field element c (Horner)."""
        ctx = self.ctx
        acc = 0
        for a in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, c), a)
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomial("monic of 0")
        if self.coeffs[-1] == 1:
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def derivative(self) -> "Poly":
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            e = i % ctx.p
            out.append(ctx.mul(e, self.coeffs[i]) if e else 0)
        return Poly(ctx, out)


# -- multiplication kernels ----------------------------------------------


def _mul_school(a, b, ctx: FieldCtx):
    if ctx.m == 1:
        p = ctx.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return [c % p for c in out]
    mul, add = ctx.mul, ctx.add
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def _mul_conv(a, b, ctx: FieldCtx):
    p, m = ctx.p, ctx.m
    if m == 1:
        prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        return (prod % p).tolist()
    # split into coordinate arrays over F_p
    av = np.array([ctx.decode(c) for c in a], dtype=np.int64)
    bv = np.array([ctx.decode(c) for c in b], dtype=np.int64)
    n = len(a) + len(b) - 1
    comp = [np.zeros(n, dtype=np.int64) for _ in range(2 * m - 1)]
    for i in range(m):
        ai = av[:, i]
        if not ai.any():
            continue
        for j in range(m):
            bj = bv[:, j]
            if bj.any():
                comp[i + j] += np.convolve(ai, bj)
    # fold powers of the field generator down with the modulus relation
    lows = ctx.modulus[:m]
    for k in range(2 * m - 2, m - 1, -1):
        ck = comp[k] % p
        if ck.any():
            for j in range(m):
                if lows[j]:
                    comp[k - m + j] -= lows[j] * ck
        comp[k] = None
    enc = np.zeros(n, dtype=np.int64)
    scale = 1
    for i in range(m):
        enc += (comp[i] % p) * scale
        scale *= p
    return enc.tolist()


# -- modular arithmetic ----------------------------------------------------


def _binomial_parts(modulus: Poly):
    """(D, c) when modulus = x^D - c, else None."""
    cs = modulus.coeffs
    D = len(cs) - 1
    if D < 1 or cs[-1] != 1:
        return None
    if any(cs[i] for i in range(1, D)):
        return None
    return D, modulus.ctx.neg(cs[0])


def _fold_binomial(coeffs, D, c, ctx: FieldCtx):
    """Reduce mod x^D - c: fold x^(D+i) down to c*x^i until deg < D."""
    out = list(coeffs)
    fastpath = ctx.m == 1
    p = ctx.p
    while len(out) > D:
        tail = out[D:]
        del out[D:]
        if len(tail) > len(out):
            out.extend([0] * (len(tail) - len(out)))
        for i, t in enumerate(tail):
            if t:
                if fastpath:
                    out[i] = (out[i] + c * t) % p
                else:
                    out[i] = ctx.add(out[i], ctx.mul(c, t))
    return out


def poly_modpow(base: Poly, e: int, modulus: Poly) -> Poly:
    """base**e mod modulus, exponent as an arbitrary-size nonneg int."""
    if e < 0:
        raise RangeError("modpow exponent must be >= 0")
    if modulus.degree < 1:
        raise ConstantInput("modulus must have degree >= 1")
    base._check(modulus)
    ctx = base.ctx
    bparts = _binomial_parts(modulus)

    if bparts is not None:
        D, c = bparts

        def mulmod(u: Poly, v: Poly) -> Poly:
            w = u * v
            if w.degree < D:
                return w
            return Poly(ctx, _fold_binomial(w.coeffs, D, c, ctx))
    else:

        def mulmod(u: Poly, v: Poly) -> Poly:
            return (u * v) % modulus

    result = Poly.one(ctx) % modulus
    acc = base % modulus
    while e:
        if e & 1:
            result = mulmod(result, acc)
        e >>= 1
        if e:
            acc = mulmod(acc, acc)
    return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0)")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with g = gcd monic and u*a + v*b = g."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("xgcd(0, 0)")
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = ctx.inv(r0.lc())
    return r0.scale(c), s0.scale(c), t0.scale(c)


def reciprocal(f: Poly) -> Poly:
    """x^deg(f) * f(1/x): the coefficient tuple reversed."""
    if f.is_zero():
        raise ZeroPolynomial("reciprocal of 0")
    return Poly(f.ctx, tuple(reversed(f.coeffs)))


# -- irreducibility and factorization ---------------------------------------


def is_irreducible(f: Poly) -> bool:
    """Rabin's test over F_q."""
    n = f.degree
    if n < 1:
        raise ConstantInput("irreducibility needs degree >= 1")
    if n == 1:
        return True
    f = f.monic()
    ctx = f.ctx
    q = ctx.q
    x = Poly.x(ctx)
    if not poly_modpow(x, q ** n, f) == x % f:
        return False
    for r in sorted(set(_prime_factors(n))):
        h = poly_modpow(x, q ** (n // r), f) - x
        if h.is_zero() or poly_gcd(h, f).degree != 0:
            return False
    return True


class Factorization:
    """Monic irreducible factors with multiplicities, canonically sorted."""

    __slots__ = ("unit", "factors")

    def __init__(self, unit: int, factors):
        self.unit = unit
        self.factors = list(factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def polys(self) -> list[Poly]:
        return [f for f, _ in self.factors]

    def product(self) -> Poly:
        out = None
        for f, e in self.factors:
            for _ in range(e):
                out = f if out is None else out * f
        if out is None:
            out = Poly.one(self.factors[0][0].ctx) if self.factors else None
        return out.scale(self.unit) if out is not None else None


def _ddf(f: Poly) -> list[tuple[int, Poly]]:
    """Distinct-degree decomposition of a monic squarefree f."""
    ctx = f.ctx
    q = ctx.q
    x = Poly.x(ctx)
    parts = []
    rem = f
    h = x % rem
    d = 0
    while rem.degree > 0:
        d += 1
        if 2 * d > rem.degree:
            parts.append((rem.degree, rem))
            break
        h = poly_modpow(h, q, rem)
        g = poly_gcd(h - (x % rem), rem) if not (h - x % rem).is_zero() else rem
        if g.degree > 0:
            parts.append((d, g))
            rem = rem // g
            if rem.degree == 0:
                break
            h = h % rem
    return parts


def _split_equal_degree(part: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a product of distinct irreducibles, all of degree d."""
    if part.degree == d:
        return [part]
    ctx = part.ctx
    q = ctx.q
    while True:
        h = Poly(ctx, [rng.randrange(q) for _ in range(part.degree)])
        if h.degree < 1:
            continue
        g = poly_gcd(h, part)
        if 0 < g.degree < part.degree:
            pass
        elif ctx.p == 2:
            # additive splitting via the trace to F_2
            t = Poly.zero(ctx)
            acc = h % part
            for _ in range(ctx.m * d):
                t = t + acc
                acc = poly_modpow(acc, 2, part)
            if t.is_zero():
                continue
            g = poly_gcd(t, part)
        else:
            t = poly_modpow(h, (q ** d - 1) // 2, part) - Poly.one(ctx)
            if t.is_zero():
                continue
            g = poly_gcd(t, part)
        if 0 < g.degree < part.degree:
            left = _split_equal_degree(g, d, rng)
            right = _split_equal_degree(part // g, d, rng)
            return left + right


def factor_squarefree(f: Poly, seed: int | None = None) -> Factorization:
    """Factor a squarefree polynomial into monic irreducibles.

    The splitting step draws random elements from a PRNG seeded with
    `seed` (a fixed default otherwise), so results are reproducible; the
    factor list is sorted by degree, then by coefficient tuple, which
    makes the output independent of the random choices anyway.
    """
    if f.degree < 1:
        raise ConstantInput("cannot factor a constant")
    unit = f.lc()
    f = f.monic()
    df = f.derivative()
    if df.is_zero() or poly_gcd(f, df).degree != 0:
        raise NotSquarefree("input has a repeated factor")
    rng = random.Random(DEFAULT_FACTOR_SEED if seed is None else seed)
    out: list[Poly] = []
    for d, part in _ddf(f):
        out.extend(_split_equal_degree(part, d, rng))
    out.sort(key=Poly.sort_key)
    return Factorization(unit, [(g, 1) for g in out])
