"""Finite field arithmetic for F_{p^m}.

Elements are plain ints in [0, p^m): the element with coordinate vector
(c_0, ..., c_{m-1}) over F_p (little endian, power basis of the modulus)
is encoded as sum c_i * p^i.  All operations live on a FieldCtx so the
same int means different things in different fields; mixing contexts is
the caller's bug and is not detected at this level.

For small fields (q <= 2^16) multiplication and inversion run off
exp/log tables built on first use.
"""

from __future__ import annotations

from .errors import BadModulus, NotPrime, RangeError, ReducibleModulus, ZeroLambda

_TABLE_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- tiny F_p[x] helpers, used only to vet the modulus -----------------------

def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    # schoolbook product followed by long division by the monic mod
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    dm = len(mod) - 1
    for i in range(len(prod) - 1, dm - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(dm):
                prod[i - dm + j] = (prod[i - dm + j] - c * mod[j]) % p
    prod = prod[:dm]
    while len(prod) < dm:
        prod.append(0)
    return prod


def _poly_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1] + [0] * (len(mod) - 2)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        e >>= 1
        base = _poly_mulmod(base, base, mod, p)
    return result


def _poly_gcd_fp(a: list[int], b: list[int], p: int) -> list[int]:
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b):
            c = r[-1] * inv % p
            off = len(r) - len(b)
            for j in range(len(b)):
                r[off + j] = (r[off + j] - c * b[j]) % p
            trim(r)
        a, b = b, r
    return a


def _modulus_irreducible(mod: list[int], p: int) -> bool:
    # Rabin's test over F_p
    m = len(mod) - 1
    if m == 1:
        return True
    x = [0, 1]
    xq = _poly_powmod(x, p ** m, mod, p)
    diff = [(xq[i] - (1 if i == 1 else 0)) % p for i in range(len(xq))]
    if any(diff):
        return False
    for r in _prime_factors(m):
        xr = _poly_powmod(x, p ** (m // r), mod, p)
        diff = [(xr[i] - (1 if i == 1 else 0)) % p for i in range(len(xr))]
        g = _poly_gcd_fp(diff, mod, p)
        if len(g) != 1:
            return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    lows = [0] * m
    while True:
        cand = lows + [1]
        if _modulus_irreducible(cand, p):
            return tuple(cand)
        # advance lows in lexicographic order, rightmost digit fastest
        i = m - 1
        while i >= 0 and lows[i] == p - 1:
            lows[i] = 0
            i -= 1
        if i < 0:
            raise ReducibleModulus(f"no irreducible of degree {m} over F_{p}")
        lows[i] += 1


class FieldCtx:
    """Arithmetic context for F_{p^m} with encoded-int elements."""

    __slots__ = ("p", "m", "q", "modulus", "_exp", "_log", "_pp")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._pp = tuple(p ** i for i in range(m + 1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- encoding ------------------------------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        """Coordinate vector of a, little endian, length m."""
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def encode(self, coeffs) -> int:
        if len(coeffs) != self.m:
            raise RangeError(f"need {self.m} coordinates, got {len(coeffs)}")
        a = 0
        for i, c in enumerate(coeffs):
            a += (c % self.p) * self._pp[i]
        return a

    def elements(self):
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for i in range(self.m):
            out += ((a % p + b % p) % p) * self._pp[i]
            a //= p
            b //= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        for i in range(self.m):
            out += ((-(a % p)) % p) * self._pp[i]
            a //= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        # product via coordinate polynomials reduced by the modulus
        p, m = self.p, self.m
        av, bv = self.decode(a), self.decode(b)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(av):
            if ai:
                for j, bj in enumerate(bv):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * self.modulus[j]) % p
        return self.encode(prod[:m])

    def _build_tables(self) -> None:
        # exp/log w.r.t. some multiplicative generator
        q = self.q
        order_factors = _prime_factors(q - 1) if q > 2 else []
        g = None
        for cand in range(1, q):
            if all(self._pow_raw(cand, (q - 1) // r) != 1 for r in order_factors):
                g = cand
                break
        assert g is not None
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_raw(acc, g)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.q <= _TABLE_LIMIT:
            if self._exp is None:
                self._build_tables()
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= _TABLE_LIMIT:
            if self._exp is None:
                self._build_tables()
            return self._exp[(self.q - 1) - self._log[a]]
        return self._pow_raw(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        """a**e; e may be any integer (negative means invert first)."""
        if e < 0:
            a = self.inv(a)
            e = -e
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        if self.q <= _TABLE_LIMIT:
            if self._exp is None:
                self._build_tables()
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._pow_raw(a, e % (self.q - 1))

    def gen(self) -> int:
        """Image of x in the power basis (only meaningful for m > 1)."""
        return self.p if self.m > 1 else 1


def field_new(p: int, m: int, modulus=None) -> FieldCtx:
    """Build F_{p^m}.

    modulus is a little-endian int vector of length m+1, monic over F_p;
    when omitted the lexicographically smallest monic irreducible of
    degree m is used (x itself for m = 1).
    """
    if not _is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if m < 1:
        raise RangeError(f"m = {m} must be >= 1")
    if modulus is None:
        modulus = _smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise BadModulus(f"modulus must be monic of degree {m}")
        if not _modulus_irreducible(list(modulus), p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over F_{p}")
    return FieldCtx(p, m, modulus)


def ps_root(ctx: FieldCtx, lam: int, s: int) -> int:
    """The unique lam0 with lam0**(p**s) == lam.

    Raising to the p^s-th power permutes the units, so the root exists
    and equals lam**t where t inverts p^s modulo q - 1.
    """
    if lam == 0 or lam >= ctx.q:
        raise ZeroLambda(f"lambda must be a unit, got {lam}")
    m1 = ctx.q - 1
    if m1 == 1:
        return lam
    t = pow(ctx.p, s, m1)
    return ctx.pow(lam, pow(t, -1, m1))
