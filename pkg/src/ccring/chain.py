"""The chain ring K = F_{p^m}[x] / (f^e) for a monic irreducible f.

Elements are reduced Polys (degree < d*e).  The powers of f filter K:
every nonzero element is (unit) * f^v for a unique valuation v < e, and
the f-adic digit expansion a = sum_k b_k(x) f^k with deg b_k < d is the
workhorse for residue sets and canonical representatives.
"""

from __future__ import annotations

from .errors import ConstantInput, RangeError
from .gf import FieldCtx
from .poly import Poly


def ceil_half(x: int) -> int:
    """Ceiling of x/2 for any integer x (so ceil_half(-1) == 0)."""
    return -((-x) // 2)


class ChainCtx:
    __slots__ = ("field", "f", "d", "e", "modulus", "f_pows")

    def __init__(self, f: Poly, e: int):
        if f.degree < 1:
            raise ConstantInput("chain ring needs deg f >= 1")
        if not f.is_monic():
            raise RangeError("f must be monic")
        if e < 1:
            raise RangeError("nilpotency length e must be >= 1")
        self.field: FieldCtx = f.ctx
        self.f = f
        self.d = f.degree
        self.e = e
        pows = [Poly.one(f.ctx)]
        for _ in range(e):
            pows.append(pows[-1] * f)
        self.f_pows = tuple(pows)
        self.modulus = pows[e]

    def __eq__(self, other) -> bool:
        return isinstance(other, ChainCtx) and self.f == other.f and self.e == other.e

    def __hash__(self) -> int:
        return hash((self.f, self.e))

    def __repr__(self) -> str:
        return f"ChainCtx(f={self.f.term_string()}, e={self.e})"

    @property
    def size(self) -> int:
        return self.field.q ** (self.d * self.e)

    @property
    def residue_size(self) -> int:
        """Size of the residue field K/(f)."""
        return self.field.q ** self.d

    # -- arithmetic --------------------------------------------------------

    def reduce(self, a: Poly) -> Poly:
        return a % self.modulus if a.degree >= self.modulus.degree else a

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def sub(self, a: Poly, b: Poly) -> Poly:
        return a - b

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    def pow(self, a: Poly, k: int) -> Poly:
        out = Poly.one(self.field)
        a = self.reduce(a)
        while k:
            if k & 1:
                out = self.mul(out, a)
            k >>= 1
            if k:
                a = self.mul(a, a)
        return out

    def is_unit(self, a: Poly) -> bool:
        return not (a % self.f).is_zero()

    def inv_unit(self, a: Poly) -> Poly:
        """Inverse of a unit: lift the mod-f inverse through the filtration."""
        from .poly import poly_xgcd

        g, inv, _ = poly_xgcd(a % self.f, self.f)
        if g.degree != 0:
            raise ZeroDivisionError("not a unit in the chain ring")
        inv = inv.scale(self.field.inv(g.coeffs[0]))
        # Newton lifting: x -> x(2 - ax) doubles the precision each step
        two = Poly.const(self.field, self.field.add(1, 1))
        prec = 1
        while prec < self.e:
            inv = self.reduce(inv * (two - self.reduce(a * inv)))
            prec *= 2
        return self.reduce(inv)

    # -- f-adic structure ----------------------------------------------------

    def f_adic(self, a: Poly) -> tuple[Poly, ...]:
        """The e digits of a, each of degree < d."""
        a = self.reduce(a)
        digits = []
        for _ in range(self.e):
            a, r = divmod(a, self.f)
            digits.append(r)
        return tuple(digits)

    def from_digits(self, digits) -> Poly:
        out = Poly.zero(self.field)
        for k, b in enumerate(digits):
            if not b.is_zero():
                out = out + b * self.f_pows[k]
        return out

    def valuation(self, a: Poly) -> int:
        """Largest v with f^v dividing a; the convention for 0 is e."""
        a = self.reduce(a)
        if a.is_zero():
            return self.e
        v = 0
        while True:
            q, r = divmod(a, self.f)
            if not r.is_zero():
                return v
            v += 1
            a = q

    def unit_of(self, a: Poly) -> Poly:
        """The unit u with a = u * f^valuation(a); undefined for 0."""
        a = self.reduce(a)
        while True:
            q, r = divmod(a, self.f)
            if not r.is_zero():
                return a
            a = q

    # -- residue sets ---------------------------------------------------------

    def digit_polys(self):
        """All q^d polynomials of degree < d, canonically ordered."""
        fq = self.field.q
        for idx in range(fq ** self.d):
            coeffs = []
            for _ in range(self.d):
                coeffs.append(idx % fq)
                idx //= fq
            yield Poly(self.field, coeffs)

    def residue_set_size(self, a: int, b: int) -> int:
        return self.field.q ** (self.d * (b - a))

    def residue_set(self, a: int, b: int):
        """Iterate f^a * (K / (f^b)): all sums of digits at positions [a, b).

        Order is an odometer over the digit vector, position a moving
        fastest, each digit running through digit_polys() order.  When
        a == b the set is the singleton {0}.
        """
        if not (0 <= a <= b <= self.e):
            raise RangeError(f"bad residue window [{a}, {b}) for e={self.e}")
        width = b - a
        if width == 0:
            yield Poly.zero(self.field)
            return
        fq = self.field.q
        digit_list = list(self.digit_polys())
        radix = len(digit_list)
        total = radix ** width
        del fq
        for counter in range(total):
            digits = []
            c = counter
            for _ in range(width):
                digits.append(digit_list[c % radix])
                c //= radix
            out = Poly.zero(self.field)
            for k, dg in enumerate(digits):
                if not dg.is_zero():
                    out = out + dg * self.f_pows[a + k]
            yield out

    def in_residue_window(self, z: Poly, a: int, b: int) -> bool:
        """Is z exactly a sum of digits over positions [a, b)?"""
        digits = self.f_adic(z)
        return all(digits[k].is_zero() for k in range(self.e) if not a <= k < b)

    def window_reduce(self, z: Poly, a: int, b: int) -> Poly:
        """Truncate the digits of z to positions [a, b).

        Used to canonicalize a parameter that is only defined modulo f^b
        and is promised to have valuation >= a; the promise is checked.
        """
        digits = self.f_adic(z)
        if any(not digits[k].is_zero() for k in range(a)):
            raise RangeError("element has digits below the residue window")
        return self.from_digits(
            [digits[k] if a <= k < b else Poly.zero(self.field) for k in range(self.e)]
        )

    def elements(self):
        """Every element of K (use only at toy sizes)."""
        fq = self.field.q
        for idx in range(fq ** (self.d * self.e)):
            coeffs = []
            for _ in range(self.d * self.e):
                coeffs.append(idx % fq)
                idx //= fq
            yield Poly(self.field, coeffs)
