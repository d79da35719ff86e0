"""Splitting the ambient ring through primitive idempotents.

With gcd(n, p) = 1 and lambda0 the p^s-th root of lambda,

    x^(n*p^s) - lambda = (x^n - lambda0)^(p^s) = prod_j f_j(x)^(p^s)

for distinct monic irreducibles f_j.  The idempotent attached to f_j is
eps_j = (v_j * F_j)^(p^s) mod (x^N - lambda) where F_j = (x^n - lambda0)/f_j
and v_j * F_j + w_j * f_j = 1.  These are orthogonal, sum to 1, and cut
the ambient ring into the chain-ring pieces K_j + u K_j this package
works in; project/assemble move between the two views.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .chain import ChainCtx
from .errors import (
    GcdViolation,
    LengthMismatch,
    NotSelfPairedLambda,
    RangeError,
    SZero,
    ZeroLambda,
)
from .gf import FieldCtx, field_new, ps_root
from .poly import Poly, _fold_binomial, factor_squarefree, poly_xgcd


@dataclass(frozen=True)
class AmbientParams:
    """Parameters (p, m, s, n, lambda) of R[x]/(x^(n*p^s) - lambda)."""

    field: FieldCtx
    s: int
    n: int
    lam: int

    def __post_init__(self):
        if self.s < 1:
            raise SZero(f"s = {self.s} must be >= 1")
        if self.n < 1:
            raise RangeError(f"n = {self.n} must be >= 1")
        if gcd(self.n, self.field.p) != 1:
            raise GcdViolation(f"n = {self.n} shares a factor with p = {self.field.p}")
        if not 0 < self.lam < self.field.q:
            raise ZeroLambda(f"lambda = {self.lam} is not a unit")

    @classmethod
    def of_ints(cls, p: int, m: int, s: int, n: int, lam: int, modulus=None):
        return cls(field_new(p, m, modulus), s, n, lam)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def e(self) -> int:
        return self.p ** self.s

    @property
    def N(self) -> int:
        return self.n * self.e

    def lam_inv(self) -> int:
        return self.field.inv(self.lam)

    def lam_self_paired(self) -> bool:
        return self.field.mul(self.lam, self.lam) == 1

    def dual_params(self) -> "AmbientParams":
        return AmbientParams(self.field, self.s, self.n, self.lam_inv())

    def ring_size(self) -> int:
        """|R|^N with R = F_{p^m} + u F_{p^m}."""
        return self.field.q ** (2 * self.N)


class FactorData:
    """Factors, idempotents and pairing data for one ambient ring."""

    __slots__ = (
        "params",
        "lam0",
        "factors",
        "idempotents",
        "chain_ctxs",
        "tau",
        "delta",
        "rho",
        "pair_count",
    )

    def __init__(self, params, lam0, factors, idempotents, chain_ctxs, tau, delta, rho, pair_count):
        self.params = params
        self.lam0 = lam0
        self.factors = factors
        self.idempotents = idempotents
        self.chain_ctxs = chain_ctxs
        self.tau = tau  # 0-based involution on factor indices, None unless lambda^2 = 1
        self.delta = delta  # delta_j = f_j(0)^-1, aligned with tau
        self.rho = rho  # number of tau-fixed factors
        self.pair_count = pair_count

    @property
    def r(self) -> int:
        return len(self.factors)

    def chain(self, j: int) -> ChainCtx:
        return self.chain_ctxs[j]

    def mulmod(self, a: Poly, b: Poly) -> Poly:
        """Product reduced mod x^N - lambda."""
        w = a * b
        if w.degree < self.params.N:
            return w
        return Poly(
            self.params.field,
            _fold_binomial(w.coeffs, self.params.N, self.params.lam, self.params.field),
        )

    def reduce(self, a: Poly) -> Poly:
        if a.degree < self.params.N:
            return a
        return Poly(
            self.params.field,
            _fold_binomial(a.coeffs, self.params.N, self.params.lam, self.params.field),
        )


def _pair_order(factors: list[Poly], field: FieldCtx):
    """Sort so tau-fixed factors come first, then pair halves aligned.

    Returns (ordered_factors, tau, rho, pair_count) with tau 0-based:
    tau(j) = j for j < rho, tau(rho + i) = rho + pair_count + i.
    """
    from .poly import reciprocal

    recip_of = {}
    for f in factors:
        recip_of[f] = reciprocal(f).monic()
    fixed = [f for f in factors if recip_of[f] == f]
    paired = [f for f in factors if recip_of[f] != f]
    firsts, seconds, seen = [], [], set()
    for f in sorted(paired, key=Poly.sort_key):
        if f in seen:
            continue
        g = recip_of[f]
        if g not in recip_of:
            raise RangeError("reciprocal pairing left the factor set")
        seen.add(f)
        seen.add(g)
        firsts.append(f)
        seconds.append(g)
    rho = len(fixed)
    eps = len(firsts)
    ordered = fixed + firsts + seconds
    tau = list(range(rho)) + [rho + eps + i for i in range(eps)] + [rho + i for i in range(eps)]
    return ordered, tau, rho, eps


def factor_data_for(params: AmbientParams, factors: list[Poly]) -> FactorData:
    """FactorData for a caller-supplied factor ordering of x^n - lambda0.

    The pairing tau is found by matching each factor with the monic
    normalization of its reciprocal; it exists only when lambda^2 = 1.
    Callers wanting the fixed-factors-first layout should order via
    _pair_order (build_factor_data does).
    """
    from .poly import poly_modpow, reciprocal

    field = params.field
    lam0 = ps_root(field, params.lam, params.s)
    base = Poly(field, (field.neg(lam0),) + (0,) * (params.n - 1) + (1,))
    prod = Poly.one(field)
    for f in factors:
        prod = prod * f
    if prod != base:
        raise RangeError("factor list does not multiply out to x^n - lambda0")

    if params.lam_self_paired():
        tau = []
        for f in factors:
            g = reciprocal(f).monic()
            tau.append(next(l for l, h in enumerate(factors) if h == g))
        delta = [field.inv(f(0)) for f in factors]
        rho = sum(1 for j, l in enumerate(tau) if j == l)
        pair_count = (len(factors) - rho) // 2
    else:
        tau = delta = rho = pair_count = None

    e = params.e
    modulus = Poly(field, (field.neg(params.lam),) + (0,) * (params.N - 1) + (1,))
    idempotents = []
    for f in factors:
        cof = base // f
        g, v, _ = poly_xgcd(cof, f)
        assert g.degree == 0 and g.coeffs[0] == 1, "factors are not coprime"
        eps = poly_modpow(v * cof, e, modulus)
        idempotents.append(eps)

    total = Poly.zero(field)
    for eps in idempotents:
        total = total + eps
    assert total == Poly.one(field), "idempotents do not sum to 1"

    chain_ctxs = [ChainCtx(f, e) for f in factors]
    return FactorData(params, lam0, list(factors), idempotents, chain_ctxs, tau, delta, rho, pair_count)


def build_factor_data(params: AmbientParams, seed: int | None = None) -> FactorData:
    """Factor x^n - lambda0, order the factors, compute the idempotents."""
    field = params.field
    lam0 = ps_root(field, params.lam, params.s)
    base = Poly(field, (field.neg(lam0),) + (0,) * (params.n - 1) + (1,))
    factors = factor_squarefree(base, seed).polys()
    if params.lam_self_paired():
        factors, _, _, _ = _pair_order(factors, field)
    return factor_data_for(params, factors)


def project(a, j: int, fd: FactorData):
    """Component of an ambient pair a = (a0, a1) in K_j + u K_j.

    Both coordinate polynomials are reduced mod f_j^(p^s); j is 0-based.
    """
    if not 0 <= j < fd.r:
        raise IndexError(f"factor index {j} out of range 0..{fd.r - 1}")
    a0, a1 = a
    ctx = fd.chain(j)
    return ctx.reduce(fd.reduce(a0)), ctx.reduce(fd.reduce(a1))


def assemble(parts, fd: FactorData):
    """Glue components back together: sum of eps_j * (xi_j + u eta_j)."""
    if len(parts) != fd.r:
        raise LengthMismatch(f"need {fd.r} components, got {len(parts)}")
    field = fd.params.field
    a0 = Poly.zero(field)
    a1 = Poly.zero(field)
    for j, (xi, eta) in enumerate(parts):
        eps = fd.idempotents[j]
        if not xi.is_zero():
            a0 = a0 + fd.mulmod(eps, xi)
        if not eta.is_zero():
            a1 = a1 + fd.mulmod(eps, eta)
    return a0, a1
