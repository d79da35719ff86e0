"""Dual codes and the self-dual classification.

The dual of a lambda-constacyclic code is lambda^(-1)-constacyclic, so
it decomposes over the reciprocals of the f_j.  On spec level the whole
construction is a parameter transport: writing d_j = deg f_j and
N = n*p^s, every case that carries a b maps through

    b_hat = -lambda * f_j(0) * x^(N - d_j) * b(x^(-1))

into the window of the image case, and the case data moves by

    I -> I,  II(k) -> IV(e-k),  III(k) -> III(e-k),
    IV(t) -> II(e-t),  V(k,t) -> V(e-k-t, t).

The scalar is f_j(0) and not its inverse: the printed dual generator is
-lambda x^(N-d) rev(f_j) b(x^(-1)) + u with rev(f_j) the plain
coefficient reversal, and rev(f_j) = f_j(0) * fhat_j once the modulus
is normalized monic.  Tests pin this against kernel-computed duals.

For lambda = +-1 the reciprocal factors are a permutation tau of the
source factors and the dual lives in the same ambient ring with the
component built from position j landing at tau(j).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .chain import ChainCtx
from .decomp import AmbientParams, FactorData, factor_data_for
from .errors import NotSelfPairedLambda
from .ideals import CodeSpec, IdealSpec, b_window, count_ideals, enumerate_ideals
from .poly import Poly, reciprocal


def dual_factor_data(fd: FactorData) -> FactorData:
    """Factor data of the lambda^(-1) ring, factor j = recip of f_j.

    Keeping source order means component j of a dual code always sits
    over the reciprocal of the factor it came from; note this order is
    generally not the one build_factor_data would pick.
    """
    recips = [reciprocal(f).monic() for f in fd.factors]
    return factor_data_for(fd.params.dual_params(), recips)


def inv_x_image(a: Poly, target: ChainCtx, params: AmbientParams) -> Poly:
    """a(x^(-1)) in the target chain ring of the dual ambient.

    In R[x]/(x^N - lambda^(-1)) the inverse of x is lambda * x^(N-1);
    the target modulus divides x^N - lambda^(-1), so evaluating by
    Horner directly mod the target is the same map.
    """
    field = params.field
    X = target.reduce(Poly.monomial(field, params.N - 1, params.lam))
    out = Poly.zero(field)
    for c in reversed(a.coeffs):
        out = target.mul(out, X)
        if c:
            out = out + Poly.const(field, c)
    return target.reduce(out)


def _transport_b(b: Poly, j: int, fd: FactorData, target: ChainCtx) -> Poly:
    params = fd.params
    field = params.field
    d = fd.factors[j].degree
    img = inv_x_image(b, target, params)
    img = target.mul(img, Poly.monomial(field, params.N - d))
    scal = field.neg(field.mul(params.lam, fd.factors[j](0)))
    return target.reduce(img.scale(scal))


def dual_component(spec: IdealSpec, j: int, fd: FactorData, target: ChainCtx) -> IdealSpec:
    """The ideal spec of the dual code's component over recip(f_j)."""
    e = fd.params.e
    if spec.case == "III":
        return IdealSpec("III", k=e - spec.k)
    if spec.case == "I":
        shape = IdealSpec("I")
    elif spec.case == "II":
        shape = IdealSpec("IV", t=e - spec.k)
    elif spec.case == "IV":
        shape = IdealSpec("II", k=e - spec.t)
    else:
        shape = IdealSpec("V", k=e - spec.k - spec.t, t=spec.t)
    raw = _transport_b(spec.b, j, fd, target)
    lo, hi = b_window(shape, e)
    # the transport preserves f-valuation, so raw never has digits
    # below the window; window_reduce checks that as a side effect
    return replace(shape, b=target.window_reduce(raw, lo, hi))


@dataclass(frozen=True)
class DualCodeSpec(CodeSpec):
    """A classified code of the lambda^(-1) ambient ring.

    Structurally a CodeSpec; the distinct type records that its factor
    data is the reciprocal-ordered one from dual_factor_data.
    """


def dual_code(code: CodeSpec) -> DualCodeSpec:
    """Dual of a classified code, over the lambda^(-1) ambient ring."""
    fd = code.fd
    dfd = dual_factor_data(fd)
    comps = tuple(
        dual_component(spec, j, fd, dfd.chain(j))
        for j, spec in enumerate(code.components)
    )
    return DualCodeSpec(dfd, comps)


def dual_code_nu(code: CodeSpec) -> CodeSpec:
    """Dual inside the same ambient ring; needs lambda^2 = 1.

    The reciprocal of f_j is f_tau(j) here, so the component built from
    position j lands at position tau(j) of the same factor data.
    """
    fd = code.fd
    if fd.tau is None:
        raise NotSelfPairedLambda("lambda^2 != 1, use dual_code")
    comps: list[IdealSpec | None] = [None] * fd.r
    for j, spec in enumerate(code.components):
        tj = fd.tau[j]
        comps[tj] = dual_component(spec, j, fd, fd.chain(tj))
    return CodeSpec(fd, tuple(comps))


def is_self_dual(code: CodeSpec) -> bool:
    """Whether the code equals its own dual (lambda = +-1 only)."""
    return dual_code_nu(code).components == code.components


def _nu_value(field, nu: int) -> int:
    if nu == 1:
        return 1
    if nu == -1:
        return field.neg(1)
    raise NotSelfPairedLambda(f"nu must be +1 or -1, got {nu}")


def self_dual_component_options(j: int, fd: FactorData) -> list[IdealSpec]:
    """Specs over a tau-fixed factor that are their own dual component.

    Filtering all specs (rather than just the three shapes that can be
    fixed) keeps this an honest fixed-point computation; only case I,
    case III with 2k = e and case V with 2k + t = e ever survive.
    """
    ctx = fd.chain(j)
    out = []
    for spec in enumerate_ideals(ctx):
        if dual_component(spec, j, fd, ctx) == spec:
            out.append(spec)
    return out


def _self_dual_groups(fd: FactorData, nu: int):
    if fd.tau is None:
        raise NotSelfPairedLambda("lambda^2 != 1")
    if fd.params.lam != _nu_value(fd.params.field, nu):
        raise NotSelfPairedLambda(
            f"factor data was built for lambda = {fd.params.lam}, not nu = {nu}"
        )
    fixed = [self_dual_component_options(j, fd) for j in range(fd.rho)]
    free = [
        list(enumerate_ideals(fd.chain(fd.rho + i))) for i in range(fd.pair_count)
    ]
    return fixed, free


def count_self_dual(fd: FactorData, nu: int) -> int:
    fixed, _ = _self_dual_groups(fd, nu)
    total = 1
    for opts in fixed:
        total *= len(opts)
    for i in range(fd.pair_count):
        total *= count_ideals(fd.chain(fd.rho + i))
    return total


def enumerate_self_dual(fd: FactorData, nu: int):
    """All self-dual codes: free choices on one factor of each
    reciprocal pair (the partner is forced), filtered fixed points on
    the tau-fixed factors."""
    fixed, free = _self_dual_groups(fd, nu)
    groups = fixed + free
    if not all(groups):
        return
    idx = [0] * len(groups)
    while True:
        comps: list[IdealSpec | None] = [None] * fd.r
        for j in range(fd.rho):
            comps[j] = groups[j][idx[j]]
        for i in range(fd.pair_count):
            a = fd.rho + i
            spec = groups[fd.rho + i][idx[fd.rho + i]]
            comps[a] = spec
            comps[fd.tau[a]] = dual_component(spec, a, fd, fd.chain(fd.tau[a]))
        yield CodeSpec(fd, tuple(comps))
        g = len(groups) - 1
        while g >= 0:
            idx[g] += 1
            if idx[g] < len(groups[g]):
                break
            idx[g] = 0
            g -= 1
        if g < 0:
            return
