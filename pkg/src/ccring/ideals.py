"""Ideals of K + uK (u^2 = 0) over a chain ring K = F_{p^m}[x]/(f^e).

Writing an element as xi + u*eta, every ideal falls into one of five
shapes, keyed by a distinguished generator and at most one extra power
of f:

    I    <f*b + u>                          b in f^(ceil(e/2)-1) (K/f^(e-1))
    II   <f^(k+1)*b + u*f^k>                1 <= k <= e-1,
                                            b in f^(ceil((e-k)/2)-1) (K/f^(e-k-1))
    III  <f^k>                              0 <= k <= e
    IV   <f*b + u, f^t>                     1 <= t <= e-1,
                                            b in f^(ceil(t/2)-1) (K/f^(t-1))
    V    <f^(k+1)*b + u*f^k, f^(k+t)>       1 <= k <= e-2, 1 <= t <= e-k-1,
                                            b in f^(ceil(t/2)-1) (K/f^(t-1))

The parameter b ranges over a residue window, so each ideal appears for
exactly one spec.  Codes in the full ambient ring are tuples of one
such spec per irreducible factor, glued through the idempotents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import ChainCtx, ceil_half
from .decomp import FactorData
from .errors import InvalidSpec, TooLarge
from .poly import Poly

CASES = ("I", "II", "III", "IV", "V")

CODEWORD_BOUND = 1 << 24


@dataclass(frozen=True)
class IdealSpec:
    case: str
    k: int | None = None
    t: int | None = None
    b: Poly | None = None

    def label(self) -> str:
        bits = [self.case]
        if self.k is not None:
            bits.append(f"k={self.k}")
        if self.t is not None:
            bits.append(f"t={self.t}")
        if self.b is not None:
            bits.append(f"b={self.b.term_string()}")
        return " ".join(bits)


def b_window(spec: IdealSpec, e: int) -> tuple[int, int]:
    """Digit window [lo, hi) that the parameter b must live in."""
    if spec.case == "I":
        return ceil_half(e) - 1, e - 1
    if spec.case == "II":
        w = e - spec.k
        return ceil_half(w) - 1, w - 1
    if spec.case in ("IV", "V"):
        return ceil_half(spec.t) - 1, spec.t - 1
    raise InvalidSpec(f"case {spec.case} carries no b parameter")


def validate_spec(spec: IdealSpec, ctx: ChainCtx) -> None:
    e = ctx.e
    case = spec.case
    if case not in CASES:
        raise InvalidSpec(f"unknown case {spec.case!r}")
    if case == "I":
        if spec.k is not None or spec.t is not None:
            raise InvalidSpec("case I takes no k or t")
    elif case == "II":
        if spec.t is not None:
            raise InvalidSpec("case II takes no t")
        if spec.k is None or not 1 <= spec.k <= e - 1:
            raise InvalidSpec(f"case II needs 1 <= k <= {e - 1}")
    elif case == "III":
        if spec.b is not None or spec.t is not None:
            raise InvalidSpec("case III takes only k")
        if spec.k is None or not 0 <= spec.k <= e:
            raise InvalidSpec(f"case III needs 0 <= k <= {e}")
    elif case == "IV":
        if spec.k is not None:
            raise InvalidSpec("case IV takes no k")
        if spec.t is None or not 1 <= spec.t <= e - 1:
            raise InvalidSpec(f"case IV needs 1 <= t <= {e - 1}")
    elif case == "V":
        if spec.k is None or not 1 <= spec.k <= e - 2:
            raise InvalidSpec(f"case V needs 1 <= k <= {e - 2}")
        if spec.t is None or not 1 <= spec.t <= e - spec.k - 1:
            raise InvalidSpec(f"case V needs 1 <= t <= {e - spec.k - 1}")
    if case != "III":
        if spec.b is None:
            raise InvalidSpec(f"case {case} needs a b parameter")
        if spec.b.ctx != ctx.field:
            raise InvalidSpec("b lives over the wrong field")
        lo, hi = b_window(spec, e)
        if not ctx.in_residue_window(ctx.reduce(spec.b), lo, hi):
            raise InvalidSpec(
                f"b = {spec.b.term_string()} outside digit window [{lo}, {hi})"
            )


def ideal_size(spec: IdealSpec, ctx: ChainCtx) -> int:
    q = ctx.field.q ** ctx.d
    e = ctx.e
    if spec.case == "I":
        return q ** e
    if spec.case == "II":
        return q ** (e - spec.k)
    if spec.case == "III":
        return q ** (2 * (e - spec.k))
    if spec.case == "IV":
        return q ** (2 * e - spec.t)
    if spec.case == "V":
        return q ** (2 * e - 2 * spec.k - spec.t)
    raise InvalidSpec(f"unknown case {spec.case!r}")


def generator_rows(spec: IdealSpec, ctx: ChainCtx) -> list[tuple[Poly, Poly, int]]:
    """Module generators of the ideal as rows (xi, eta, depth).

    Each element of the ideal is uniquely sum_i c_i * row_i with the
    coefficient c_i running over K/(f^(e - depth_i)).
    """
    validate_spec(spec, ctx)
    f = ctx.f
    zero = Poly.zero(ctx.field)
    one = Poly.one(ctx.field)
    fp = ctx.f_pows
    if spec.case == "I":
        return [(ctx.mul(f, spec.b), one, 0)]
    if spec.case == "II":
        k = spec.k
        return [(ctx.mul(fp[k + 1], spec.b), fp[k], k)]
    if spec.case == "III":
        k = spec.k
        if k == ctx.e:
            return []
        return [(fp[k], zero, k), (zero, fp[k], k)]
    if spec.case == "IV":
        t = spec.t
        return [(ctx.mul(f, spec.b), one, 0), (fp[t], zero, t)]
    k, t = spec.k, spec.t
    return [(ctx.mul(fp[k + 1], spec.b), fp[k], k), (fp[k + t], zero, k + t)]


def ideal_member(a, spec: IdealSpec, ctx: ChainCtx) -> bool:
    """Membership of the pair a = (A, B) meaning A + u*B."""
    validate_spec(spec, ctx)
    A, B = ctx.reduce(a[0]), ctx.reduce(a[1])
    e = ctx.e
    case = spec.case
    if case == "III":
        k = spec.k
        return ctx.valuation(A) >= k and ctx.valuation(B) >= k
    fb = ctx.mul(ctx.f, spec.b)
    if case == "I":
        return A == ctx.mul(fb, B)
    if case == "II":
        return ctx.valuation(B) >= spec.k and A == ctx.mul(fb, B)
    if case == "IV":
        return ctx.valuation(A - ctx.mul(fb, B)) >= spec.t
    # case V
    return (
        ctx.valuation(B) >= spec.k
        and ctx.valuation(A - ctx.mul(fb, B)) >= spec.k + spec.t
    )


def enumerate_ideals(ctx: ChainCtx):
    """All ideal specs, in the fixed documented order.

    Case I (b ascending), II (k then b), III (k), IV (t then b),
    V (k, then t, then b); b runs in residue_set order.
    """
    e = ctx.e
    for b in ctx.residue_set(ceil_half(e) - 1, e - 1):
        yield IdealSpec("I", b=b)
    for k in range(1, e):
        w = e - k
        for b in ctx.residue_set(ceil_half(w) - 1, w - 1):
            yield IdealSpec("II", k=k, b=b)
    for k in range(0, e + 1):
        yield IdealSpec("III", k=k)
    for t in range(1, e):
        for b in ctx.residue_set(ceil_half(t) - 1, t - 1):
            yield IdealSpec("IV", t=t, b=b)
    for k in range(1, e - 1):
        for t in range(1, e - k):
            for b in ctx.residue_set(ceil_half(t) - 1, t - 1):
                yield IdealSpec("V", k=k, t=t, b=b)


# -- counting ----------------------------------------------------------------


def case_counts(p: int, m: int, d: int, s: int) -> dict[str, int]:
    """How many ideals each case contributes, from the window sizes."""
    e = p ** s
    q = p ** (m * d)
    counts = {
        "I": q ** (e - ceil_half(e)),
        "II": sum(q ** ((e - k) - ceil_half(e - k)) for k in range(1, e)),
        "III": e + 1,
        "IV": sum(q ** (t - ceil_half(t)) for t in range(1, e)),
        "V": sum(
            q ** (t - ceil_half(t))
            for k in range(1, e - 1)
            for t in range(1, e - k)
        ),
    }
    return counts


def count_ideals_params(p: int, m: int, d: int, s: int) -> int:
    """Closed form for the number of ideals of K + uK."""
    md = m * d
    if s == 0:
        return 3  # K is a field, so only 0, <u> and <1>
    if p == 2:
        h = 2 ** (s - 1)
        return sum((1 + 4 * i) * 2 ** ((h - i) * md) for i in range(h + 1))
    h = (p ** s - 1) // 2
    return sum((3 + 4 * i) * p ** ((h - i) * md) for i in range(h + 1))


def count_ideals_sumform_params(p: int, m: int, d: int, s: int) -> int:
    """The same count as a sum over the five cases (independent route)."""
    e = p ** s
    md = m * d
    total = 1 + e
    total += sum(p ** ((e - k - ceil_half(e - k)) * md) for k in range(e))
    total += sum(
        p ** ((t - ceil_half(t)) * md)
        for k in range(e - 1)
        for t in range(1, e - k)
    )
    return total


def count_ideals(ctx: ChainCtx) -> int:
    field = ctx.field
    # ctx carries e = p^s directly; recover s for the closed form
    e, s = ctx.e, 0
    while e > 1:
        if e % field.p:
            raise InvalidSpec("chain length is not a power of p")
        e //= field.p
        s += 1
    return count_ideals_params(field.p, field.m, ctx.d, s)


def count_ideals_sumform(ctx: ChainCtx) -> int:
    field = ctx.field
    e, s = ctx.e, 0
    while e > 1:
        e //= field.p
        s += 1
    return count_ideals_sumform_params(field.p, field.m, ctx.d, s)


# -- whole-ring codes --------------------------------------------------------


@dataclass(frozen=True)
class CodeSpec:
    """One ideal spec per irreducible factor of x^n - lambda0."""

    fd: FactorData
    components: tuple[IdealSpec, ...]

    def __post_init__(self):
        if len(self.components) != self.fd.r:
            raise InvalidSpec(
                f"need {self.fd.r} components, got {len(self.components)}"
            )
        for j, spec in enumerate(self.components):
            validate_spec(spec, self.fd.chain(j))


def code_size(code: CodeSpec) -> int:
    out = 1
    for j, spec in enumerate(code.components):
        out *= ideal_size(spec, code.fd.chain(j))
    return out


def count_codes(fd: FactorData) -> int:
    out = 1
    for ctx in fd.chain_ctxs:
        out *= count_ideals(ctx)
    return out


def enumerate_codes(fd: FactorData, limit: int | None = None):
    """Cartesian product of the per-factor spec streams.

    Odometer order with the last factor moving fastest; `limit` caps the
    number of codes yielded.
    """
    r = fd.r
    iters = [enumerate_ideals(fd.chain(j)) for j in range(r)]
    current = [next(it) for it in iters]
    emitted = 0
    while True:
        if limit is not None and emitted >= limit:
            return
        yield CodeSpec(fd, tuple(current))
        emitted += 1
        j = r - 1
        while j >= 0:
            nxt = next(iters[j], None)
            if nxt is not None:
                current[j] = nxt
                break
            iters[j] = enumerate_ideals(fd.chain(j))
            current[j] = next(iters[j])
            j -= 1
        if j < 0:
            return


def component_elements(spec: IdealSpec, ctx: ChainCtx):
    """All (xi, eta) pairs of one component ideal, without duplicates."""
    rows = generator_rows(spec, ctx)
    if not rows:
        yield Poly.zero(ctx.field), Poly.zero(ctx.field)
        return
    coeff_iters = [list(ctx.residue_set(0, ctx.e - depth)) for _, _, depth in rows]
    idx = [0] * len(rows)
    while True:
        xi = Poly.zero(ctx.field)
        eta = Poly.zero(ctx.field)
        for i, (rx, re_, _) in enumerate(rows):
            c = coeff_iters[i][idx[i]]
            if not c.is_zero():
                xi = xi + ctx.mul(c, rx)
                eta = eta + ctx.mul(c, re_)
        yield xi, eta
        j = len(rows) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < len(coeff_iters[j]):
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


def code_codewords(code: CodeSpec, bound: int = CODEWORD_BOUND):
    """Materialize every codeword as an ambient pair (a0, a1).

    Refuses when the code has more than `bound` words.
    """
    size = code_size(code)
    if size > bound:
        raise TooLarge(f"code has {size} words, bound is {bound}")
    fd = code.fd
    field = fd.params.field
    per_factor = []
    for j, spec in enumerate(code.components):
        ctx = fd.chain(j)
        eps = fd.idempotents[j]
        amb = []
        for xi, eta in component_elements(spec, ctx):
            amb.append((fd.mulmod(eps, xi), fd.mulmod(eps, eta)))
        per_factor.append(amb)
    idx = [0] * fd.r
    out = []
    while True:
        a0 = Poly.zero(field)
        a1 = Poly.zero(field)
        for j in range(fd.r):
            c0, c1 = per_factor[j][idx[j]]
            a0 = a0 + c0
            a1 = a1 + c1
        out.append((a0, a1))
        j = fd.r - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < len(per_factor[j]):
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return out
