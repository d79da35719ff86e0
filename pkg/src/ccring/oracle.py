"""Brute-force cross-checks for every closed-form result in the package.

Everything here re-derives structure from first principles with linear
algebra over F_p, so a bug in the classification formulas cannot hide:

* submodules of K^2 are found by spanning normalized generator pairs
  and deduplicating reduced-echelon bases; the total is compared with
  an independent counting formula, which certifies that two generators
  always suffice;
* the ideal classification is checked against the submodules that are
  closed under the shift (A, B) -> (0, A), which is what multiplication
  by u looks like on the xi + u*eta coordinates;
* duals are computed as literal kernels of the inner-product pairing
  (a full scan of the ambient space at toy sizes agrees by a test).

Spaces are canonicalized as reduced row echelon bases over F_p, so two
spaces are equal iff their keys are equal, with no element sets needed.
"""

from __future__ import annotations

from .chain import ChainCtx
from .decomp import AmbientParams, FactorData
from .errors import TooLarge
from .gf import FieldCtx
from .ideals import CodeSpec, IdealSpec, enumerate_ideals, generator_rows
from .poly import Poly

ORACLE_BUDGET = 1 << 24


# -- F_p linear algebra -------------------------------------------------------


class FpSpace:
    """A subspace of F_p^dim held as a reduced row echelon basis."""

    __slots__ = ("p", "dim", "rows", "pivots")

    def __init__(self, p: int, dim: int, rows=(), pivots=()):
        self.p = p
        self.dim = dim
        self.rows: tuple[tuple[int, ...], ...] = tuple(rows)
        self.pivots: tuple[int, ...] = tuple(pivots)

    @classmethod
    def from_rows(cls, p: int, dim: int, raw_rows) -> "FpSpace":
        rows: list[list[int]] = []
        pivots: list[int] = []
        for vec in raw_rows:
            _rref_insert(rows, pivots, list(vec), p)
        order = sorted(range(len(pivots)), key=lambda i: pivots[i])
        return cls(
            p,
            dim,
            tuple(tuple(rows[i]) for i in order),
            tuple(pivots[i] for i in order),
        )

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return self.p ** len(self.rows)

    def key(self):
        return self.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, FpSpace) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def contains(self, vec) -> bool:
        p = self.p
        v = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                for i in range(piv, self.dim):
                    v[i] = (v[i] - c * row[i]) % p
        return not any(v)

    def extended(self, raw_rows) -> "FpSpace":
        return FpSpace.from_rows(self.p, self.dim, list(self.rows) + list(raw_rows))

    def elements(self):
        """All p^rank vectors (keep to toy sizes)."""
        out = [tuple([0] * self.dim)]
        p = self.p
        for row in self.rows:
            grown = []
            for vec in out:
                for c in range(p):
                    grown.append(
                        tuple((vec[i] + c * row[i]) % p for i in range(self.dim))
                    )
            out = grown
        return out


def _rref_insert(rows: list, pivots: list, vec: list, p: int) -> bool:
    """Reduce vec against rows; add it if independent.  Keeps RREF."""
    dim = len(vec)
    for row, piv in zip(rows, pivots):
        c = vec[piv]
        if c:
            for i in range(piv, dim):
                vec[i] = (vec[i] - c * row[i]) % p
    piv = next((i for i in range(dim) if vec[i]), None)
    if piv is None:
        return False
    inv = pow(vec[piv], p - 2, p)
    if inv != 1:
        for i in range(piv, dim):
            vec[i] = vec[i] * inv % p
    # clear the new pivot column from the old rows
    for idx, row in enumerate(rows):
        c = row[piv]
        if c:
            rows[idx] = [(row[i] - c * vec[i]) % p for i in range(dim)]
    rows.append(vec)
    pivots.append(piv)
    return True


def _kernel(mat: list[list[int]], dim: int, p: int) -> FpSpace:
    """Kernel of the linear map with the given rows, as an FpSpace."""
    rows: list[list[int]] = []
    pivots: list[int] = []
    for vec in mat:
        _rref_insert(rows, pivots, list(vec), p)
    pivset = set(pivots)
    free = [i for i in range(dim) if i not in pivset]
    basis = []
    for fcol in free:
        vec = [0] * dim
        vec[fcol] = 1
        for row, piv in zip(rows, pivots):
            if row[fcol]:
                vec[piv] = (-row[fcol]) % p
        basis.append(vec)
    return FpSpace.from_rows(p, dim, basis)


# -- coordinates for K^2 pairs -----------------------------------------------


def _poly_coords(a: Poly, slots: int, field: FieldCtx) -> list[int]:
    out = []
    for i in range(slots):
        out.extend(field.decode(a[i]))
    return out


def pair_coords(ctx: ChainCtx, A: Poly, B: Poly) -> tuple[int, ...]:
    slots = ctx.d * ctx.e
    return tuple(
        _poly_coords(ctx.reduce(A), slots, ctx.field)
        + _poly_coords(ctx.reduce(B), slots, ctx.field)
    )


def pair_dim(ctx: ChainCtx) -> int:
    return 2 * ctx.field.m * ctx.d * ctx.e


def k_span(ctx: ChainCtx, pairs) -> FpSpace:
    """F_p-row space of all K-multiples of the given (A, B) pairs.

    K is spanned over F_p by x^i g^l, so closing under those two actions
    is exactly closing under multiplication by K.
    """
    field = ctx.field
    rows = []
    for A, B in pairs:
        A, B = ctx.reduce(A), ctx.reduce(B)
        for _ in range(ctx.d * ctx.e):
            cur0, cur1 = A, B
            for _l in range(field.m):
                rows.append(pair_coords(ctx, cur0, cur1))
                if field.m > 1:
                    g = Poly.const(field, field.gen())
                    cur0, cur1 = ctx.mul(cur0, g), ctx.mul(cur1, g)
            A, B = ctx.mul(A, Poly.x(field)), ctx.mul(B, Poly.x(field))
    return FpSpace.from_rows(field.p, pair_dim(ctx), rows)


def spec_span(spec: IdealSpec, ctx: ChainCtx) -> FpSpace:
    """The submodule of K^2 a classified spec describes, as an FpSpace."""
    rows = [(A, B) for A, B, _ in generator_rows(spec, ctx)]
    return k_span(ctx, rows)


# -- submodule enumeration ----------------------------------------------------


def submodule_count_formula(ctx: ChainCtx) -> int:
    """Number of K-submodules of K^2 (classical counting formula)."""
    q = ctx.residue_size
    return sum((2 * j + 1) * q ** (ctx.e - j) for j in range(ctx.e + 1))


def brute_submodules(ctx: ChainCtx, budget: int = ORACLE_BUDGET) -> list[FpSpace]:
    """Every K-submodule of K^2, by spanning normalized generator pairs.

    Any submodule is spanned by two elements; scaling a generator by a
    unit and subtracting a multiple of one generator from the other do
    not change the span, which cuts the pairs down to
        (f^k * c, f^k) with (f^l, 0)   and   (f^k, f^k * c) with (0, f^l),
    c of valuation >= 1 in the second family.  Completeness is certified
    by comparing the total against submodule_count_formula (tested), and
    against the literal all-pairs scan at toy sizes.
    """
    if ctx.size ** 2 > budget:
        raise TooLarge(f"|K|^2 = {ctx.size ** 2} over budget {budget}")
    e = ctx.e
    zero = Poly.zero(ctx.field)
    found: dict = {}

    def record(space: FpSpace) -> None:
        found.setdefault(space.key(), space)

    record(FpSpace.from_rows(ctx.field.p, pair_dim(ctx), []))
    for k in range(e):
        fk = ctx.f_pows[k]
        for c in ctx.residue_set(0, e - k):
            v = (ctx.mul(fk, c), fk)
            for l in range(e + 1):
                w = (ctx.f_pows[l] if l < e else zero, zero)
                record(k_span(ctx, [v, w]))
        for c in ctx.residue_set(1, e - k) if e - k >= 1 else ():
            v = (fk, ctx.mul(fk, c))
            for l in range(e + 1):
                w = (zero, ctx.f_pows[l] if l < e else zero)
                record(k_span(ctx, [v, w]))
    return list(found.values())


def brute_submodules_allpairs(ctx: ChainCtx, budget: int = 1 << 21) -> set:
    """Literal spans of all ordered generator pairs; toy sizes only.

    Exists to validate the normalization in brute_submodules without
    assuming anything beyond closure under the ring action.
    """
    n2 = ctx.size ** 2
    if n2 * n2 > budget:
        raise TooLarge(f"|K^2|^2 = {n2 * n2} over budget {budget}")
    vecs = [
        (A, B)
        for A in ctx.residue_set(0, ctx.e)
        for B in ctx.residue_set(0, ctx.e)
    ]
    keys = set()
    singles = []
    for v in vecs:
        s = k_span(ctx, [v])
        singles.append(s)
        keys.add(s.key())
    for i, v in enumerate(vecs):
        base = singles[i]
        for w in vecs[i + 1 :]:
            if base.contains(pair_coords(ctx, *w)):
                continue
            keys.add(k_span(ctx, [v, w]).key())
    return keys


def u_shift_closed(space: FpSpace, ctx: ChainCtx) -> bool:
    """Closure under (A, B) -> (0, A), i.e. under multiplication by u."""
    half = space.dim // 2
    for row in space.rows:
        shifted = (0,) * half + row[:half]
        if not space.contains(shifted):
            return False
    return True


def brute_u_closed_submodules(ctx: ChainCtx, budget: int = ORACLE_BUDGET) -> list[FpSpace]:
    return [s for s in brute_submodules(ctx, budget) if u_shift_closed(s, ctx)]


def generator_matrix_spans(ctx: ChainCtx) -> list[FpSpace]:
    """Spans of the nine canonical generator-matrix shapes.

    This is the classical normal-form list for length-2 codes over a
    chain ring; each shape is spanned and deduplicated so the result can
    be compared against brute_submodules as sets of spaces.
    """
    e = ctx.e
    zero = Poly.zero(ctx.field)
    one = Poly.one(ctx.field)
    fp = ctx.f_pows
    found: dict = {}

    def record(*pairs) -> None:
        s = k_span(ctx, pairs)
        found.setdefault(s.key(), s)

    for a in ctx.residue_set(0, e):  # (1, a)
        record((one, a))
    for k in range(1, e):  # f^k * (1, a)
        for a in ctx.residue_set(0, e - k):
            record((fp[k], ctx.mul(fp[k], a)))
    for b in ctx.residue_set(0, e - 1):  # (f b, 1)
        record((ctx.mul(ctx.f, b), one))
    for k in range(1, e):  # (f^(k+1) b, f^k)
        for b in ctx.residue_set(0, e - k - 1):
            record((ctx.mul(fp[k + 1], b), fp[k]))
    for k in range(e + 1):  # diagonal
        record((fp[k] if k < e else zero, zero), (zero, fp[k] if k < e else zero))
    for t in range(1, e):  # rows (1, c), (0, f^t)
        for c in ctx.residue_set(0, t):
            record((one, c), (zero, fp[t]))
    for k in range(1, e - 1):  # rows f^k (1, c), (0, f^(k+t))
        for t in range(1, e - k):
            for c in ctx.residue_set(0, t):
                record((fp[k], ctx.mul(fp[k], c)), (zero, fp[k + t]))
    for t in range(1, e):  # rows (c, 1), (f^t, 0), val(c) >= 1
        for c in ctx.residue_set(1, t):
            record((c, one), (fp[t], zero))
    for k in range(1, e - 1):  # rows (f^k c, f^k), (f^(k+t), 0)
        for t in range(1, e - k):
            for c in ctx.residue_set(1, t):
                record((ctx.mul(fp[k], c), fp[k]), (fp[k + t], zero))
    return list(found.values())


# -- ambient ring -------------------------------------------------------------


def ambient_dim(params: AmbientParams) -> int:
    return 2 * params.m * params.N


def ambient_coords(params: AmbientParams, a0: Poly, a1: Poly) -> tuple[int, ...]:
    return tuple(
        _poly_coords(a0, params.N, params.field)
        + _poly_coords(a1, params.N, params.field)
    )


def coords_ambient(params: AmbientParams, vec) -> tuple[Poly, Poly]:
    field = params.field
    m, N = field.m, params.N
    half = m * N
    a0 = Poly(field, [field.encode(vec[m * i : m * (i + 1)]) for i in range(N)])
    a1 = Poly(
        field,
        [field.encode(vec[half + m * i : half + m * (i + 1)]) for i in range(N)],
    )
    return a0, a1


def _x_shift(params: AmbientParams, a: Poly) -> Poly:
    """Multiply by x mod (x^N - lambda)."""
    field = params.field
    cs = a.coeffs
    if len(cs) < params.N:
        return Poly(field, (0,) + cs)
    top = cs[params.N - 1]
    out = [field.mul(params.lam, top)] + list(cs[: params.N - 1])
    return Poly(field, out)


def ideal_span(params: AmbientParams, gens) -> FpSpace:
    """F_p-span of the ideal generated by ambient pairs (a0, a1).

    Closes under multiplication by x, by the field generator and by u.
    """
    field = params.field
    rows = []
    g = Poly.const(field, field.gen())
    for a0, a1 in gens:
        for b0, b1 in ((a0, a1), (Poly.zero(field), a0)):
            cur0, cur1 = b0, b1
            for _ in range(params.N):
                s0, s1 = cur0, cur1
                for _l in range(field.m):
                    rows.append(ambient_coords(params, s0, s1))
                    if field.m > 1:
                        s0, s1 = (
                            Poly(field, [field.mul(field.gen(), c) for c in s0.coeffs]),
                            Poly(field, [field.mul(field.gen(), c) for c in s1.coeffs]),
                        )
                cur0, cur1 = _x_shift(params, cur0), _x_shift(params, cur1)
    return FpSpace.from_rows(field.p, ambient_dim(params), rows)


def code_space(code: CodeSpec) -> FpSpace:
    """The F_p-span of a classified code in ambient coordinates."""
    fd = code.fd
    params = fd.params
    field = params.field
    rows = []
    for j, spec in enumerate(code.components):
        ctx = fd.chain(j)
        eps = fd.idempotents[j]
        for A, B, _ in generator_rows(spec, ctx):
            amb = (fd.mulmod(eps, A), fd.mulmod(eps, B))
            cur0, cur1 = amb
            for _ in range(ctx.d * ctx.e):
                s0, s1 = cur0, cur1
                for _l in range(field.m):
                    rows.append(ambient_coords(params, s0, s1))
                    if field.m > 1:
                        g = field.gen()
                        s0 = Poly(field, [field.mul(g, c) for c in s0.coeffs])
                        s1 = Poly(field, [field.mul(g, c) for c in s1.coeffs])
                cur0, cur1 = _x_shift(params, cur0), _x_shift(params, cur1)
    return FpSpace.from_rows(field.p, ambient_dim(params), rows)


def brute_ambient_ideals(fd: FactorData, budget: int = ORACLE_BUDGET):
    """All ideals of the ambient ring, assembled factor by factor.

    Takes the u-closed submodules of each K_j^2, maps them through the
    idempotents, and sums the pieces.  Verifies on the way that every
    singly generated ideal of the ambient ring shows up, so nothing is
    missed; callers compare the total against the counting formula.
    """
    params = fd.params
    if params.ring_size() > budget:
        raise TooLarge(f"|R|^N = {params.ring_size()} over budget {budget}")
    field = params.field
    per_factor = []
    for j in range(fd.r):
        ctx = fd.chain(j)
        spaces = brute_u_closed_submodules(ctx, budget)
        eps = fd.idempotents[j]
        mapped = []
        for s in spaces:
            rows = []
            for row in s.rows:
                half = len(row) // 2
                slots = ctx.d * ctx.e
                A = Poly(field, [field.encode(row[field.m * i : field.m * (i + 1)]) for i in range(slots)])
                B = Poly(
                    field,
                    [
                        field.encode(row[half + field.m * i : half + field.m * (i + 1)])
                        for i in range(slots)
                    ],
                )
                rows.append((fd.mulmod(eps, A), fd.mulmod(eps, B)))
            mapped.append(rows)
        per_factor.append(mapped)

    ideals: dict = {}
    idx = [0] * fd.r
    while True:
        rows = []
        for j in range(fd.r):
            rows.extend(
                ambient_coords(params, a0, a1) for a0, a1 in per_factor[j][idx[j]]
            )
        space = FpSpace.from_rows(field.p, ambient_dim(params), rows)
        ideals.setdefault(space.key(), space)
        j = fd.r - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < len(per_factor[j]):
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            break

    _check_singly_generated_covered(fd, ideals, budget)
    return list(ideals.values())


def _check_singly_generated_covered(fd: FactorData, ideals: dict, budget: int) -> None:
    """Every <one element> ideal must be among the assembled ones."""
    params = fd.params
    field = params.field
    dim = ambient_dim(params)
    if params.ring_size() > budget:
        raise TooLarge("single-generator sweep over budget")
    covered: set = set()
    p = field.p
    vec = [0] * dim
    total = p ** dim
    for counter in range(total):
        c = counter
        for i in range(dim):
            vec[i] = c % p
            c //= p
        key = tuple(vec)
        if key in covered:
            continue
        a0, a1 = coords_ambient(params, key)
        span = ideal_span(params, [(a0, a1)])
        if span.key() not in ideals:
            raise AssertionError(
                f"singly generated ideal missed by the assembly: gen={key}"
            )
        for el in span.elements():
            covered.add(el)


# -- duals ---------------------------------------------------------------------


def _mul_coord_tensor(field: FieldCtx):
    """S[r][s] = coordinates of (g^r * g^s) for the F_p basis g^0..g^(m-1)."""
    m = field.m
    out = []
    for r in range(m):
        row = []
        for s in range(m):
            row.append(field.decode(field.mul(field.p ** r, field.p ** s)))
        out.append(row)
    return out


def brute_dual(space: FpSpace, params: AmbientParams) -> FpSpace:
    """All ambient vectors orthogonal to a code, as a kernel.

    The form is [a, b] = sum_i a_i b_i in R; writing it out on the
    (a0, a1) coordinate blocks gives, per basis codeword b, the 2m
    F_p-linear conditions coords([a,b]_0) = coords([a,b]_1) = 0.
    The answer is exactly the set a full scan would return (the scan
    variant below is kept for toy-size cross-checks).
    """
    field = params.field
    m, N = field.m, params.N
    dim = ambient_dim(params)
    S = _mul_coord_tensor(field)
    mat = []
    for row in space.rows:
        b0 = [row[m * i : m * (i + 1)] for i in range(N)]
        b1 = [row[m * N + m * i : m * N + m * (i + 1)] for i in range(N)]
        for l in range(m):
            # [a, b]_0 = sum_i a0_i * b0_i
            func = [0] * dim
            for i in range(N):
                for r in range(m):
                    func[m * i + r] = (
                        sum(b0[i][s] * S[r][s][l] for s in range(m)) % field.p
                    )
            mat.append(func)
            # [a, b]_1 = sum_i a0_i * b1_i + a1_i * b0_i
            func = [0] * dim
            for i in range(N):
                for r in range(m):
                    func[m * i + r] = (
                        sum(b1[i][s] * S[r][s][l] for s in range(m)) % field.p
                    )
                    func[m * N + m * i + r] = (
                        sum(b0[i][s] * S[r][s][l] for s in range(m)) % field.p
                    )
            mat.append(func)
    return _kernel(mat, dim, field.p)


def brute_dual_scan(space: FpSpace, params: AmbientParams, budget: int = 1 << 14) -> set:
    """Full-scan dual: every ambient vector tested against every codeword."""
    field = params.field
    if params.ring_size() > budget:
        raise TooLarge("scan over budget")
    dim = ambient_dim(params)
    p = field.p
    words = space.elements()
    out = set()
    vec = [0] * dim
    for counter in range(p ** dim):
        c = counter
        for i in range(dim):
            vec[i] = c % p
            c //= p
        a0, a1 = coords_ambient(params, tuple(vec))
        ok = True
        for w in words:
            b0, b1 = coords_ambient(params, w)
            if not _pair_orthogonal(params, a0, a1, b0, b1):
                ok = False
                break
        if ok:
            out.add(tuple(vec))
    return out


def _pair_orthogonal(params, a0, a1, b0, b1) -> bool:
    field = params.field
    z0 = 0
    z1 = 0
    for i in range(params.N):
        z0 = field.add(z0, field.mul(a0[i], b0[i]))
        z1 = field.add(z1, field.add(field.mul(a0[i], b1[i]), field.mul(a1[i], b0[i])))
    return z0 == 0 and z1 == 0


# -- verification suites -------------------------------------------------------


def _chain_check(p, m, d, s):
    from .gf import field_new
    from .ideals import count_ideals, enumerate_ideals, ideal_size
    from .poly import is_irreducible

    field = field_new(p, m)
    # smallest monic irreducible of degree d, by coefficient order
    if d == 1:
        f = Poly(field, [1, 1])
    else:
        f = None
        tail = [0] * d
        while f is None:
            cand = Poly(field, tail + [1])
            if is_irreducible(cand):
                f = cand
                break
            i = 0
            while i < d:
                tail[i] += 1
                if tail[i] < field.q:
                    break
                tail[i] = 0
                i += 1
    ctx = ChainCtx(f, p ** s)
    subs = brute_submodules(ctx)
    if len(subs) != submodule_count_formula(ctx):
        return False, f"submodule count {len(subs)} != formula"
    keys = {x.key() for x in subs}
    gm = generator_matrix_spans(ctx)
    if {x.key() for x in gm} != keys:
        return False, "generator-matrix spans differ from submodules"
    ucl = {x.key() for x in subs if u_shift_closed(x, ctx)}
    specs = list(enumerate_ideals(ctx))
    spans = {}
    for spec in specs:
        spans[spec_span(spec, ctx).key()] = spec
    if set(spans) != ucl or len(spans) != len(specs):
        return False, "classified ideals do not biject with u-closed submodules"
    if len(specs) != count_ideals(ctx):
        return False, "enumeration count != closed form"
    for key, spec in spans.items():
        if ideal_size(spec, ctx) != FpSpace(ctx.field.p, pair_dim(ctx), key).size:
            return False, f"size mismatch at {spec.label()}"
    return True, f"{len(subs)} submodules, {len(specs)} ideals"


def _dual_check(p, m, s, n, lam):
    from .dual import dual_code_nu
    from .ideals import code_size, enumerate_codes

    params = AmbientParams.of_ints(p, m, s, n, lam)
    from .decomp import build_factor_data

    fd = build_factor_data(params)
    count = 0
    for code in enumerate_codes(fd):
        D = dual_code_nu(code)
        sp = code_space(code)
        if brute_dual(sp, params) != code_space(D):
            return False, f"kernel dual differs at {[c.label() for c in code.components]}"
        if code_size(code) * code_size(D) != params.ring_size():
            return False, "size product violated"
        if dual_code_nu(D).components != code.components:
            return False, "double dual moved a code"
        count += 1
    return True, f"{count} codes"


def _selfdual_check(p, m, s, n, nu):
    from .decomp import build_factor_data
    from .dual import enumerate_self_dual, is_self_dual

    field_lam = nu if nu == 1 else p - 1
    params = AmbientParams.of_ints(p, m, s, n, field_lam)
    fd = build_factor_data(params)
    from .ideals import enumerate_codes

    fixed = set()
    for code in enumerate_codes(fd):
        sp = code_space(code)
        if brute_dual(sp, params) == sp:
            fixed.add(sp.key())
    emitted = list(enumerate_self_dual(fd, nu))
    keys = {code_space(c).key() for c in emitted}
    if keys != fixed:
        return False, f"{len(keys)} enumerated vs {len(fixed)} brute fixed points"
    if not all(is_self_dual(c) for c in emitted):
        return False, "an emitted code fails is_self_dual"
    return True, f"{len(emitted)} self-dual codes"


def _ambient_check(p, m, s, n, lam):
    from .decomp import build_factor_data
    from .ideals import count_codes

    params = AmbientParams.of_ints(p, m, s, n, lam)
    fd = build_factor_data(params)
    ideals = brute_ambient_ideals(fd)
    want = count_codes(fd)
    if len(ideals) != want:
        return False, f"{len(ideals)} assembled != {want}"
    return True, f"{len(ideals)} ideals assembled and closed"


def _count_check():
    from .ideals import count_ideals_params, count_ideals_sumform_params

    anchors = [
        ((5, 1, 1, 1), 121),
        ((5, 1, 2, 1), 2061),
        ((2, 1, 1, 1), 7),
        ((3, 1, 1, 1), 16),
        ((3, 1, 2, 1), 34),
    ]
    for (p, m, d, s), want in anchors:
        if count_ideals_params(p, m, d, s) != want:
            return False, f"N at {(p, m, d, s)} != {want}"
    for p in (2, 3, 5, 7):
        for m in (1, 2):
            for d in (1, 2, 3):
                for s in (1, 2):
                    if count_ideals_params(p, m, d, s) != count_ideals_sumform_params(p, m, d, s):
                        return False, f"closed form != sum form at {(p, m, d, s)}"
    return True, "closed form == sum form on grid; anchors exact"


QUICK_SUITE = [
    ("counting formulas", _count_check),
    ("chain 2,1,1,1", lambda: _chain_check(2, 1, 1, 1)),
    ("chain 2,1,2,1", lambda: _chain_check(2, 1, 2, 1)),
    ("chain 3,1,1,1", lambda: _chain_check(3, 1, 1, 1)),
    ("dual 3,1,1,1 nu=+1", lambda: _dual_check(3, 1, 1, 1, 1)),
    ("dual 3,1,1,1 nu=-1", lambda: _dual_check(3, 1, 1, 1, 2)),
    ("selfdual 3,1,1,2 nu=-1", lambda: _selfdual_check(3, 1, 1, 2, -1)),
    ("ambient 2,1,1,1", lambda: _ambient_check(2, 1, 1, 1, 1)),
]

FULL_SUITE = QUICK_SUITE + [
    ("chain 2,1,1,2", lambda: _chain_check(2, 1, 1, 2)),
    ("chain 3,1,2,1", lambda: _chain_check(3, 1, 2, 1)),
    ("chain 5,1,1,1", lambda: _chain_check(5, 1, 1, 1)),
    ("dual 3,1,1,2 nu=+1", lambda: _dual_check(3, 1, 1, 2, 1)),
    ("dual 3,1,1,2 nu=-1", lambda: _dual_check(3, 1, 1, 2, 2)),
    ("ambient 3,1,1,1", lambda: _ambient_check(3, 1, 1, 1, 1)),
    ("ambient 3,1,1,2 lam=-1", lambda: _ambient_check(3, 1, 1, 2, 2)),
]


def verify_suite(level: str = "quick"):
    """Run the oracle suite; yields (name, passed, detail) rows."""
    suite = FULL_SUITE if level == "full" else QUICK_SUITE
    for name, fn in suite:
        try:
            ok, detail = fn()
        except Exception as ex:  # a crash is a failure, not an abort
            ok, detail = False, f"{ex.__class__.__name__}: {ex}"
        yield name, ok, detail
