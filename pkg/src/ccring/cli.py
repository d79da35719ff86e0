"""Command line front end.

Commands take the ring parameters as flags and print JSON (single
documents) or NDJSON (streams).  Counts are printed as decimal strings
since they overflow 64-bit integers quickly.

Exit codes: 0 on success, 2 when parameters fail validation, 3 when a
verify run reports a failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import nullcontext

from .decomp import AmbientParams, FactorData, build_factor_data, factor_data_for
from .dual import dual_code, count_self_dual, enumerate_self_dual
from .errors import CcringError
from .gf import FieldCtx, field_new
from .ideals import (
    CodeSpec,
    IdealSpec,
    code_size,
    count_codes,
    count_ideals,
    enumerate_codes,
)
from .oracle import verify_suite
from .poly import Poly


# -- JSON encoding -------------------------------------------------------------


def fieldelem_json(field: FieldCtx, v: int):
    if field.m == 1:
        return v
    return list(field.decode(v))


def parse_fieldelem(field: FieldCtx, doc) -> int:
    if field.m == 1:
        if not isinstance(doc, int):
            raise CcringError(f"field element must be an integer, got {doc!r}")
        return doc % field.p
    if not isinstance(doc, list) or len(doc) != field.m:
        raise CcringError(f"field element must be a list of {field.m} integers")
    return field.encode([c % field.p for c in doc])


def poly_json(field: FieldCtx, a: Poly):
    return [fieldelem_json(field, c) for c in a.coeffs]


def parse_poly(field: FieldCtx, doc) -> Poly:
    if not isinstance(doc, list):
        raise CcringError("polynomial must be a coefficient array")
    return Poly(field, [parse_fieldelem(field, c) for c in doc])


def params_json(params: AmbientParams):
    doc = {
        "p": params.p,
        "m": params.m,
        "s": params.s,
        "n": params.n,
        "lambda": fieldelem_json(params.field, params.lam),
    }
    if params.m > 1:
        doc["modulus"] = list(params.field.modulus)
    return doc


def parse_params(doc) -> AmbientParams:
    field = field_new(doc["p"], doc["m"], tuple(doc["modulus"]) if "modulus" in doc else None)
    return AmbientParams(field, doc["s"], doc["n"], parse_fieldelem(field, doc["lambda"]))


def ideal_json(field: FieldCtx, spec: IdealSpec):
    doc = {"case": spec.case}
    if spec.k is not None:
        doc["k"] = spec.k
    if spec.t is not None:
        doc["t"] = spec.t
    if spec.b is not None:
        doc["b"] = poly_json(field, spec.b)
    return doc


def parse_ideal(field: FieldCtx, doc) -> IdealSpec:
    return IdealSpec(
        doc["case"],
        k=doc.get("k"),
        t=doc.get("t"),
        b=parse_poly(field, doc["b"]) if "b" in doc else None,
    )


def code_json(code: CodeSpec):
    fd = code.fd
    field = fd.params.field
    return {
        "params": params_json(fd.params),
        "factors": [poly_json(field, f) for f in fd.factors],
        "components": [ideal_json(field, c) for c in code.components],
        "size": str(code_size(code)),
    }


def parse_code(doc, seed: int | None = None) -> CodeSpec:
    params = parse_params(doc["params"])
    if "factors" in doc:
        factors = [parse_poly(params.field, f) for f in doc["factors"]]
        fd = factor_data_for(params, factors)
    else:
        fd = build_factor_data(params, seed)
    comps = tuple(parse_ideal(params.field, c) for c in doc["components"])
    return CodeSpec(fd, comps)


def factor_data_json(fd: FactorData):
    field = fd.params.field
    doc = {
        "params": params_json(fd.params),
        "lambda0": fieldelem_json(field, fd.lam0),
        "factors": [
            {
                "poly": poly_json(field, f),
                "degree": f.degree,
                "count": str(count_ideals(fd.chain(j))),
            }
            for j, f in enumerate(fd.factors)
        ],
        "idempotents": [poly_json(field, e) for e in fd.idempotents],
        "total": str(count_codes(fd)),
    }
    if fd.tau is not None:
        doc["tau"] = [t + 1 for t in fd.tau]
        doc["delta"] = [fieldelem_json(field, d) for d in fd.delta]
        doc["rho"] = fd.rho
        doc["pair_count"] = fd.pair_count
    return doc


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


# -- argument plumbing ---------------------------------------------------------


def _ring_args(sub, need_lambda=True):
    sub.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    sub.add_argument("--m", type=int, default=1, help="extension degree of the residue field")
    sub.add_argument("--s", type=int, required=True, help="exponent in the length n*p^s")
    sub.add_argument("--n", type=int, required=True, help="prime-to-p part of the length")
    sub.add_argument(
        "--modulus",
        type=str,
        default=None,
        help="field modulus as comma-separated F_p coefficients, little-endian",
    )
    if need_lambda:
        sub.add_argument(
            "--lambda",
            dest="lam",
            type=str,
            required=True,
            help="unit of the residue field: integer for m=1 (-1 allowed), JSON array for m>1",
        )


def _parse_lambda(field: FieldCtx, text: str) -> int:
    doc = json.loads(text)
    if isinstance(doc, int) and doc == -1:
        return field.neg(1)
    return parse_fieldelem(field, doc)


def _build_fd(args, lam_text=None) -> FactorData:
    modulus = tuple(int(c) for c in args.modulus.split(",")) if args.modulus else None
    field = field_new(args.p, args.m, modulus)
    lam = _parse_lambda(field, lam_text if lam_text is not None else args.lam)
    params = AmbientParams(field, args.s, args.n, lam)
    return build_factor_data(params, _seed(args))


def _seed(args) -> int | None:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("CCRING_SEED")
    return int(env) if env else None


def _out_stream(args):
    if getattr(args, "output", None) and args.output != "-":
        return open(args.output, "w")
    return nullcontext(sys.stdout)


# -- commands ------------------------------------------------------------------


def cmd_info(args) -> int:
    fd = _build_fd(args)
    with _out_stream(args) as out:
        print(_dumps(factor_data_json(fd)), file=out)
    return 0


def cmd_idempotents(args) -> int:
    fd = _build_fd(args)
    field = fd.params.field
    with _out_stream(args) as out:
        print(_dumps([poly_json(field, e) for e in fd.idempotents]), file=out)
    return 0


def cmd_count(args) -> int:
    fd = _build_fd(args)
    with _out_stream(args) as out:
        print(count_codes(fd), file=out)
    return 0


def cmd_enumerate(args) -> int:
    fd = _build_fd(args)
    with _out_stream(args) as out:
        for code in enumerate_codes(fd, args.limit):
            print(_dumps(code_json(code)), file=out)
    return 0


def cmd_dual(args) -> int:
    if args.input and args.input != "-":
        with open(args.input) as fh:
            doc = json.load(fh)
    else:
        doc = json.load(sys.stdin)
    code = parse_code(doc, _seed(args))
    with _out_stream(args) as out:
        print(_dumps(code_json(dual_code(code))), file=out)
    return 0


def cmd_selfdual(args) -> int:
    lam_text = "1" if args.nu == 1 else "-1"
    fd = _build_fd(args, lam_text=lam_text)
    with _out_stream(args) as out:
        if args.count_only:
            print(count_self_dual(fd, args.nu), file=out)
            return 0
        emitted = 0
        for code in enumerate_self_dual(fd, args.nu):
            if args.limit is not None and emitted >= args.limit:
                break
            print(_dumps(code_json(code)), file=out)
            emitted += 1
    return 0


def cmd_verify(args) -> int:
    failures = 0
    with _out_stream(args) as out:
        for name, ok, detail in verify_suite(args.level):
            tag = "PASS" if ok else "FAIL"
            print(f"{tag}  {name}: {detail}", file=out)
            if not ok:
                failures += 1
        print(f"{'OK' if not failures else 'FAILED'} ({failures} failures)", file=out)
    return 3 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ccring",
        description="classify, count, enumerate and dualize constacyclic codes "
        "over F_{p^m} + u F_{p^m}",
    )
    ap.add_argument("--seed", type=int, default=None, help="factorization RNG seed")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", help="factors, idempotents, pairing and counts")
    _ring_args(sp)
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_info)

    sp = sub.add_parser("idempotents", help="the primitive idempotents")
    _ring_args(sp)
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_idempotents)

    sp = sub.add_parser("count", help="number of codes in the ambient ring")
    _ring_args(sp)
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_count)

    sp = sub.add_parser("enumerate", help="stream codes as NDJSON")
    _ring_args(sp)
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("dual", help="dual of a code spec read as JSON")
    sp.add_argument("--input", default="-", help="path of the code JSON, - for stdin")
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("selfdual", help="self-dual codes for lambda = nu")
    _ring_args(sp, need_lambda=False)
    sp.add_argument("--nu", type=int, choices=(1, -1), default=-1)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_selfdual)

    sp = sub.add_parser("verify", help="run the brute-force oracle suite")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    sp.add_argument("--output", default="-")
    sp.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CcringError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as ex:
        print(f"error: bad JSON input: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
