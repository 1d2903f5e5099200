"""Batch front end: generate families, run verification suites, emit JSON/CSV.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
parse error.  Identical invocations (including --seed) produce byte-identical
output; the per-check wall-clock timings are therefore opt-in (--timings).

Polynomials print with variables in the global (alphabetical) order and
terms in graded lex order, with explicit '*' and '^'.  The oracle caps can
be raised with the LAGTP_LIMIT environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, digraphs, laguerre, quadtp, srpaths
from .digraphs import LimitExceeded
from .laguerre import EdgeWeights, LaguerreParams, VertexWeights
from .matrices import Truncation, tp_check_sampled, tp_check_symbolic
from .polyring import Poly

GEN_SELECTORS = (
    "laguerre-coeff", "first-mv", "second-mv",
    "prodmat:Pcirc", "prodmat:P", "prodmat:PcircFlat", "prodmat:PFlat",
    "prodmat:PcircY", "prodmat:PY",
    "smj", "quad-general", "quad-variant",
)

FAMILY_IDS = ("j0am1", "j1am1", "j2am1", "j1a0", "j2a0", "j2a1")


class UsageError(Exception):
    pass


def _parse_alpha(text: str) -> LaguerreParams:
    if text == "sym":
        return LaguerreParams.symbolic()
    try:
        return LaguerreParams.of(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --alpha value {text!r}: {exc}") from None


def _parse_family(cell_id: str, kappa_text: str | None) -> srpaths.KappaFamily:
    if cell_id not in FAMILY_IDS:
        raise UsageError(f"unknown --family {cell_id!r}; choose from {', '.join(FAMILY_IDS)}")
    j = int(cell_id[1])
    alpha = -1 if "am1" in cell_id else int(cell_id[-1])
    kappa = None
    if (j, alpha) in srpaths.KAPPA_CELLS:
        kappa = Fraction(kappa_text) if kappa_text else Fraction(1)
    return srpaths.KappaFamily(j, alpha, kappa)


def _gen_matrix(args) -> Truncation:
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    sel = args.selector
    if sel == "laguerre-coeff":
        return laguerre.coeff_matrix_uni(_parse_alpha(args.alpha), n)
    if sel == "first-mv":
        return laguerre.coeff_matrix_first_mv(
            _parse_alpha(args.alpha), EdgeWeights.symbolic(), n)
    if sel == "second-mv":
        return laguerre.coeff_matrix_second_mv(
            _parse_alpha(args.alpha), VertexWeights.symbolic(), n, flat=args.flat)
    if sel.startswith("prodmat:"):
        which = sel.split(":", 1)[1]
        params = _parse_alpha(args.alpha)
        weights = VertexWeights.symbolic() if which not in ("Pcirc", "P") else None
        return laguerre.prodmat(params, which, weights=weights).truncate(n)
    if sel == "smj":
        if args.family:
            fam = _parse_family(args.family, args.kappa)
            if args.j is not None and args.j != fam.j:
                raise UsageError(f"--family {args.family} fixes --j {fam.j}")
            if args.m != 2:
                raise UsageError("the table families are defined for --m 2")
            coeffs = srpaths.kappa_family_coeffs(fam)
            return srpaths.prodmat_smj(coeffs, fam.j, n).truncate(n)
        coeffs = srpaths.SRCoeffs.symbolic(args.m)
        return srpaths.prodmat_smj(coeffs, args.j or 0, n).truncate(n)
    if sel == "quad-general":
        return quadtp.build_general_quad(quadtp.QuadFactorParams.symbolic()).truncate(n)
    if sel == "quad-variant":
        return quadtp.build_variant_quad(quadtp.QuadVariantParams.symbolic()).truncate(n)
    raise UsageError(f"unknown selector {sel!r}")


def _emit_matrix(m: Truncation, fmt: str, out) -> None:
    if fmt == "json":
        out.write(m.to_json() + "\n")
    else:
        for row in m.data:
            out.write(",".join(str(e) for e in row) + "\n")


def cmd_gen(args) -> int:
    matrix = _gen_matrix(args)
    if args.out:
        with open(args.out, "w") as fh:
            _emit_matrix(matrix, args.format, fh)
    else:
        _emit_matrix(matrix, args.format, sys.stdout)
    return 0


def cmd_tp_check(args) -> int:
    try:
        with open(args.matrix) as fh:
            obj = json.load(fh)
        matrix = Truncation.from_json_obj(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read matrix JSON: {exc}", file=sys.stderr)
        return 2
    if args.mode == "symbolic":
        report = tp_check_symbolic(matrix, args.order)
    else:
        report = tp_check_sampled(matrix, args.order, seed=args.seed, samples=args.samples)
    print(report.to_json())
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    ctx = checks.Ctx(seed=args.seed, max_n=args.max_n)
    try:
        results = checks.run_suite(args.suite, ctx)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r[2] for r in results)
    payload = {
        "suite": args.suite,
        "seed": args.seed,
        "ok": ok,
        "checks": [
            {"suite": s, "name": n, "ok": passed}
            | ({"seconds": round(secs, 3)} if args.timings else {})
            for s, n, passed, secs in results
        ],
    }
    print(json.dumps(payload, separators=(",", ":"), sort_keys=True))
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    kind = args.kind
    if kind in ("first-mv", "second-mv", "second-mv-general"):
        params = _parse_alpha(args.alpha)
        if kind == "first-mv":
            w = EdgeWeights.symbolic()
            weights = {"v_minus": w.v_minus, "v_zero": w.v_zero,
                       "v_plus": w.v_plus, "lam": params.lam}
            mode = "first_mv"
        else:
            wv = VertexWeights.symbolic(with_z=(kind == "second-mv-general"))
            weights = {"y_p": wv.y_p, "y_v": wv.y_v, "y_da": wv.y_da,
                       "y_dd": wv.y_dd, "y_fp": wv.y_fp, "z_p": wv.zp,
                       "z_v": wv.zv, "z_da": wv.zda, "z_dd": wv.zdd,
                       "lam": params.lam}
            mode = kind.replace("-", "_")
        value = digraphs.oracle_entry(args.n, args.k, weights, mode)
    elif kind in ("cyclic", "linear00"):
        value = digraphs.permutation_oracles(args.n, kind)
    elif kind == "sr-path":
        coeffs = srpaths.SRCoeffs.symbolic(args.m)
        value = srpaths.sr_path_oracle(coeffs, args.j, args.n, args.k)
    else:
        raise UsageError(f"unknown oracle kind {kind!r}")
    if args.format == "json":
        print(json.dumps(value.to_json_obj(), separators=(",", ":"), sort_keys=True))
    else:
        print(value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lagtp",
        description="Exact Laguerre/rook/Lah production matrices and total positivity checks.")
    sub = top.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a family truncation")
    gen.add_argument("selector", choices=GEN_SELECTORS)
    gen.add_argument("--alpha", default="sym", help="'sym' or an exact rational (default sym)")
    gen.add_argument("--n", type=int, default=5, help="truncation size")
    gen.add_argument("--m", type=int, default=2, help="branch order for smj")
    gen.add_argument("--j", type=int, default=None, help="type for smj (from --family when given)")
    gen.add_argument("--family", help=f"table cell for smj: {', '.join(FAMILY_IDS)}")
    gen.add_argument("--kappa", help="rational kappa for the kappa-family cells (default 1)")
    gen.add_argument("--flat", action="store_true", help="flat second-mv matrix")
    gen.add_argument("--format", choices=("json", "csv"), default="json")
    gen.add_argument("--out", help="output path (default stdout)")
    gen.set_defaults(fn=cmd_gen)

    tp = sub.add_parser("tp-check", help="total positivity check of a matrix JSON file")
    tp.add_argument("matrix", help="path to matrix JSON")
    tp.add_argument("--order", type=int, default=3, help="largest minor size")
    tp.add_argument("--mode", choices=("symbolic", "sampled"), default="symbolic")
    tp.add_argument("--seed", type=int, default=1)
    tp.add_argument("--samples", type=int, default=50)
    tp.set_defaults(fn=cmd_tp_check)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=("all",) + tuple(checks.SUITES))
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--max-n", type=int, default=None, dest="max_n",
                     help="cap the truncation sizes used by the checks")
    ver.add_argument("--timings", action="store_true",
                     help="include wall-clock seconds per check (breaks byte determinism)")
    ver.set_defaults(fn=cmd_verify)

    oracle = sub.add_parser("oracle", help="query a brute-force enumeration oracle")
    oracle.add_argument("kind", choices=("first-mv", "second-mv", "second-mv-general",
                                         "cyclic", "linear00", "sr-path"))
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("--k", type=int, default=0)
    oracle.add_argument("--m", type=int, default=2)
    oracle.add_argument("--j", type=int, default=0)
    oracle.add_argument("--alpha", default="sym")
    oracle.add_argument("--format", choices=("json", "str"), default="json")
    oracle.set_defaults(fn=cmd_oracle)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
