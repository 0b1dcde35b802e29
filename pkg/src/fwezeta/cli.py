"""fwe-zeta: command line front end.

Exit codes: 0 success or property verified, 1 verification failure,
2 usage or input error.  All configuration comes from flags; no
environment variables.  Exact values print as rational strings, numeric
values (roots, deviations) are labelled with the precision they carry.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath as mp

from .algebra import SingularMatrixError, UniPoly
from .analysis import (DEFAULT_PRECISION_BITS, DEFAULT_RH_TOLERANCE,
                       RootFindingError, check_divisibility, check_rh,
                       exact_sqrt2_multiplicities, mallows_sloane_bound,
                       verify_root_pairing)
from .files import (EnumeratorFormatError, enumerator_to_document,
                    load_golden_table, read_enumerator_file,
                    write_enumerator_file)
from .fwe import (build_extremal, check_invariance_g8,
                  is_formal_weight_enumerator, symmetry_checks)
from .zeta import (EnumeratorContext, compute_zeta, functional_equation_sign,
                   macwilliams_transform, zeta_oracle)

MAX_GOLDEN_DEGREE = 196


def _emit(args, payload: dict, lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _coeff_strings(P: UniPoly):
    return [str(c) for c in P.coeffs]


def _half_notation(W) -> str:
    """Interior coefficients of the symmetric half form, A_d .. A_((n-4)/2)."""
    n = W.degree
    parts = [f"A_{i}={W.coefficient(i)}" for i in sorted(W.support())
             if 0 < i <= (n - 4) // 2]
    return " ".join(parts)


def _mpc_str(z) -> str:
    return mp.nstr(z, 17)


def _read_input(args):
    try:
        return read_enumerator_file(args.input)
    except OSError as e:
        raise EnumeratorFormatError(f"cannot read {args.input}: {e}") from e


def cmd_zeta(args) -> int:
    W = _read_input(args)
    ctx = EnumeratorContext(W, args.q)
    Z = compute_zeta(ctx)
    sign = functional_equation_sign(Z) if ctx.n % 2 == 0 else None
    payload = {
        "n": ctx.n, "d": ctx.d, "q": ctx.q,
        "deg_P": Z.P.degree, "genus": Z.g, "sign": sign,
        "coefficients": _coeff_strings(Z.P),
    }
    lines = [
        f"n = {ctx.n}, d = {ctx.d}, q = {ctx.q}",
        f"deg P = {Z.P.degree}, g = {Z.g}",
        "P coefficients (ascending): " + ", ".join(_coeff_strings(Z.P)),
        f"functional equation sign: {sign}",
    ]
    code = 0
    if args.oracle:
        agrees = zeta_oracle(ctx).P == Z.P
        payload["oracle_agrees"] = agrees
        lines.append(f"oracle agrees: {'yes' if agrees else 'NO'}")
        if not agrees:
            code = 1
    _emit(args, payload, lines)
    return code


def cmd_transform(args) -> int:
    W = _read_input(args)
    T = macwilliams_transform(W, args.q)
    doc = enumerator_to_document(T)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    _emit(args, doc, [f"degree = {T.degree}", str(T)])
    return 0


def cmd_check(args) -> int:
    W = _read_input(args)
    fc = is_formal_weight_enumerator(W)
    sym = symmetry_checks(W)
    inv = check_invariance_g8(W)
    payload = {
        "formal_weight_enumerator": fc.ok,
        "failures": list(fc.failures),
        "degree_mod_8_is_4": sym.degree_mod_8_is_4,
        "term_count_even": sym.term_count_even,
        "swap_symmetric": sym.swap_symmetric,
        "g8_invariant": inv,
    }
    tag = lambda b: "pass" if b else "FAIL"
    lines = [
        f"support on multiples of 4: {tag(fc.support_multiple_of_4)}",
        f"transform negates W:       {tag(fc.anti_invariant)}",
        f"degree = 4 (mod 8):        {tag(sym.degree_mod_8_is_4)}",
        f"even number of terms:      {tag(sym.term_count_even)}",
        f"symmetric in x, y:         {tag(sym.swap_symmetric)}",
        f"G8 invariant over Q(i):    {tag(inv)}",
        f"formal weight enumerator:  {'yes' if fc.ok else 'no'}",
    ]
    for reason in fc.failures:
        lines.append(f"  reason: {reason}")
    _emit(args, payload, lines)
    return 0 if fc.ok else 1


def cmd_extremal(args) -> int:
    comb = build_extremal(args.degree)
    payload = {
        "degree": comb.degree, "d": comb.d,
        "combination": [{"s": e.s, "t": e.t, "coefficient": str(c)}
                        for e, c in comb.terms],
        "coefficients": {str(i): str(comb.expanded.coefficient(i))
                         for i in sorted(comb.expanded.support())},
    }
    lines = [f"extremal formal weight enumerator, degree {comb.degree}, d = {comb.d}"]
    lines += [f"  {c} * {e}" for e, c in comb.terms]
    lines.append(_half_notation(comb.expanded))
    if args.output:
        write_enumerator_file(comb.expanded, args.output)
        lines.append(f"wrote {args.output}")
    _emit(args, payload, lines)
    return 0


def cmd_rh(args) -> int:
    W = _read_input(args)
    ctx = EnumeratorContext(W, args.q)
    Z = compute_zeta(ctx)
    report = check_rh(Z, args.tol, args.precision)
    payload = {
        "holds": report.holds,
        "target_modulus": report.target_modulus,
        "max_relative_deviation": report.max_relative_deviation,
        "precision_bits": args.precision,
        "offending_roots": [_mpc_str(z) for z in report.offending_roots],
    }
    lines = [
        f"RH {'holds' if report.holds else 'FAILS'} "
        f"(target modulus 1/sqrt({ctx.q}) = {report.target_modulus:.12g})",
        f"max deviation of |root|*sqrt(q) from 1: {report.max_relative_deviation:.3e} "
        f"(tolerance {args.tol:.1e}, {args.precision}-bit arithmetic)",
    ]
    for z in report.offending_roots:
        lines.append(f"  offending root: {_mpc_str(z)}  |.| = {mp.nstr(abs(z), 17)}")
    _emit(args, payload, lines)
    return 0 if report.holds else 1


def cmd_divisibility(args) -> int:
    W = _read_input(args)
    report = check_divisibility(W)
    payload = {
        "passes": report.ok,
        "derivative_degree": report.derivative.degree,
        "factors": [{"name": f.name, "degree": f.degree, "divides": f.divides}
                    for f in report.factors],
        "quotient_degree": report.quotient.degree if report.quotient else None,
    }
    lines = [f"derivative xy(x^4-y^4)(D)W has degree {report.derivative.degree}"]
    for f in report.factors:
        lines.append(f"  {f.name} (degree {f.degree}): "
                     f"{'divides' if f.divides else 'DOES NOT divide'}")
    if report.quotient is not None:
        lines.append(f"full product divides; quotient degree {report.quotient.degree}")
    else:
        lines.append("full product DOES NOT divide")
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def cmd_bound(args) -> int:
    report = mallows_sloane_bound(args.kind, args.degree)
    _emit(args, {"kind": report.kind, "n": report.n, "bound": report.bound},
          [f"{report.bound}"])
    return 0


def _golden_map(max_degree: int):
    if max_degree > MAX_GOLDEN_DEGREE:
        raise ValueError(
            f"golden data ends at degree {MAX_GOLDEN_DEGREE}; "
            f"got --max-degree {max_degree}")
    return {e.n: e for e in load_golden_table() if e.n <= max_degree}


def cmd_table(args) -> int:
    golden = _golden_map(args.max_degree)
    entries = []
    lines = []
    failed = False
    for n in sorted(golden):
        entry = golden[n]
        comb = build_extremal(n)
        diffs = []
        if comb.d != entry.d:
            diffs.append(f"d: built {comb.d}, golden {entry.d}")
        expected = entry.expand()
        for i in range(n + 1):
            a, b = comb.expanded.coefficient(i), expected.coefficient(i)
            if a != b:
                diffs.append(f"A_{i}: built {a}, golden {b}")
        entries.append({"n": n, "d": comb.d, "match": not diffs, "diffs": diffs})
        status = "match" if not diffs else "MISMATCH " + "; ".join(diffs)
        lines.append(f"n={n} d={comb.d} {_half_notation(comb.expanded)} [{status}]")
        failed = failed or bool(diffs)
    _emit(args, {"entries": entries, "all_match": not failed}, lines)
    return 1 if failed else 0


def _verify_degree(n: int, entry, precision: int, tol: float) -> dict:
    comb = build_extremal(n)
    W = comb.expanded
    checks = {}
    checks["defining_conditions"] = is_formal_weight_enumerator(W).ok
    checks["symmetry"] = symmetry_checks(W).ok
    checks["g8_invariance"] = check_invariance_g8(W)
    checks["golden_match"] = (entry is not None and comb.d == entry.d
                              and entry.expand() == W)
    ctx = EnumeratorContext(W, 2)
    Z = compute_zeta(ctx)
    checks["oracle_agrees"] = zeta_oracle(ctx).P == Z.P
    sign = functional_equation_sign(Z)
    checks["sign_is_minus_one"] = sign == -1
    checks["deg_P_equals_2g"] = Z.P.degree == 2 * Z.g
    mplus, mminus = exact_sqrt2_multiplicities(Z.P)
    checks["sqrt2_multiplicities_odd"] = mplus % 2 == 1 and mminus % 2 == 1
    lead, const = Z.P.coefficient(Z.P.degree), Z.P.coefficient(0)
    checks["root_product"] = const / lead == Fraction(-1, 2 ** Z.g)
    checks["root_pairing"] = verify_root_pairing(Z, precision_bits=precision)
    report = check_rh(Z, tol, precision)
    checks["rh"] = report.holds
    bound = mallows_sloane_bound("fwe", n, comb.d)
    checks["bound_tight"] = bool(bound.tight)
    if comb.d >= 8:
        checks["divisibility"] = check_divisibility(W).ok
    result = {"n": n, "d": comb.d, "max_rh_deviation": report.max_relative_deviation,
              "sqrt2_multiplicities": [mplus, mminus], "checks": checks,
              "ok": all(checks.values())}
    return result


def cmd_verify_all(args) -> int:
    golden = _golden_map(args.max_degree)
    results = []
    lines = []
    for n in range(12, args.max_degree + 1, 8):
        res = _verify_degree(n, golden.get(n), args.precision, args.tol)
        results.append(res)
        if res["ok"]:
            lines.append(f"n={n} d={res['d']}: ok "
                         f"(max RH deviation {res['max_rh_deviation']:.2e})")
        else:
            bad = [k for k, v in res["checks"].items() if not v]
            lines.append(f"n={n} d={res['d']}: FAIL [{', '.join(bad)}]")
    all_ok = all(r["ok"] for r in results)
    lines.append("all degrees verified" if all_ok else "verification FAILED")
    _emit(args, {"results": results, "ok": all_ok}, lines)
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwe-zeta",
        description="Exact zeta polynomials and formal weight enumerators.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, func, *, inp=False, out=False, q=False, degree=False,
            maxdeg=False, numeric=False, fmt=True, oracle=False):
        p = sub.add_parser(name, help=help_)
        if inp:
            p.add_argument("--input", required=True, help="enumerator JSON file")
        if out:
            p.add_argument("--output", help="write result to this path")
        if q:
            p.add_argument("--q", type=int, default=2, help="field size (default 2)")
        if degree:
            p.add_argument("--degree", type=int, required=True)
        if maxdeg:
            p.add_argument("--max-degree", dest="max_degree", type=int,
                           default=MAX_GOLDEN_DEGREE)
        if numeric:
            p.add_argument("--precision", type=int, default=DEFAULT_PRECISION_BITS,
                           help="working precision in bits (default 256)")
            p.add_argument("--tol", type=float, default=DEFAULT_RH_TOLERANCE,
                           help="modulus tolerance (default 1e-9)")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        if oracle:
            p.add_argument("--oracle", action="store_true",
                           help="cross-check with the brute-force solver")
        p.set_defaults(func=func)
        return p

    add("zeta", "compute the zeta polynomial of an enumerator", cmd_zeta,
        inp=True, q=True, oracle=True)
    add("transform", "apply the MacWilliams transform", cmd_transform,
        inp=True, q=True, out=True)
    add("check", "test the formal weight enumerator conditions", cmd_check,
        inp=True)
    add("extremal", "construct the extremal enumerator of a degree",
        cmd_extremal, degree=True, out=True)
    add("rh", "check that all zeta roots have modulus 1/sqrt(q)", cmd_rh,
        inp=True, q=True, numeric=True)
    add("divisibility", "check the derivative divisibility property",
        cmd_divisibility, inp=True)
    p = add("bound", "print the minimum-index bound for a degree", cmd_bound)
    p.add_argument("kind", choices=("type2", "fwe"))
    p.add_argument("degree", type=int)
    add("table", "rebuild extremal enumerators and diff the golden table",
        cmd_table, maxdeg=True)
    add("verify-all", "run the complete verification pipeline per degree",
        cmd_verify_all, maxdeg=True, numeric=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EnumeratorFormatError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except SingularMatrixError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 1
    except (RootFindingError, ArithmeticError) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
