"""Command-line interface.

Exit codes: 0 success / true, 1 distinct / false, 2 usage or parse error,
3 invalid order matrix, 4 undetermined.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .counterexamples import (FAMILIES, det_report, family_matrix, lexprop_chain_check,
                              verify_theorem_main)
from .equivalence import Distinct, Equivalent, default_degree_bound, equivalent
from .exactlin import DimensionError, ExactMatrix
from .fileio import (MatrixFileError, parse_monomial, read_matrix, render_matrix,
                     render_monomial)
from .induced import induced_matrix
from .orders import (CLASSIC_NAMES, OrderError, classic, compare, enumerate_monomials,
                     sort_monomials, validate)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INVALID, EXIT_UNDETERMINED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _mat_json(a: ExactMatrix):
    return [[str(x) for x in row] for row in a.entries]


def _frac_json(x: Fraction) -> str:
    return str(x)


def _emit(args, doc: dict, text: str):
    if args.json:
        print(json.dumps(doc, indent=2))
    elif text:
        print(text, end="" if text.endswith("\n") else "\n")


def _load_order(path):
    return validate(read_matrix(path))


def cmd_validate(args) -> int:
    a = read_matrix(args.matrix)
    try:
        validate(a)
    except OrderError as exc:
        _emit(args, {"command": "validate", "valid": False, "condition": exc.condition,
                     "message": str(exc)}, f"INVALID {exc}")
        return EXIT_INVALID
    _emit(args, {"command": "validate", "valid": True, "rows": a.nrows, "cols": a.ncols},
          f"VALID {a.nrows}x{a.ncols}")
    return EXIT_OK


def cmd_compare(args) -> int:
    o = _load_order(args.matrix)
    a, b = parse_monomial(args.a), parse_monomial(args.b)
    if not len(a) == len(b) == o.nvars:
        raise UsageError(f"monomials must have {o.nvars} exponents")
    c = compare(o, a, b)
    _emit(args, {"command": "compare", "a": list(a), "b": list(b), "result": c.token}, c.token)
    return EXIT_OK


def cmd_classic(args) -> int:
    m = classic(args.name, args.n).matrix
    _emit(args, {"command": "classic", "name": args.name, "n": args.n, "matrix": _mat_json(m)},
          render_matrix(m, [f"{args.name} order on {args.n} variables"]))
    return EXIT_OK


def cmd_sort(args) -> int:
    o = _load_order(args.matrix)
    ms = enumerate_monomials(o.nvars, args.d, "exactly" if args.exact else "upto")
    out = sort_monomials(o, ms)
    _emit(args, {"command": "sort", "degree": args.d, "exact": args.exact,
                 "monomials": [list(m) for m in out]},
          "\n".join(render_monomial(m) for m in out))
    return EXIT_OK


def cmd_induce(args) -> int:
    o = _load_order(args.matrix)
    res = induced_matrix(o, args.i)
    _emit(args, {"command": "induce", "variable": args.i, "deleted_row": res.deleted_row,
                 "matrix": _mat_json(res.matrix)},
          render_matrix(res.matrix, [f"induced ordering without variable {args.i}",
                                     f"deleted row {res.deleted_row}"]))
    return EXIT_OK


def _verdict_json(v):
    if isinstance(v, Equivalent):
        return {"verdict": v.name, "certificate": _mat_json(v.certificate)}
    if isinstance(v, Distinct):
        return {"verdict": v.name, "witness": [list(m) for m in v.witness],
                "cmp_a": v.cmp_a.token, "cmp_b": v.cmp_b.token}
    return {"verdict": v.name, "degree": v.degree}


def cmd_equiv(args) -> int:
    a, b = _load_order(args.a), _load_order(args.b)
    if a.nvars != b.nvars:
        raise UsageError(f"orders on {a.nvars} and {b.nvars} variables")
    d = args.d if args.d is not None else default_degree_bound(a.nvars)
    v = equivalent(a, b, d)
    if isinstance(v, Equivalent):
        text, code = "EQUIVALENT", EXIT_OK
    elif isinstance(v, Distinct):
        x, y = v.witness
        text = f"DISTINCT {render_monomial(x)} {render_monomial(y)} ({v.cmp_a.token} vs {v.cmp_b.token})"
        code = EXIT_FALSE
    else:
        text, code = f"UNDETERMINED up to degree {v.degree}", EXIT_UNDETERMINED
    _emit(args, {"command": "equiv", "degree_bound": d, **_verdict_json(v)}, text)
    return code


def cmd_family(args) -> int:
    m = family_matrix(args.family, args.n)
    _emit(args, {"command": "family", "family": args.family, "n": args.n, "matrix": _mat_json(m)},
          render_matrix(m, [f"{args.family}_{args.n}"]))
    return EXIT_OK


def _witness_json(w):
    if w is None:
        return None
    return {"pair": [list(m) for m in w.pair],
            "c_images": [[_frac_json(x) for x in v] for v in w.c_images],
            "d_images": [[_frac_json(x) for x in v] for v in w.d_images],
            "cmp_c": w.cmp_c.token, "cmp_d": w.cmp_d.token, "separates": w.separates}


def main_report_json(r) -> dict:
    return {
        "n": r.n, "degree_bound": r.degree_bound, "witness_bound": r.witness_bound,
        "c_matrix": _mat_json(r.c_matrix), "d_matrix": _mat_json(r.d_matrix),
        "valid_c": r.valid_c, "valid_d": r.valid_d,
        "det_c": _frac_json(r.det_c), "det_c_closed": r.det_c_closed, "det_c_match": r.det_c == r.det_c_closed,
        "det_d": _frac_json(r.det_d), "det_d_closed": r.det_d_closed, "det_d_match": r.det_d == r.det_d_closed,
        "distinct": r.distinct, "witness": _witness_json(r.witness),
        "printed_witness": _witness_json(r.printed_witness),
        "induced": [{
            "i": c.i, "deleted_row_c": c.deleted_row_c, "deleted_row_d": c.deleted_row_d,
            "det_c": _frac_json(c.det_c), "det_c_closed": c.closed_c, "det_c_match": c.det_c_match,
            "det_d": _frac_json(c.det_d), "det_d_closed": c.closed_d, "det_d_match": c.det_d_match,
            "cramer_ratio": _frac_json(c.cramer_ratio), "certificate_ok": c.certificate_ok,
            **_verdict_json(c.verdict),
        } for c in r.induced],
        "all_induced_equivalent": r.all_induced_equivalent,
        "certified": r.certified,
    }


def _main_report_text(r) -> str:
    flag = lambda ok: "ok" if ok else "MISMATCH"
    lines = [f"n = {r.n}  (degree bound {r.degree_bound}, witness bound {r.witness_bound})",
             f"C_{r.n} valid: {r.valid_c}   D_{r.n} valid: {r.valid_d}",
             f"det C = {r.det_c}  (closed form {r.det_c_closed}: {flag(r.det_c == r.det_c_closed)})",
             f"det D = {r.det_d}  (closed form {r.det_d_closed}: {flag(r.det_d == r.det_d_closed)})"]
    if r.witness is None:
        lines.append(f"witness: none up to degree {r.witness_bound}")
    else:
        a, b = r.witness.pair
        lines.append(f"witness: {render_monomial(a)} vs {render_monomial(b)}: "
                     f"C {r.witness.cmp_c.token}, D {r.witness.cmp_d.token}")
    p = r.printed_witness
    lines.append(f"printed pair: C {p.cmp_c.token}, D {p.cmp_d.token} "
                 f"({'separates' if p.separates else 'does not separate'})")
    for c in r.induced:
        lines.append(f"  i={c.i}: {c.verdict.name}  rows deleted C/D {c.deleted_row_c}/{c.deleted_row_d}  "
                     f"det C_i {c.det_c} ({flag(c.det_c_match)})  det D_i {c.det_d} ({flag(c.det_d_match)})  "
                     f"ratio {c.cramer_ratio}  certificate {'ok' if c.certificate_ok else 'BAD'}")
    lines.append("CERTIFIED" if r.certified else "NOT CERTIFIED")
    return "\n".join(lines)


def cmd_verify_main(args) -> int:
    d = 6 if args.d is None else args.d
    r = verify_theorem_main(args.n, d, args.witness_bound)
    _emit(args, {"command": "verify-main", **main_report_json(r)}, _main_report_text(r))
    return EXIT_OK if r.certified else EXIT_FALSE


def cmd_det_report(args) -> int:
    if args.lo < 4 or args.hi < args.lo:
        raise UsageError("need 4 <= --from <= --to")
    rows = det_report(args.lo, args.hi)
    doc = {"command": "det-report", "entries": [
        {"n": e.n, "family": e.family, "i": e.i, "label": e.label, "value": _frac_json(e.value),
         "closed_form": e.closed_form, "match": e.match, "nonzero": e.nonzero} for e in rows],
        "all_nonzero": all(e.nonzero for e in rows)}
    text = [f"{'n':>3} {'i':>3}  {'quantity':<18}{'computed':>10}{'closed':>10}  match"]
    for e in rows:
        text.append(f"{e.n:>3} {'-' if e.i is None else e.i:>3}  {e.label:<18}"
                    f"{str(e.value):>10}{e.closed_form:>10}  {'yes' if e.match else 'NO'}")
    _emit(args, doc, "\n".join(text))
    return EXIT_OK if doc["all_nonzero"] else EXIT_FALSE


def cmd_lexprop(args) -> int:
    r = lexprop_chain_check(args.n, args.d, args.samples, args.seed)
    f = r.failure
    doc = {"command": "lexprop", "n": r.n, "d": r.d, "counts": r.counts, "passed": r.passed,
           "failure": None if f is None else {"case": f.case, "alpha": list(f.alpha),
                                              "beta": list(f.beta), "link": f.link, "reason": f.reason}}
    text = [f"{case:<16}{count:>5} instances" for case, count in r.counts.items()]
    text.append("PASS" if r.passed else f"FAIL {f}")
    _emit(args, doc, "\n".join(text))
    return EXIT_OK if r.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    p = argparse.ArgumentParser(prog="matorder", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check that a matrix defines a monomial order")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("compare", parents=[common], help="compare two monomials: LT, EQ or GT")
    s.add_argument("matrix")
    s.add_argument("a", metavar="MONO_A")
    s.add_argument("b", metavar="MONO_B")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("classic", parents=[common], help="print a lex/deglex/revlex matrix")
    s.add_argument("name", choices=CLASSIC_NAMES)
    s.add_argument("-n", type=int, required=True)
    s.set_defaults(func=cmd_classic)

    s = sub.add_parser("sort", parents=[common], help="list monomials in ascending order")
    s.add_argument("matrix")
    s.add_argument("-d", type=int, required=True)
    s.add_argument("--exact", action="store_true", help="degree exactly D instead of at most D")
    s.set_defaults(func=cmd_sort)

    s = sub.add_parser("induce", parents=[common], help="matrix of the induced ordering")
    s.add_argument("matrix")
    s.add_argument("-i", type=int, required=True, help="1-based variable to remove")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("equiv", parents=[common], help="decide whether two matrices define the same order")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-d", type=int, default=None, help="degree bound for the brute-force search")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("family", parents=[common], help="print C_n or D_n")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("-n", type=int, required=True)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("verify-main", parents=[common], help="check the C_n / D_n counterexample")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-d", type=int, default=None, help="degree bound (default 6)")
    s.add_argument("--witness-bound", type=int, default=None,
                   help="degree bound for the separating-pair search (default: -d)")
    s.set_defaults(func=cmd_verify_main)

    s = sub.add_parser("det-report", parents=[common], help="determinant table with closed-form flags")
    s.add_argument("--from", dest="lo", type=int, required=True)
    s.add_argument("--to", dest="hi", type=int, required=True)
    s.set_defaults(func=cmd_det_report)

    s = sub.add_parser("lexprop", parents=[common], help="replay the lex/revlex comparison chains")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-d", type=int, required=True)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_lexprop)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixFileError as exc:
        print(f"matorder: {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OrderError as exc:
        print(f"matorder: {args.command}: invalid order matrix: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, DimensionError, ValueError) as exc:
        print(f"matorder: {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
