"""Command-line front end.

Results go to stdout as key=value lines (or CSV for ``scan``); diagnostics go
to stderr.  Exit codes: 0 success, 2 invalid input, 3 budget exceeded,
4 negative verdict under ``--strict``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as kio
from .surface import (
    BudgetExceeded,
    DegenerateReduction,
    count_points_fast,
    count_points_naive,
    default_budget,
    is_ordinary,
    reduce_mod_p,
)
from .scan import ScanConfig, run_scan
from .weil import (
    InconsistentInput,
    classify_height,
    coefficients_from_power_sums,
    height_candidates_partial,
    newton_polygon,
    ogus2_check,
    power_sums_from_counts,
    reconstruct_from_power_sums,
    supersingular_exact,
    validate_weil,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_NEGATIVE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _out(**kv):
    for k, v in kv.items():
        print(f"{k}={_fmt(v)}")


def _fmt(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) and v == float("inf"):
        return "infinity"
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def _budget(args):
    return args.budget if getattr(args, "budget", None) is not None else default_budget()


def cmd_count(args):
    surface = kio.load_surface(args.surface)
    rs = reduce_mod_p(surface, args.p)
    counter = count_points_naive if args.naive else count_points_fast
    kw = {} if args.naive else {"workers": args.workers}
    res = counter(rs, args.n, budget=_budget(args), **kw)
    _out(p=res.p, n=res.n, q=res.q, count=res.count, s1=res.s1)
    return EXIT_OK


def cmd_trace(args):
    surface = kio.load_surface(args.surface)
    rs = reduce_mod_p(surface, args.p)
    res = count_points_fast(rs, args.n, budget=_budget(args), workers=args.workers)
    _out(p=res.p, q=res.q, count=res.count, s1=res.s1, a1=-res.s1, a1_mod_p=-res.s1 % res.p,
         weil_bound_ok=res.weil_ok)
    return EXIT_OK


def cmd_ordinary(args):
    surface = kio.load_surface(args.surface)
    verdict = is_ordinary(surface, args.p, args.depth, budget=_budget(args), workers=args.workers)
    print(str(verdict))
    if verdict.count is not None:
        _out(count=verdict.count.count, s1=verdict.count.s1)
    if verdict.smoothness is not None:
        _out(scanned_depth=verdict.smoothness.depth)
        if verdict.smoothness.singular:
            _out(witness_degree=verdict.smoothness.witness_degree,
                 witness=";".join(",".join(map(str, c)) for c in verdict.smoothness.witness))
    if args.strict and not verdict.ordinary:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_scan(args):
    surface = kio.load_surface(args.surface)
    config = ScanConfig(surface, args.pmin, args.pmax, args.depth, args.workers, _budget(args))
    report = run_scan(config)
    if args.out:
        Path(args.out).write_text(report.to_csv(), encoding="utf-8")
    else:
        sys.stdout.write(report.to_csv())
    if args.summary:
        Path(args.summary).write_text(report.summary_document(), encoding="utf-8")
    s = report.summary
    print(f"records={s['records']} good={s['good']} ordinary={s['ordinary']} "
          f"fraction={_fmt(s['ordinary_fraction'])}", file=sys.stderr)
    return EXIT_OK


def cmd_zeta(args):
    surface = kio.load_surface(args.surface)
    rs = reduce_mod_p(surface, args.p)
    top = max(args.max_n, 12) if args.s12 else args.max_n
    counts = [count_points_fast(rs, n, budget=_budget(args), workers=args.workers) for n in range(1, top + 1)]
    ps = power_sums_from_counts(counts)
    for n, s in enumerate(ps.values, start=1):
        _out(**{f"s{n}": s})
    k = min(len(ps), 11)
    a = coefficients_from_power_sums(ps.values[:k])
    _out(a_prefix=a[1:])
    _out(height_candidates=height_candidates_partial(a[1:], ps.p, ps.r))
    if args.sums_out:
        kio.dump_power_sums(ps, args.sums_out)
    if len(ps) >= 11:
        rec = reconstruct_from_power_sums(ps)
        _out(candidates=len(rec.candidates), ambiguous=rec.ambiguous)
        for i, P in enumerate(rec.candidates):
            _out(**{f"candidate{i}": list(P.coeffs), f"candidate{i}_height": str(classify_height(newton_polygon(P)))})
        if args.out and not rec.ambiguous:
            kio.dump_polynomial(rec.polynomial, args.out)
    return EXIT_OK


def cmd_np(args):
    P = kio.load_polynomial(args.poly)
    poly = newton_polygon(P)
    _out(vertices=";".join(f"({x},{y})" for x, y in poly.vertices))
    _out(slopes=[str(s) for s in poly.slopes])
    return EXIT_OK


def cmd_classify(args):
    P = kio.load_polynomial(args.poly, allow_partial=True)
    if isinstance(P, kio.PartialPolynomial):
        cands = height_candidates_partial(P.prefix[1:], P.p, P.r)
        if not cands:
            print("invalid: prefix consistent with no height", file=sys.stderr)
            return EXIT_INVALID
        _out(height_candidates=cands)
        return EXIT_OK
    hc = classify_height(newton_polygon(P))
    print(str(hc))
    if args.strict and hc.kind != "ordinary":
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_supersingular(args):
    P = kio.load_polynomial(args.poly)
    res = supersingular_exact(P)
    if res.yes:
        print("yes")
        _out(orders=list(res.orders))
        return EXIT_OK
    print(f"no: {res.reason}")
    return EXIT_NEGATIVE if args.strict else EXIT_OK


def cmd_ogus2(args):
    P = kio.load_polynomial(args.poly)
    v = ogus2_check(P.coeffs, args.p, args.ell)
    for k, ok in v.hypotheses.items():
        _out(**{f"hypothesis_{k}": ok})
    _out(all_hypotheses=v.all_hypotheses, conclusion_holds=v.conclusion_holds)
    if not v.invariant_holds:
        print("COUNTEREXAMPLE: all hypotheses hold but P_u != (1 - p t)^22", file=sys.stderr)
        return 1
    if args.strict and not v.all_hypotheses:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_validate(args):
    P = kio.load_polynomial(args.poly)
    rep = validate_weil(P)
    for clause, (ok, msg) in rep.checks.items():
        _out(**{f"check_{clause}": ok if ok else f"false ({msg})"})
    _out(epsilon=rep.epsilon, valid=rep.ok)
    if args.strict and not rep.ok:
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="k3ord", description="Ordinary reduction of quartic K3 surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def surface_cmd(name, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--surface", required=True, help="surface file (JSON)")
        sp.add_argument("--budget", type=int, help="point-evaluation cap (default: $K3ORD_BUDGET or 2^31)")
        sp.add_argument("--workers", type=int, default=1, help="parallel workers")
        return sp

    def poly_cmd(name, help_, strict=True):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--poly", required=True, help="polynomial file (JSON)")
        if strict:
            sp.add_argument("--strict", action="store_true", help="exit 4 on a negative verdict")
        return sp

    sp = surface_cmd("count", "count points over F_{p^n}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--naive", action="store_true", help="use the reference enumeration")
    sp.set_defaults(func=cmd_count)

    sp = surface_cmd("trace", "Frobenius trace s1 = #X(F_q) - 1 - q^2 and a1 = -s1")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.set_defaults(func=cmd_trace)

    sp = surface_cmd("ordinary", "ordinary / non_ordinary / bad_reduction verdict at p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--depth", type=int, default=2, help="singular-scan extension depth")
    sp.add_argument("--strict", action="store_true", help="exit 4 unless ordinary")
    sp.set_defaults(func=cmd_ordinary)

    sp = surface_cmd("scan", "ordinariness scan over a prime range")
    sp.add_argument("--pmin", type=int, required=True)
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--depth", type=int, default=2)
    sp.add_argument("--out", help="write the CSV report here instead of stdout")
    sp.add_argument("--summary", help="write the JSON summary document here")
    sp.set_defaults(func=cmd_scan)

    sp = surface_cmd("zeta", "power sums s_1..s_K and reconstruction of P_2")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True, dest="max_n")
    sp.add_argument("--s12", action="store_true", help="also count over F_{q^12} to fix the sign")
    sp.add_argument("--out", help="write the reconstructed polynomial here")
    sp.add_argument("--sums-out", dest="sums_out", help="write the power sums here")
    sp.set_defaults(func=cmd_zeta)

    poly_cmd("np", "Newton polygon of P_2", strict=False).set_defaults(func=cmd_np)
    poly_cmd("classify", "height class from the Newton polygon").set_defaults(func=cmd_classify)
    poly_cmd("supersingular", "exact supersingularity test").set_defaults(func=cmd_supersingular)
    sp = poly_cmd("lemma-ogus2", "trace-rigidity hypotheses and conclusion")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.set_defaults(func=cmd_ogus2)
    poly_cmd("validate", "Weil-polynomial validation").set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DegenerateReduction, InconsistentInput, ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
