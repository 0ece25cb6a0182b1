"""Command-line front end.

Subcommands: field-info, eval, uniformity, sweep, verify, dickson,
gold-roots, jacobsthal.  Formats: table (stdout), json, csv.  A --figure
path renders a matplotlib figure next to the delimited output.  Exit
code is 0 iff no FAIL records were produced.
"""

import argparse
import sys

from . import plots, reports
from .field import FieldError, build_field, parse_modulus
from .functions import (Family, FamilyError, Monomial, Polynomial,
                        dickson_eval, evaluate, function_dict, is_permutation)
from .harness import run_verify
from .predict import predict_gold_root_counts
from .spectra import (BudgetError, classify, dickson_preimage_distribution,
                      gold_equation_distribution, jacobsthal_sum, sweep,
                      uniformity)

DEFAULT_BUDGET = 1 << 30


def parse_c(field, token: str) -> int:
    """c shorthand: signed integers map into the prime subfield
    (-1 -> p-1); 'idx:N' gives a raw element index."""
    token = token.strip()
    if token.startswith("idx:"):
        idx = int(token[4:])
        if not 0 <= idx < field.q:
            raise SystemExit(f"element index {idx} outside [0, {field.q})")
        return idx
    return int(token) % field.p


def _common_flags(sub):
    sub.add_argument("--p", type=int, help="field characteristic")
    sub.add_argument("--n", type=int, help="extension degree")
    sub.add_argument("--modulus", type=str,
                     help="comma-separated ascending coefficients, e.g. 2,1,1")
    sub.add_argument("--format", choices=("table", "json", "csv"),
                     default="table")
    sub.add_argument("--out", type=str, help="write output to this path")
    sub.add_argument("--figure", type=str, help="render a figure to this path")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker pool size for verify runs; records stay "
                          "ordered by parameter point (compute is GIL-bound, "
                          "so 1 is usually fastest at desk scale)")
    sub.add_argument("--cache-dir", type=str, default=None)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="operation budget for sweeps")


def _function_flags(sub):
    sub.add_argument("--monomial", type=int, help="exponent d of x^d")
    sub.add_argument("--poly", type=str,
                     help="comma-separated coefficient indices, ascending")
    sub.add_argument("--family", type=str, help="named family id")
    sub.add_argument("--k", type=int, help="family parameter k")
    sub.add_argument("--u", type=str, help="family parameter u (c shorthand)")


def _build_field(args):
    if args.p is None or args.n is None:
        raise SystemExit("--p and --n are required")
    modulus = parse_modulus(args.modulus) if args.modulus else None
    return build_field(args.p, args.n, modulus=modulus)


def _build_function(field, args):
    if args.monomial is not None:
        return Monomial(args.monomial)
    if args.poly is not None:
        return Polynomial(tuple(int(t) for t in args.poly.split(",")))
    if args.family is not None:
        u = parse_c(field, args.u) if args.u is not None else None
        return Family(args.family, k=args.k, u=u)
    raise SystemExit("give a function: --monomial D | --poly c0,c1,... "
                     "| --family NAME [--k K] [--u U]")


def _emit(payload: str, args):
    reports.export(payload, args.out)
    if not args.out:
        sys.stdout.write(payload)


def cmd_field_info(args):
    field = _build_field(args)
    terms = []
    for i, coeff in enumerate(field.modulus):
        if not coeff:
            continue
        if i == 0:
            terms.append(str(coeff))
        else:
            x = "x" if i == 1 else f"x^{i}"
            terms.append(x if coeff == 1 else f"{coeff}{x}")
    lines = [
        f"field        GF({field.p}^{field.n}) with {field.q} elements",
        f"modulus      {field.modulus_str()}   ({' + '.join(terms)})",
        f"generator    index {field.generator} = {field.element_str(field.generator)}"
        f" (order {field.order(field.generator)})",
        f"tables       {'log/antilog built' if field.has_tables else 'polynomial arithmetic only'}",
    ]
    if args.format == "json":
        import json
        _emit(json.dumps({"p": field.p, "n": field.n, "q": field.q,
                          "modulus": list(field.modulus),
                          "generator": field.generator,
                          "tables": field.has_tables},
                         separators=(",", ":")) + "\n", args)
    else:
        print("\n".join(lines))
    return 0


def cmd_eval(args):
    field = _build_field(args)
    func = _build_function(field, args)
    if args.x == "all":
        for x in range(field.q):
            print(f"{x} -> {evaluate(field, func, x)}")
    else:
        x = parse_c(field, args.x)
        print(evaluate(field, func, x))
    return 0


def _report_payload(report_list, fmt):
    if fmt == "json":
        return reports.spectra_json(report_list)
    return reports.spectra_csv(report_list)


def cmd_uniformity(args):
    field = _build_field(args)
    func = _build_function(field, args)
    c = parse_c(field, args.c)

    def compute():
        return uniformity(field, func, c)

    report = reports.cache_get_put(args.cache_dir, field, function_dict(func),
                                   c, compute)
    if args.format == "table":
        print(f"c = {c}: uniformity {report.delta} ({classify(report)})")
        print(f"histogram: {report.histogram}")
        print(f"witnesses: {list(report.witnesses)}")
    else:
        _emit(_report_payload(report, args.format), args)
    if args.figure:
        plots.spectrum_figure(report, args.figure)
    return 0


def cmd_sweep(args):
    field = _build_field(args)
    func = _build_function(field, args)
    if args.c == "all":
        reps = sweep(field, func, "all", exclude_one=not args.include_one,
                     exclude_zero=args.skip_zero, budget=args.budget)
    elif args.c.startswith("sample:"):
        from .harness import sample_c_values
        cs = sample_c_values(field, int(args.c[7:]), args.seed)
        reps = sweep(field, func, cs, budget=args.budget)
    else:
        cs = [parse_c(field, t) for t in args.c.split(",")]
        reps = sweep(field, func, cs, budget=args.budget)
    if args.format == "table":
        for r in reps:
            print(f"c={r.c:>6}  delta={r.delta:>3}  {classify(r)}")
    else:
        _emit(_report_payload(reps, args.format), args)
    if args.figure:
        plots.sweep_figure(reps, args.figure)
    return 0


def cmd_verify(args):
    kwargs = {"threads": args.threads, "seed": args.seed}
    if args.n_min is not None:
        kwargs["n_lo"] = args.n_min
    if args.n_max is not None:
        kwargs["n_hi"] = args.n_max
    if args.theorem == "gold":
        kwargs["c_policy"] = args.c_policy
        kwargs["sample"] = args.sample
    records = run_verify(args.theorem, **kwargs)
    fails = sum(1 for r in records if r.verdict == "FAIL")
    if args.format == "table":
        for r in records:
            point = f"p={r.p} n={r.n}" + (f" k={r.k}" if r.k is not None else "") \
                + (f" c={r.c}" if r.c is not None else "")
            print(f"{r.verdict:<4} {r.theorem:<12} {point:<24} "
                  f"predicted {r.predicted:<16} observed {r.observed}")
        passes = sum(1 for r in records if r.verdict == "PASS")
        skips = sum(1 for r in records if r.verdict == "SKIP")
        print(f"-- {passes} PASS, {fails} FAIL, {skips} SKIP")
    elif args.format == "json":
        _emit(reports.records_json(records, timings=args.timings), args)
    else:
        _emit(reports.records_csv(records, timings=args.timings), args)
    if args.figure:
        plots.records_figure(records, args.figure)
    return 1 if fails else 0


def cmd_dickson(args):
    field = _build_field(args)
    if args.x is not None:
        x = parse_c(field, args.x)
        print(dickson_eval(field, args.m, x))
        return 0
    dist = dickson_preimage_distribution(field, args.m)
    if args.format == "table":
        print(f"D_{args.m} over GF({field.p}^{field.n}): "
              f"max fiber {dist.max_size}, sizes {dist.sizes}")
        from .functions import DicksonMap
        print(f"permutation: {is_permutation(field, DicksonMap(args.m))}")
    else:
        import json
        _emit(json.dumps({"m": args.m, "sizes": {str(k): v for k, v in
                                                 sorted(dist.sizes.items())},
                          "max": dist.max_size}, separators=(",", ":")) + "\n",
              args)
    if args.figure:
        plots.distribution_figure(dist, args.figure,
                                  title=f"fiber sizes of D_{args.m}")
    return 0


def cmd_gold_roots(args):
    if args.p not in (None, 2):
        raise SystemExit("gold-roots requires p = 2")
    args.p = 2
    field = _build_field(args)
    dist = gold_equation_distribution(field, args.k)
    pred = predict_gold_root_counts(field.n, args.k)
    if args.format == "table":
        print(f"roots of z^(2^{args.k}+1) + z + beta over GF(2^{field.n}), "
              f"beta != 0:")
        print(f"observed : {dist.sizes}")
        print(f"predicted: {pred}")
        print(f"beta = 0 : {dist.zero_point} roots")
    else:
        import json
        _emit(json.dumps({"observed": {str(k): v for k, v in
                                       sorted(dist.sizes.items())},
                          "predicted": {str(k): v for k, v in
                                        sorted(pred.items())},
                          "zero_beta": dist.zero_point},
                         separators=(",", ":")) + "\n", args)
    if args.figure:
        plots.distribution_figure(dist, args.figure,
                                  title=f"root counts, k={args.k}, "
                                        f"n={field.n}")
    return 0


def cmd_jacobsthal(args):
    field = _build_field(args)
    a2 = parse_c(field, args.a2)
    a1 = parse_c(field, args.a1)
    a0 = parse_c(field, args.a0)
    s = jacobsthal_sum(field, a2, a1, a0)
    disc = field.sub(field.mul(a1, a1),
                     field.mul(4 % field.p, field.mul(a0, a2)))
    eta2 = field.quadratic_character(a2)
    want = (field.q - 1) * eta2 if disc == 0 else -eta2
    print(f"sum eta({a2}x^2 + {a1}x + {a0}) = {s} "
          f"(closed form {want}, discriminant index {disc})")
    return 0 if s == want else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cdelta",
        description="c-differential spectra over GF(p^n): exhaustive scans "
                    "with closed-form cross-checks")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("field-info", help="show field parameters")
    _common_flags(s)
    s.set_defaults(fn=cmd_field_info)

    s = subs.add_parser("eval", help="evaluate a function at a point")
    _common_flags(s)
    _function_flags(s)
    s.add_argument("--x", type=str, required=True,
                   help="element (c shorthand) or 'all'")
    s.set_defaults(fn=cmd_eval)

    s = subs.add_parser("uniformity", help="spectrum for a single c")
    _common_flags(s)
    _function_flags(s)
    s.add_argument("--c", type=str, required=True)
    s.set_defaults(fn=cmd_uniformity)

    s = subs.add_parser("sweep", help="spectra over a set of c values")
    _common_flags(s)
    _function_flags(s)
    s.add_argument("--c", type=str, default="all",
                   help="'all', 'sample:N', or a comma list")
    s.add_argument("--include-one", action="store_true",
                   help="include c = 1 in an 'all' sweep")
    s.add_argument("--skip-zero", action="store_true",
                   help="exclude c = 0 from an 'all' sweep")
    s.set_defaults(fn=cmd_sweep)

    s = subs.add_parser("verify", help="run a theorem verifier")
    _common_flags(s)
    s.add_argument("--theorem", type=str, required=True)
    s.add_argument("--n-min", type=int, default=None)
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--c-policy", type=str, default="all",
                   choices=("all", "sample"),
                   help="'all' falls back to a seeded sample above q = 1024")
    s.add_argument("--sample", type=int, default=64)
    s.add_argument("--timings", action="store_true",
                   help="keep real per-record timings in exports "
                        "(breaks byte-for-byte determinism)")
    s.set_defaults(fn=cmd_verify)

    s = subs.add_parser("dickson", help="Dickson polynomial values and fibers")
    _common_flags(s)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--x", type=str, default=None)
    s.set_defaults(fn=cmd_dickson)

    s = subs.add_parser("gold-roots", help="root-count distribution of "
                                           "z^(2^k+1) + z + beta")
    _common_flags(s)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(fn=cmd_gold_roots)

    s = subs.add_parser("jacobsthal", help="quadratic character sum")
    _common_flags(s)
    s.add_argument("--a2", type=str, required=True)
    s.add_argument("--a1", type=str, required=True)
    s.add_argument("--a0", type=str, required=True)
    s.set_defaults(fn=cmd_jacobsthal)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FieldError, FamilyError, BudgetError, ValueError) as exc:
        print(f"cdelta: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
