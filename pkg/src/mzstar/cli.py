"""Command-line surface: exact evaluation, sum families, cross-checks,
benchmarks, the numerical oracle, and table dumps.

Exit codes: 0 success, 2 parse or usage error, 3 unsupported family,
4 crosscheck mismatch, 5 numeric precondition failure.

Every subcommand takes --json for machine output: UTF-8, one object or
array per invocation, a top-level "schema": 1, and big integers rendered
as decimal strings so consumers without bignums survive.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from typing import Optional

from .bell import bell_plain, bell_tail
from .cyclotomic import t7_plain, t7_tail
from .exact_core import PiValue, bernoulli, bernoulli_table
from .index_parser import (
    Classification,
    IndexSyntaxError,
    classify,
    parse_index,
    render_index,
)
from .mzsv_eval import (
    bowman_bradley_Z,
    muneta_zeta_star_31,
    yamamoto_Zstar,
    zeta_2_pow,
    zeta_31_pow,
    zeta_star_2_pow,
    zeta_star_31_pow,
    zeta_star_31_pow_2,
    zstar,
    zstar0,
    zstar1,
)
from .oracle import (
    DivergentIndexError,
    NumericConfig,
    decimal_str,
    default_precision_bits,
    mzsv_num,
)
from .series import (
    series_mul,
    series_reciprocal,
    series_sin_norm,
    series_sinh_norm,
    series_tanh_cot,
    zeta_star_4_series,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_MISMATCH = 4
EXIT_NUMERIC = 5

SCHEMA = 1


class UnsupportedFamily(Exception):
    pass


def _fail(message: str, code: int) -> int:
    print("error: %s" % message, file=sys.stderr)
    return code


def _make_config(prec: Optional[int], K: Optional[int] = None) -> NumericConfig:
    return NumericConfig(
        precision_bits=prec if prec is not None else default_precision_bits(),
        truncation_K=K if K is not None else 10000,
    )


def _exact_payload(index_text: str, family: str, pv: PiValue,
                   formula: str, config: NumericConfig) -> dict:
    c = pv.coeff
    return {
        "schema": SCHEMA,
        "index": index_text,
        "family": family,
        "pi_power": pv.pi_power,
        "numerator": str(c.numerator),
        "denominator": str(c.denominator),
        "decimal": decimal_str(pv, config),
        "formula": formula,
    }


def _print_exact(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
        return
    pretty = payload["numerator"]
    if payload["denominator"] != "1":
        pretty += "/" + payload["denominator"]
    if payload["pi_power"]:
        pretty += " * pi^%d" % payload["pi_power"]
    for key, val in (("index", payload["index"]),
                     ("family", payload["family"]),
                     ("formula", payload["formula"]),
                     ("exact", pretty),
                     ("decimal", payload["decimal"])):
        print("%s: %s" % (key, val))


# eval routing: family x (star, --formula) -> evaluator. The default picks
# the cheapest route; --formula forces an alternative so outputs can be
# compared across independent derivations.

def _route_eval(cls: Classification, formula: Optional[str], star: bool):
    fam = cls.family
    if fam == "twos":
        if formula:
            raise UnsupportedFamily(
                "--formula does not apply to all-twos indices")
        if star:
            return zeta_star_2_pow(cls.d), "zeta_star_2_pow"
        return zeta_2_pow(cls.d), "zeta_2_pow"
    if fam == "31":
        if not star:
            return zeta_31_pow(cls.d), "zeta_31_pow"
        if formula is None or formula == "t4":
            return zeta_star_31_pow(cls.d), "zeta_star_31_pow"
        if formula == "muneta":
            return muneta_zeta_star_31(cls.d), "muneta_zeta_star_31"
        if formula == "t7":
            return t7_plain(cls.d, 0), "t7_plain"
        return bell_plain(cls.d, 1), "bell_plain"
    if fam == "31_2":
        if not star:
            raise UnsupportedFamily(
                "no non-star closed form for (3,1)-pairs with a trailing 2; "
                "use `mzstar oracle`")
        if formula is None or formula == "t4":
            return zeta_star_31_pow_2(cls.d), "zeta_star_31_pow_2"
        if formula == "t7":
            return t7_tail(cls.d, 0), "t7_tail"
        if formula == "bell":
            return bell_tail(cls.d, 1), "bell_tail"
        raise UnsupportedFamily("the muneta route covers only {3,1}^d")
    if fam == "2321":
        if not star:
            raise UnsupportedFamily(
                "no non-star closed form for mixed-twos blocks; "
                "use `mzstar oracle`")
        if formula is None or formula == "bell":
            return bell_plain(cls.d, cls.m + 1), "bell_plain"
        if formula == "t7":
            return t7_plain(cls.d, cls.m), "t7_plain"
        raise UnsupportedFamily(
            "formula %r does not cover mixed-twos blocks" % formula)
    if fam == "2321_tail":
        if not star:
            raise UnsupportedFamily(
                "no non-star closed form for mixed-twos blocks; "
                "use `mzstar oracle`")
        if formula is None or formula == "bell":
            return bell_tail(cls.d, cls.m + 1), "bell_tail"
        if formula == "t7":
            return t7_tail(cls.d, cls.m), "t7_tail"
        raise UnsupportedFamily(
            "formula %r does not cover mixed-twos blocks" % formula)
    raise UnsupportedFamily(
        "no closed form for this index; try `mzstar oracle`")


def cmd_eval(args) -> int:
    try:
        entries = parse_index(args.index)
    except IndexSyntaxError as exc:
        return _fail(str(exc), EXIT_USAGE)
    if args.formula and args.nostar:
        return _fail("--formula selects star-value routes; drop --nostar",
                     EXIT_USAGE)
    cls = classify(entries)
    try:
        pv, formula = _route_eval(cls, args.formula, not args.nostar)
    except UnsupportedFamily as exc:
        return _fail(str(exc), EXIT_UNSUPPORTED)
    try:
        config = _make_config(args.prec)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    payload = _exact_payload(render_index(entries), cls.family, pv,
                             formula, config)
    _print_exact(payload, args.json)
    return EXIT_OK


def cmd_sum(args) -> int:
    if args.d < 0 or args.n < 0:
        return _fail("--d and --n must be >= 0", EXIT_USAGE)
    if args.nostar and args.kind != "Z":
        return _fail("--nostar applies only to kind Z", EXIT_USAGE)
    try:
        config = _make_config(args.prec)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    label = "%s(d=%d,n=%d)" % (args.kind, args.d, args.n)
    if args.nostar:
        pv, formula, family = bowman_bradley_Z(args.d, args.n), \
            "bowman_bradley_Z", "sum"
    elif args.d == 0:
        print("notice: d=0 collapses every kind to the all-twos star value; "
              "reporting zeta_star_2_pow(%d)" % args.n, file=sys.stderr)
        pv, formula, family = zeta_star_2_pow(args.n), \
            "zeta_star_2_pow", "twos"
    elif args.kind == "Z":
        pv, formula, family = zstar(args.d, args.n), "zstar", "sum"
    elif args.kind == "Z0":
        pv, formula, family = zstar0(args.d, args.n), "zstar0", "sum"
    else:
        pv, formula, family = zstar1(args.d, args.n), "zstar1", "sum"
    _print_exact(_exact_payload(label, family, pv, formula, config),
                 args.json)
    return EXIT_OK


# crosscheck suites: each yields (params, lhs, rhs) with both sides exact,
# compared for identity. Dual routes stay dual on purpose.

def _suite_t4_muneta(max_d, max_n, max_m):
    for d in range(max_d + 1):
        yield {"d": d}, zeta_star_31_pow(d), muneta_zeta_star_31(d)


def _suite_t11_yamamoto(max_d, max_n, max_m):
    for d in range(1, max_d + 1):
        for n in range(max_n + 1):
            yield {"d": d, "n": n}, zstar(d, n), yamamoto_Zstar(d, n)


def _suite_t7_bell(max_d, max_n, max_m):
    for d in range(1, max_d + 1):
        for m in range(max_m + 1):
            yield ({"d": d, "m": m, "part": "plain"},
                   t7_plain(d, m), bell_plain(d, m + 1))
            yield ({"d": d, "m": m, "part": "tail"},
                   t7_tail(d, m), bell_tail(d, m + 1))


def _suite_eq08(max_d, max_n, max_m):
    for d in range(1, max_d + 1):
        for n in range(max_n + 1):
            yield ({"d": d, "n": n}, zstar(d, n),
                   zstar0(d, n) + zstar1(d, n))


def _suite_in4(max_d, max_n, max_m):
    for d in range(max_d + 1):
        acc = zeta_31_pow(0) * zeta_star_4_series(d)
        for j in range(1, d + 1):
            acc = acc + zeta_31_pow(j) * zeta_star_4_series(d - j)
        yield {"d": d}, zeta_star_31_pow(d), acc


def _suite_t3_series(max_d, max_n, max_m):
    prod = series_tanh_cot(4 * max_d + 2)
    for d in range(max_d + 1):
        yield ({"d": d, "coefficient": 4 * d},
               PiValue(prod.coeff(4 * d), 4 * d), zeta_star_31_pow(d))
        yield ({"d": d, "coefficient": 4 * d + 2},
               PiValue(-prod.coeff(4 * d + 2), 4 * d + 2),
               zeta_star_31_pow_2(d))


_SUITES = {
    "t4-muneta": (_suite_t4_muneta, {"max_d": 25}),
    "t11-yamamoto": (_suite_t11_yamamoto, {"max_d": 4, "max_n": 4}),
    "t7-bell": (_suite_t7_bell, {"max_d": 2, "max_m": 2}),
    "eq08": (_suite_eq08, {"max_d": 4, "max_n": 4}),
    "in4": (_suite_in4, {"max_d": 8}),
    "t3-series": (_suite_t3_series, {"max_d": 8}),
}


def cmd_crosscheck(args) -> int:
    suite_fn, defaults = _SUITES[args.suite]
    bounds = {
        "max_d": args.max_d if args.max_d is not None
        else defaults.get("max_d", 4),
        "max_n": args.max_n if args.max_n is not None
        else defaults.get("max_n", 4),
        "max_m": args.max_m if args.max_m is not None
        else defaults.get("max_m", 2),
    }
    cases = []
    mismatches = []
    for params, lhs, rhs in suite_fn(**bounds):
        equal = lhs == rhs
        case = dict(params)
        case["equal"] = equal
        if not equal:
            case["lhs"] = str(lhs)
            case["rhs"] = str(rhs)
            mismatches.append(case)
        cases.append(case)
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "suite": args.suite,
            "bounds": bounds,
            "cases": cases,
            "mismatch_count": len(mismatches),
        }))
    else:
        for case in cases:
            params = " ".join("%s=%s" % (k, v) for k, v in case.items()
                              if k not in ("equal", "lhs", "rhs"))
            if case["equal"]:
                print("ok       %s" % params)
            else:
                print("MISMATCH %s: %s != %s"
                      % (params, case["lhs"], case["rhs"]))
        print("%s: %d case(s), %d mismatch(es)"
              % (args.suite, len(cases), len(mismatches)))
    return EXIT_MISMATCH if mismatches else EXIT_OK


_BENCH_FNS = {"t4": zeta_star_31_pow, "muneta": muneta_zeta_star_31}


def run_bench(formulas, ds, repeat: int, warmup: bool = True) -> list:
    """Time the star evaluators with the Bernoulli table pre-built.

    The table is grown once, outside the timed region, so the timings
    reflect the formulas alone and not shared-cache construction.
    """
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    ds = sorted(set(ds))
    bernoulli_table().ensure(4 * max(ds) + 2)
    rows = []
    for formula in formulas:
        fn = _BENCH_FNS[formula]
        for d in ds:
            if warmup:
                fn(d)
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                fn(d)
                times.append(time.perf_counter() - t0)
            rows.append({
                "formula": formula,
                "d": d,
                "repeat": repeat,
                "mean": statistics.fmean(times),
                "stddev": statistics.stdev(times) if repeat > 1 else 0.0,
            })
    return rows


def cmd_bench(args) -> int:
    if args.repeat < 1:
        return _fail("--repeat must be >= 1", EXIT_USAGE)
    ds = args.d or [64, 128, 256]
    if any(d < 0 for d in ds):
        return _fail("--d must be >= 0", EXIT_USAGE)
    formulas = args.formula or ["t4"]
    rows = run_bench(formulas, ds, args.repeat, warmup=not args.no_warmup)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "rows": rows}))
    else:
        for row in rows:
            print("%-7s d=%-6d mean %.6fs  stddev %.6fs  (n=%d)"
                  % (row["formula"], row["d"], row["mean"],
                     row["stddev"], row["repeat"]))
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        entries = parse_index(args.index)
    except IndexSyntaxError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        config = _make_config(args.prec, args.K)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        result = mzsv_num(entries, star=not args.nostar, config=config)
    except DivergentIndexError as exc:
        return _fail(str(exc), EXIT_NUMERIC)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    from mpmath import mp
    digits = max(6, min(24, int(config.precision_bits * 0.30103) - 2))
    value = mp.nstr(result.value, digits, strip_zeros=False)
    tail = mp.nstr(result.tail_estimate, 3)
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "index": render_index(entries),
            "star": not args.nostar,
            "K": config.truncation_K,
            "precision_bits": config.precision_bits,
            "value": value,
            "tail_estimate": tail,
        }))
    else:
        print("index: %s" % render_index(entries))
        print("value: %s" % value)
        print("tail_estimate: %s" % tail)
    return EXIT_OK


def cmd_bernoulli(args) -> int:
    if args.max < 0:
        return _fail("--max must be >= 0", EXIT_USAGE)
    rows = []
    for k in range(args.max + 1):
        b = bernoulli(k)
        rows.append({"k": k, "numerator": str(b.numerator),
                     "denominator": str(b.denominator)})
    if args.json:
        print(json.dumps({"schema": SCHEMA, "rows": rows}))
    else:
        for row in rows:
            print("B_%d = %s/%s"
                  % (row["k"], row["numerator"], row["denominator"]))
    return EXIT_OK


def _series_table(name: str, terms: int):
    if name == "tanhcot":
        return series_tanh_cot(terms)
    if name == "zstar2":
        return series_reciprocal(series_sin_norm(terms))
    s = series_mul(series_sin_norm(terms), series_sinh_norm(terms))
    return series_reciprocal(s)


def cmd_series(args) -> int:
    if args.terms < 0:
        return _fail("--terms must be >= 0", EXIT_USAGE)
    table = _series_table(args.name, args.terms)
    coefficients = []
    for n in range(args.terms + 1):
        q = table.coeff(n)
        coefficients.append({"n": n, "numerator": str(q.numerator),
                             "denominator": str(q.denominator)})
    if args.json:
        print(json.dumps({
            "schema": SCHEMA,
            "series": args.name,
            "grading": "the z^n coefficient carries an implicit pi^n factor",
            "coefficients": coefficients,
        }))
    else:
        for row in coefficients:
            print("q_%d = %s/%s"
                  % (row["n"], row["numerator"], row["denominator"]))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzstar",
        description="Exact multiple zeta star values on 3-2-1 indices, "
                    "with cross-checks and a numerical oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one index exactly")
    p.add_argument("index", help='e.g. "{3,1}^2" or "3,1,2"')
    p.add_argument("--nostar", action="store_true",
                   help="strict-chain value instead of the star value")
    p.add_argument("--formula", choices=("t4", "muneta", "t7", "bell"),
                   help="force a specific closed-form route")
    p.add_argument("--prec", type=int,
                   help="precision bits for the decimal field")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sum", help="evaluate a (3,1)/twos sum family")
    p.add_argument("kind", choices=("Z", "Z0", "Z1"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nostar", action="store_true",
                   help="strict-chain sum (kind Z only)")
    p.add_argument("--prec", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("crosscheck",
                       help="compare independent formulas exactly")
    p.add_argument("suite", choices=tuple(_SUITES))
    p.add_argument("--max-d", type=int, dest="max_d")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--max-m", type=int, dest="max_m")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("bench", help="time the {3,1}^d star evaluators")
    p.add_argument("--formula", action="append",
                   choices=tuple(_BENCH_FNS))
    p.add_argument("--d", type=int, action="append")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--no-warmup", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force numerical evaluation")
    p.add_argument("index")
    p.add_argument("--nostar", action="store_true")
    p.add_argument("--K", type=int, default=10000,
                   help="truncation point of the outer sum")
    p.add_argument("--prec", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bernoulli", help="dump Bernoulli numbers")
    p.add_argument("--max", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("series", help="dump generating-function coefficients")
    p.add_argument("name", choices=("tanhcot", "zstar2", "zstar4"))
    p.add_argument("--terms", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
