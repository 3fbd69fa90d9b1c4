"""Command-line front end: ``agrec <subcommand> [flags]``.

Exit status: 0 success, 1 domain error or failed verification, 2 usage or
parse error, 3 internal-consistency failure (two exact paths disagreed).

Numbers are written ``p/q`` or as integers.  Periodic banks are given as
``--banks "a,d,r;a,d,r;..."`` or ``--banks-file FILE`` with one ``a,d,r``
triple per line and ``#`` comments.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import analysis, bench, catalog, engines, periodic, progressions, reducer
from .errors import (
    DomainError,
    ExtractionError,
    InternalConsistencyError,
    ParseError,
)
from .numerics import format_rat, parse_rat
from .reducer import AgpParams


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def _pos(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _int_list(text: str) -> list[int]:
    return [_pos(s) for s in text.split(",") if s.strip()]


def _records(xs):
    return [{"n": i, "value": format_rat(v)} for i, v in enumerate(xs)]


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _add_params(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("recurrence parameters (or --name)")
    g.add_argument("--name", choices=catalog.catalog_names(), help="use a catalog entry")
    for flag in ("a", "d", "r", "x0"):
        g.add_argument(f"--{flag}", type=_rat)


def _params(args, parser) -> AgpParams:
    if args.name:
        base = catalog.catalog_get(args.name).params
        values = {k: getattr(args, k) if getattr(args, k) is not None else getattr(base, k)
                  for k in ("a", "d", "r", "x0")}
        return AgpParams(**values)
    missing = [k for k in ("a", "d", "r", "x0") if getattr(args, k) is None]
    if missing:
        parser.error("missing " + ", ".join(f"--{k}" for k in missing) + " (or give --name)")
    return AgpParams(args.a, args.d, args.r, args.x0)


def cmd_compute(args, parser) -> int:
    p = _params(args, parser)
    if args.engine == "all":
        report = engines.cross_check(p, args.n)
        xs = report.terms[engines.REFERENCE]
        if args.format == "json":
            _emit_json({
                "params": {k: format_rat(getattr(p, k)) for k in ("a", "d", "r", "x0")},
                "engine": "all",
                "agreement": report.agreement,
                "first_divergence": report.first_divergence,
                "terms": _records(xs),
            })
        else:
            for i, v in enumerate(xs):
                print(f"x_{i} = {v}")
            if report.agreement:
                print(f"agreement: all {len(report.terms)} engines agree exactly on x_0..x_{args.n}")
            else:
                print(f"DISAGREEMENT at position {report.first_divergence}: "
                      f"{', '.join(report.disagreeing)}")
        return 0 if report.agreement else 3
    xs = engines.ENGINES[args.engine](p, args.n)
    if args.format == "json":
        _emit_json({"engine": args.engine, "terms": _records(xs)})
    else:
        for i, v in enumerate(xs):
            print(f"x_{i} = {v}")
    return 0


def cmd_reduce(args, parser) -> int:
    p = _params(args, parser)
    s = reducer.reduce(p)
    eig = reducer.eigenvalues(s)
    rows = {
        "P": format_rat(s.P), "Q": format_rat(s.Q), "B": format_rat(s.B),
        "x1": format_rat(s.x1), "x2": format_rat(s.x2), "delta": format_rat(eig.delta),
        "lambda1": str(eig.lambda1), "lambda2": str(eig.lambda2), "class": eig.kind.value,
    }
    if eig.delta != 0:
        rows["lambda1_simplified"] = str(eig.lambda1.simplified())
        rows["lambda2_simplified"] = str(eig.lambda2.simplified())
    if args.format == "json":
        _emit_json(rows)
    else:
        for k, v in rows.items():
            print(f"{k} = {v}")
    return 0


def cmd_identify(args, parser) -> int:
    p = reducer.identify(args.P, args.Q, args.x1, args.x2, args.r)
    if args.format == "json":
        _emit_json({k: format_rat(getattr(p, k)) for k in ("a", "d", "r", "x0")})
    else:
        print(f"a={p.a} d={p.d} x0={p.x0}")
    return 0


def cmd_sum(args, parser) -> int:
    spec = progressions.ProgressionSpec(args.kind, args.a, args.d, args.r)
    summary = spec.summary(args.n)
    label = "last term" if spec.kind in (progressions.Kind.REC1, progressions.Kind.REC2) else "sum"
    if args.format == "json":
        _emit_json({
            "kind": spec.kind.value,
            "terms": [format_rat(t) for t in summary.terms],
            f"direct_{label.replace(' ', '_')}": format_rat(summary.direct),
            "closed_form": format_rat(summary.closed),
            "consistent": summary.consistent,
        })
    else:
        print("terms: " + ", ".join(map(str, summary.terms)))
        print(f"direct {label}: {summary.direct}")
        print(f"closed form: {summary.closed}")
        if not summary.consistent:
            print("MISMATCH between closed form and direct computation")
    if args.limit:
        if spec.kind is progressions.Kind.AGP:
            lim = progressions.agp_sum_limit(spec.a, spec.d, spec.r)
        elif spec.kind is progressions.Kind.GEOMETRIC:
            lim = progressions.geo_limit(spec.a, spec.r)
        else:
            raise DomainError(f"no series limit for kind {spec.kind.value}")
        print(f"limit: {lim}")
    return 0 if summary.consistent else 3


def cmd_catalog(args, parser) -> int:
    if args.name is None:
        entries = [catalog.catalog_get(n) for n in catalog.catalog_names()]
        if args.format == "json":
            _emit_json([
                {"name": e.name, "a": format_rat(e.params.a), "d": format_rat(e.params.d),
                 "r": format_rat(e.params.r), "x0": format_rat(e.params.x0),
                 "index_map": e.index_map}
                for e in entries
            ])
        else:
            for e in entries:
                print(f"{e.name:<15} {e.params}   {e.index_map}")
        return 0
    e = catalog.catalog_get(args.name)
    classical = catalog.classical_values(e.name, args.count)
    xs = engines.eval_convolution(e.params, args.count)[1:]
    if args.format == "json":
        _emit_json({"name": e.name, "index_map": e.index_map,
                    "params": {k: format_rat(getattr(e.params, k)) for k in ("a", "d", "r", "x0")},
                    "classical": [format_rat(v) for v in classical],
                    "agp": [format_rat(v) for v in xs], "match": xs == classical})
    else:
        print(f"{e.name}: {e.params}   {e.index_map}")
        print("classical: " + ", ".join(map(str, classical)))
        print("agp x_1..: " + ", ".join(map(str, xs)))
        print("match" if xs == classical else "MISMATCH")
    return 0 if xs == classical else 1


def _random_rat(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def verify_suite(n: int = 60, samples: int = 50, seed: int = 0):
    """Yield ``(label, ok)`` for each check; used by ``agrec verify``."""
    rng = random.Random(seed)
    params = [catalog.catalog_get(name).params for name in catalog.catalog_names()]
    params += [AgpParams(*(_random_rat(rng) for _ in range(4))) for _ in range(samples)]
    params += [AgpParams(8, Fraction(16, 3), -3, Fraction(1, 8)),  # repeated root
               AgpParams(2, 1, 0, 1), AgpParams(3, 0, 2, 1), AgpParams(0, 0, 5, 1)]
    engine_ok = all(engines.cross_check(p, n).agreement for p in params)
    yield f"engines agree on {len(params)} parameter sets, n={n}", engine_ok

    ok = True
    for p in params:
        s = reducer.reduce(p)
        ok &= reducer.discriminant(s) == p.a ** 2 + 4 * p.d * p.r
    yield "discriminant identity P^2+4Q = a^2+4dr", ok

    ok = True
    for p in params:
        if p.r == 0 or (p.a == 0 and reducer.reduce(p).B == 0):
            continue
        s = reducer.reduce(p)
        ok &= reducer.identify(s.P, s.Q, s.x1, s.x2, p.r) == p
    yield "identify(reduce(p)) round trip", ok

    ok = True
    for p in params[: 10 + samples // 5]:
        k = rng.randint(0, 40)
        ok &= progressions.agp_sum(p.a, p.d, p.r, k) == sum(
            (progressions.agp_term(p.a, p.d, p.r, j) for j in range(k + 1)), Fraction(0))
        ok &= progressions.gap_sum(p.a, p.r, p.d, k + 1) == sum(
            (progressions.gap_term(p.a, p.r, p.d, j) for j in range(k + 1)), Fraction(0))
    yield "agp_sum and gap_sum equal direct summation", ok

    ok = True
    for name in catalog.catalog_names():
        e = catalog.catalog_get(name)
        ok &= engines.eval_convolution(e.params, 30)[1:] == catalog.classical_values(name, 30)
    yield "catalog entries match classical definitions", ok


def cmd_verify(args, parser) -> int:
    failed = 0
    for label, ok in verify_suite(args.n, args.samples, args.seed):
        print(f"[{'PASS' if ok else 'FAIL'}] {label}")
        failed += not ok
    return 1 if failed else 0


def cmd_analyze(args, parser) -> int:
    p = _params(args, parser)
    limit = analysis.ratio_limit(p, args.rho)
    emp = analysis.empirical_ratio(p, args.rho, args.n)
    diff = abs(emp - float(limit))
    print(f"lambda1^{args.rho} (exact) = {limit.simplified()}")
    print(f"lambda1^{args.rho} (float) = {float(limit)!r}")
    print(f"x_{args.n + args.rho}/x_{args.n} (float) = {emp!r}")
    print(f"|difference| (float) = {diff:.3e}  {'within' if diff <= args.tol else 'OUTSIDE'} tol {args.tol:g}")
    return 0


def cmd_errata(args, parser) -> int:
    findings = analysis.erratum_report()
    if args.format == "json":
        _emit_json([f.as_record() for f in findings])
        return 0
    for f in findings:
        print(f"[{f.verdict.value}] {f.claim_location}")
        print(f"    printed: {f.printed_form} -> {f.printed_value}")
        print(f"    derived: {f.derived_form} -> {f.derived_value}")
        print(f"    oracle (direct convolution): {f.oracle_value}")
        print("    witness: " + ", ".join(f"{k}={v}" for k, v in f.witness.items()))
        if f.note:
            print(f"    note: {f.note}")
    return 0


def cmd_periodic(args, parser) -> int:
    if (args.banks is None) == (args.banks_file is None):
        parser.error("give exactly one of --banks or --banks-file")
    try:
        banks = (periodic.parse_banks(args.banks) if args.banks is not None
                 else periodic.read_banks_file(args.banks_file))
    except (ParseError, ValueError) as exc:
        parser.error(str(exc))
    p = periodic.PeriodicParams(tuple(banks), args.x0)
    xs = periodic.eval_periodic(p, args.n)
    growth = None
    if args.n >= 2 * p.period:
        growth = periodic.empirical_growth(p, args.n, args.tol)
    if args.format == "json":
        out = {"period": p.period, "nondegenerate": p.nondegenerate(), "terms": _records(xs)}
        if growth is not None:
            out["growth"] = {
                "step_ratios": growth.step_ratios,
                "period_ratio": growth.period_ratio,
                "previous_period_ratio": growth.previous_period_ratio,
                "stabilized": growth.stabilized,
                "tolerance": growth.tolerance,
            }
        _emit_json(out)
        return 0
    for i, v in enumerate(xs):
        print(f"x_{i} = {v}")
    if growth is not None:
        print("step ratios (float): " + ", ".join(f"{v:.12g}" for v in growth.step_ratios))
        print(f"{p.period}-step ratio (float): {growth.period_ratio:.15g}")
        print(f"stabilized within {growth.tolerance:g}: {growth.stabilized}")
    return 0


def cmd_bench(args, parser) -> int:
    p = _params(args, parser) if (args.name or args.a is not None) else catalog.catalog_get("even-fibonacci").params
    names = args.engines.split(",") if args.engines else list(engines.ENGINES)
    unknown = [n for n in names if n not in engines.ENGINES]
    if unknown:
        parser.error(f"unknown engine(s): {', '.join(unknown)}")
    text = bench.to_csv(bench.run_bench(p, args.sizes, names, args.repeat))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agrec", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compute", help="evaluate x_0..x_n")
    _add_params(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--engine", choices=(*engines.ENGINES, "all"), default="conv")
    fmt(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("reduce", help="second-order form and eigenstructure")
    _add_params(p)
    fmt(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("identify", help="recover (a, d, x0) from a second-order recurrence")
    for flag in ("P", "Q", "x1", "x2", "r"):
        p.add_argument(f"--{flag}", type=_rat, required=True)
    fmt(p)
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("sum", help="progression terms with closed-form check")
    p.add_argument("--kind", choices=[k.value for k in progressions.Kind], required=True)
    p.add_argument("--a", type=_rat, required=True)
    p.add_argument("--d", type=_rat, default=Fraction(0))
    p.add_argument("--r", type=_rat, default=Fraction(1))
    p.add_argument("--n", type=_pos, required=True)
    p.add_argument("--limit", action="store_true", help="also print the series limit")
    fmt(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("catalog", help="list or expand named sequences")
    p.add_argument("--name", choices=catalog.catalog_names())
    p.add_argument("--count", type=_pos, default=10)
    fmt(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="cross-check engines and identities")
    p.add_argument("--n", type=_nonneg, default=60)
    p.add_argument("--samples", type=_nonneg, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="ratio limit versus empirical ratio")
    _add_params(p)
    p.add_argument("--rho", type=_pos, default=1)
    p.add_argument("--n", type=_pos, default=40)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("errata", help="check printed formulas against the oracle")
    fmt(p)
    p.set_defaults(func=cmd_errata)

    p = sub.add_parser("periodic", help="rotating-bank variant")
    p.add_argument("--banks")
    p.add_argument("--banks-file")
    p.add_argument("--x0", type=_rat, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    fmt(p)
    p.set_defaults(func=cmd_periodic)

    p = sub.add_parser("bench", help="time engines, CSV output")
    _add_params(p)
    p.add_argument("--sizes", type=_int_list, default=list(bench.DEFAULT_SIZES))
    p.add_argument("--engines", help="comma-separated engine names")
    p.add_argument("--repeat", type=_pos, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (InternalConsistencyError, ExtractionError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
