"""Batch command-line front end.

Subcommands: count, distribution, guess, verify, growth, kernel-check.
Output formats: text (default), json (schema permclass/1), csv where a
table is natural.  All output is deterministic for a given invocation.

Exit codes: 0 success; 2 usage or parse error (argparse); 3 oracle/
functional-equation mismatch; 4 node budget exhausted; 5 verification
failed; 6 internal consistency failure; 7 no polynomial found.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import algebraic, class_a, class_b, fixtures, oracle, perms
from .polynomials import MultivariatePolynomial
from .series import UnivariateSeries

SCHEMA = "permclass/1"

EXIT_MISMATCH = 3
EXIT_BUDGET = 4
EXIT_VERIFY_FAILED = 5
EXIT_INCONSISTENT = 6
EXIT_NO_GUESS = 7

_CLASSES = {
    "class_a": (perms.CLASS_A_BASIS, class_a),
    "class_b": (perms.CLASS_B_BASIS, class_b),
}

_FE_STATS = {"class_a": "initial_decreasing_run",
             "class_b": "marked_trailing_run"}

_FIXTURES = {
    "eq5": fixtures.eq5_min_poly,
    "eq6": fixtures.eq6_min_poly,
    "degree8": fixtures.degree8_min_poly,
    "growth_quartic": fixtures.growth_quartic,
    "kernel_k": fixtures.kernel_k,
    "kernel_m1": fixtures.kernel_m1,
    "kernel_m2": fixtures.kernel_m2,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(dict(schema=SCHEMA, **payload), sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _fe_counts(class_id: str, n: int) -> list[int]:
    _, mod = _CLASSES[class_id]
    return mod.counts(mod.iterate(n))


def _series_for(class_id: str, source: str, order: int) -> UnivariateSeries:
    _, mod = _CLASSES[class_id]
    state = mod.iterate(order)
    if source == "f1":
        return state.f.subst_t(1)
    if source == "fskew_at_f1":
        if class_id != "class_a":
            raise CliError("fskew_at_f1 only exists for class_a", 2)
        return class_a.fskew_at_f1(state)
    raise CliError("unknown series source %r" % source, 2)


def cmd_count(args) -> int:
    class_id = args.class_id
    basis, _ = _CLASSES[class_id]
    rows = []
    oracle_counts = fe = None
    if args.method in ("oracle", "both"):
        rep = oracle.enumerate_avoiders(basis, args.n,
                                        node_budget=args.node_budget)
        oracle_counts = rep.counts
    if args.method in ("functional_equation", "both"):
        fe = _fe_counts(class_id, args.n)
    status = "ok"
    for n in range(args.n + 1):
        row = {"n": n}
        if oracle_counts is not None:
            row["oracle"] = oracle_counts[n]
        if fe is not None:
            row["functional_equation"] = fe[n]
        if oracle_counts is not None and fe is not None:
            row["match"] = oracle_counts[n] == fe[n]
            if not row["match"]:
                status = "mismatch"
        rows.append(row)
    lines = []
    for row in rows:
        if args.method == "both":
            lines.append("%d\t%d\t%d\t%s" % (
                row["n"], row["oracle"], row["functional_equation"],
                "MATCH" if row["match"] else "MISMATCH"))
        else:
            lines.append("%d\t%d" % (
                row["n"], row.get("oracle", row.get("functional_equation"))))
    if args.format == "csv":
        header = ["n"] + [k for k in ("oracle", "functional_equation",
                                      "match") if k in rows[0]]
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[k]).lower()
                           if isinstance(row[k], bool) else str(row[k])
                           for k in header))
    else:
        _emit(args, {"command": "count", "class": class_id,
                     "method": args.method, "status": status, "rows": rows},
              lines)
    return 0 if status == "ok" else EXIT_MISMATCH


def cmd_distribution(args) -> int:
    class_id = args.class_id
    basis, _ = _CLASSES[class_id]
    stat = args.stat or _FE_STATS[class_id]
    rep = oracle.statistic_distribution(basis, args.n, stat,
                                        node_budget=args.node_budget)
    if args.format == "csv":
        sys.stdout.write(rep.serialize_distribution(stat))
        return 0
    rows = []
    for n, row in enumerate(rep.distributions[stat]):
        for k, c in enumerate(row):
            if c:
                rows.append({"n": n, "k": k, "count": c})
    _emit(args, {"command": "distribution", "class": class_id,
                 "statistic": stat, "rows": rows},
          ["%d,%d,%d" % (r["n"], r["k"], r["count"]) for r in rows])
    return 0


def cmd_guess(args) -> int:
    series = _series_for(args.class_id, args.series, args.terms)
    guess = algebraic.guess_min_poly(series, args.dy, args.dz)
    if guess is None:
        _emit(args, {"command": "guess", "status": "no_polynomial_found"},
              ["no polynomial found"])
        return EXIT_NO_GUESS
    residual = algebraic.verify_annihilation(
        guess.poly, {"z": UnivariateSeries.z(series.order), "y": series},
        series.order)
    _emit(args, {"command": "guess", "class": args.class_id,
                 "polynomial": guess.poly.serialize(),
                 "dy": guess.dy, "dz": guess.dz,
                 "margin": guess.confidence_margin,
                 "residual_order": residual},
          ["polynomial: %s" % guess.poly,
           "term list: %s" % guess.poly.serialize(),
           "degrees: y %d, z %d" % (guess.dy, guess.dz),
           "margin: %d" % guess.confidence_margin,
           "verification residual order: %d" % residual])
    return 0


def _load_verify_poly(args) -> MultivariatePolynomial:
    if args.fixture:
        if args.fixture not in _FIXTURES:
            raise CliError("unknown fixture %r (choose from %s)"
                           % (args.fixture, ", ".join(sorted(_FIXTURES))), 2)
        return _FIXTURES[args.fixture]()
    try:
        with open(args.poly) as fh:
            body = fh.read()
        header, term_list = body.split("\n", 1)
        if not header.startswith("vars: "):
            raise ValueError("missing 'vars:' header")
        return MultivariatePolynomial.parse(
            term_list, tuple(header[len("vars: "):].split()))
    except (OSError, ValueError, IndexError) as exc:
        raise CliError("cannot parse polynomial file: %s" % exc, 2)


def cmd_verify(args) -> int:
    poly = _load_verify_poly(args)
    series = _series_for(args.class_id, args.series, args.order)
    residual = algebraic.verify_annihilation(
        poly, {"z": UnivariateSeries.z(args.order), "y": series}, args.order)
    passed = residual > args.order
    _emit(args, {"command": "verify", "class": args.class_id,
                 "order": args.order, "residual_order": residual,
                 "status": "pass" if passed else "fail"},
          ["residual order: %d" % residual,
           "verification: %s" % ("PASS" if passed else "FAIL")])
    return 0 if passed else EXIT_VERIFY_FAILED


def cmd_growth(args) -> int:
    class_id = args.class_id
    counts = _fe_counts(class_id, args.terms)
    ratio = algebraic.growth_estimate(counts, "ratio")
    extrapolated = algebraic.growth_estimate(counts, "extrapolated")
    payload = {"command": "growth", "class": class_id,
               "terms": args.terms, "ratio": ratio,
               "extrapolated": extrapolated}
    lines = ["ratio estimate: %.6f" % ratio,
             "extrapolated estimate: %.6f" % extrapolated]
    if class_id == "class_a":
        minpoly = fixtures.eq5_min_poly()
        candidates = algebraic.growth_exact(minpoly)
        growth = algebraic.reported_growth(minpoly, counts)
        payload.update(candidates=candidates, exact_growth=growth,
                       note="singularity 5/32, growth 32/5")
        lines += ["singularity candidates: %s"
                  % ", ".join("%.9f" % c for c in candidates),
                  "exact growth: %.6f (32/5 at singularity 5/32)" % growth]
    else:
        roots = algebraic.growth_exact(fixtures.growth_quartic())
        best = min(roots, key=lambda r: abs(r - extrapolated))
        payload.update(quartic_roots=roots, exact_growth=best)
        lines += ["growth quartic roots: %s"
                  % ", ".join("%.9f" % r for r in roots),
                  "exact growth: %.6f (root of the quartic)" % best]
    _emit(args, payload, lines)
    return 0


def cmd_kernel_check(args) -> int:
    state = class_b.iterate(args.order)
    report = algebraic.kernel_root_check(args.order, state)
    decomp = algebraic.kernel_extract()
    ok = (report["m1_residual_order"] > args.order
          and report["kernel_residual_order"] > args.order
          and decomp.cofactor.total_degree() == 0)
    payload = {"command": "kernel-check", "order": args.order,
               "m1_residual_order": report["m1_residual_order"],
               "kernel_residual_order": report["kernel_residual_order"],
               "r_residual_order": report["r_residual_order"],
               "p_residual_order": report["p_residual_order"],
               "cofactor": decomp.cofactor.serialize(),
               "status": "pass" if ok else "fail"}
    _emit(args, payload,
          ["m1(z, t1) residual order: %d" % report["m1_residual_order"],
           "K(z, t1) residual order: %d" % report["kernel_residual_order"],
           "R residual order: %d" % report["r_residual_order"],
           "P residual order: %d" % report["p_residual_order"],
           "K cofactor: %s" % decomp.cofactor,
           "kernel check: %s" % ("PASS" if ok else "FAIL")])
    return 0 if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permclass",
        description="Exact enumeration and algebra for Av(2413,3412) "
                    "and Av(1432,2143)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_class=True):
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        if with_class:
            p.add_argument("--class", dest="class_id", required=True,
                           choices=sorted(_CLASSES))

    p = sub.add_parser("count", help="counting sequence")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", default="both",
                   choices=("oracle", "functional_equation", "both"))
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("distribution", help="statistic distribution (oracle)")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=sorted(oracle.STATISTICS), default=None)
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("guess", help="conjecture a minimal polynomial")
    common(p)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--dy", type=int, required=True)
    p.add_argument("--dz", type=int, required=True)
    p.add_argument("--series", default="f1",
                   choices=("f1", "fskew_at_f1"))
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("verify", help="check a polynomial annihilates "
                                      "a computed series")
    common(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--series", default="f1", choices=("f1", "fskew_at_f1"))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help="polynomial file (vars: header + "
                                    "coef:monomial term list)")
    src.add_argument("--fixture", help="bundled fixture name")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", help="growth-rate report")
    common(p)
    p.add_argument("--terms", type=int, default=60)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("kernel-check", help="kernel extraction and root "
                                            "annihilation checks")
    common(p, with_class=False)
    p.add_argument("--order", type=int, default=40)
    p.set_defaults(func=cmd_kernel_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except oracle.BudgetExceededError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (class_a.ConsistencyError, class_b.ConsistencyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INCONSISTENT
    except algebraic.InsufficientDataError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
