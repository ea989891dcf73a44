"""Command-line front end: point evaluation, sweeps, and verification with CSV output.

Subcommands:

    eval              one q-gamma value (branch picked by q<1 vs q>1)
    digamma           q-digamma at a point, or the classical digamma series
                      when --q is omitted
    sweep             x, f, g, g_prime over an x grid at fixed (q, a)
    verify            certify the q-gamma ratio bounds over a (q, a, x) grid
    verify-classical  same certification against Euler's gamma

Exit status: 0 pass, 1 inequality violation, 2 domain error (including flag
validation), 3 convergence failure. All reals print with 17 significant
digits so output is bit-reproducible on a given platform.
"""

from __future__ import annotations

import argparse
import math
import sys
from contextlib import nullcontext

from .classical import DIGAMMA_SERIES_POLICY, euler_digamma_series
from .errors import ConvergenceError, DomainError
from .gamma import qdigamma, qgamma
from .inequality import (
    DEFAULT_MARGIN_TOL,
    DEFAULT_SEED,
    DEFAULT_STEP_TOL,
    GridSpec,
    InequalityReport,
    first_monotonicity_violation,
    log_gamma_ratio,
    log_gamma_ratio_derivative,
    verify_bounds,
    verify_classical_bounds,
)
from .types import DEFAULT_POLICY, QParameter, TruncationPolicy

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3

REPORT_HEADER = "q,a,x,f,lower,upper,lower_margin,upper_margin"


class _FlagError(Exception):
    """Flag-level precondition violation; message names the offending flag."""


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _parse_float(flag: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise _FlagError(f"{flag} expects a real number, got {text!r}")


def _parse_list(flag: str, text: str) -> list:
    values = []
    for part in text.split(","):
        part = part.strip()
        if part:
            values.append(_parse_float(flag, part))
    if not values:
        raise _FlagError(f"{flag} expects a comma-separated list of reals")
    return values


def _policy(args) -> TruncationPolicy:
    epsilon = DEFAULT_POLICY.epsilon if args.epsilon is None else args.epsilon
    max_terms = DEFAULT_POLICY.max_terms if args.max_terms is None else args.max_terms
    if not 0.0 < epsilon < 1.0:
        raise _FlagError(f"--epsilon must lie in (0,1), got {epsilon!r}")
    if max_terms < 1:
        raise _FlagError(f"--max-terms must be >= 1, got {max_terms!r}")
    return TruncationPolicy(epsilon=epsilon, max_terms=max_terms)


def _out(path):
    if path is None or path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _q_param(flag: str, q: float) -> QParameter:
    try:
        return QParameter.from_value(q)
    except DomainError as exc:
        raise _FlagError(f"{flag}: {exc}")


def _cmd_eval(args) -> int:
    q_param = _q_param("--q", args.q)
    policy = _policy(args)
    result = qgamma(args.x, q_param, policy)
    with _out(args.output) as fh:
        fh.write("x,q,value,log_value,error_bound,terms_used\n")
        fh.write(
            f"{_fmt(args.x)},{_fmt(args.q)},{_fmt(result.value)},"
            f"{_fmt(result.log_value)},{_fmt(result.error_bound)},{result.terms_used}\n"
        )
    return EXIT_PASS


def _cmd_digamma(args) -> int:
    if not args.x > 0.0:
        raise _FlagError(f"--x must be > 0 for digamma, got {args.x!r}")
    if args.q is None:
        # classical series; its own default tolerance unless overridden
        epsilon = DIGAMMA_SERIES_POLICY.epsilon if args.epsilon is None else args.epsilon
        max_terms = (
            DIGAMMA_SERIES_POLICY.max_terms if args.max_terms is None else args.max_terms
        )
        if not 0.0 < epsilon < 1.0:
            raise _FlagError(f"--epsilon must lie in (0,1), got {epsilon!r}")
        if max_terms < 1:
            raise _FlagError(f"--max-terms must be >= 1, got {max_terms!r}")
        value = euler_digamma_series(
            args.x, TruncationPolicy(epsilon=epsilon, max_terms=max_terms)
        )
        q_out = 1.0
    else:
        if not 0.0 < args.q < 1.0:
            raise _FlagError(f"--q must lie in (0,1) for digamma, got {args.q!r}")
        q_param = QParameter.from_value(args.q)
        value = qdigamma(args.x, q_param, _policy(args))
        q_out = args.q
    with _out(args.output) as fh:
        fh.write("x,q,value\n")
        fh.write(f"{_fmt(args.x)},{_fmt(q_out)},{_fmt(value)}\n")
    return EXIT_PASS


def _cmd_sweep(args) -> int:
    if not 0.0 < args.q < 1.0:
        raise _FlagError(f"--q must lie in (0,1) for sweep, got {args.q!r}")
    if not args.a >= 1.0:
        raise _FlagError(f"--a must be >= 1, got {args.a!r}")
    if args.x_count < 2:
        raise _FlagError(f"--x-count must be >= 2, got {args.x_count!r}")
    tol = DEFAULT_STEP_TOL if args.tol is None else args.tol
    policy = _policy(args)
    q_param = QParameter.from_value(args.q)
    grid = GridSpec((args.q,), (args.a,), args.x_count)
    xs = grid.x_values()
    rows = []
    for x in xs:
        x = float(x)
        g = log_gamma_ratio(x, args.a, q_param, policy)
        gp = log_gamma_ratio_derivative(x, args.a, q_param, policy)
        rows.append((x, math.exp(g), g, gp))
    with _out(args.output) as fh:
        fh.write("x,f,g,g_prime\n")
        for x, f, g, gp in rows:
            fh.write(f"{_fmt(x)},{_fmt(f)},{_fmt(g)},{_fmt(gp)}\n")
    violation = first_monotonicity_violation(
        [r[0] for r in rows], [r[1] for r in rows], tol
    )
    return EXIT_PASS if violation is None else EXIT_VIOLATION


def _write_report(fh, report: InequalityReport, seed: int) -> None:
    fh.write(REPORT_HEADER + "\n")
    for rec in report.points:
        fh.write(
            f"{_fmt(rec.q)},{_fmt(rec.a)},{_fmt(rec.x)},{_fmt(rec.f)},"
            f"{_fmt(rec.lower)},{_fmt(rec.upper)},"
            f"{_fmt(rec.lower_margin)},{_fmt(rec.upper_margin)}\n"
        )
    if report.incomplete:
        fh.write("# incomplete\n")
    fh.write(
        f"# pass={'true' if report.passed else 'false'} "
        f"min_lower_margin={_fmt(report.min_lower_margin)} "
        f"min_upper_margin={_fmt(report.min_upper_margin)} "
        f"seed={seed}\n"
    )


def _cmd_verify(args) -> int:
    q_values = _parse_list("--q-list", args.q_list)
    a_values = _parse_list("--a-list", args.a_list)
    for q in q_values:
        if not 0.0 < q < 1.0:
            raise _FlagError(f"--q-list values must lie in (0,1), got {q!r}")
    for a in a_values:
        if not a >= 1.0:
            raise _FlagError(f"--a-list values must be >= 1, got {a!r}")
    if args.x_count < 2:
        raise _FlagError(f"--x-count must be >= 2, got {args.x_count!r}")
    tol = DEFAULT_MARGIN_TOL if args.tol is None else args.tol
    report = verify_bounds(GridSpec(q_values, a_values, args.x_count), _policy(args), tol)
    with _out(args.output) as fh:
        _write_report(fh, report, args.seed)
    if report.incomplete:
        return EXIT_CONVERGENCE
    return EXIT_PASS if report.passed else EXIT_VIOLATION


def _cmd_verify_classical(args) -> int:
    a_values = _parse_list("--a-list", args.a_list)
    for a in a_values:
        if not a >= 1.0:
            raise _FlagError(f"--a-list values must be >= 1, got {a!r}")
    if args.x_count < 2:
        raise _FlagError(f"--x-count must be >= 2, got {args.x_count!r}")
    tol = DEFAULT_MARGIN_TOL if args.tol is None else args.tol
    report = verify_classical_bounds(a_values, args.x_count, tol)
    with _out(args.output) as fh:
        _write_report(fh, report, args.seed)
    return EXIT_PASS if report.passed else EXIT_VIOLATION


def _add_policy_flags(p) -> None:
    p.add_argument("--epsilon", type=float, default=None, help="series tolerance")
    p.add_argument("--max-terms", type=int, default=None, help="series term cap")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgamma",
        description="q-gamma evaluation and gamma-ratio inequality verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the q-gamma function at one point")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--output", default=None)
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser(
        "digamma",
        help="q-digamma at a point (classical digamma series when --q is omitted)",
    )
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--output", default=None)
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_digamma)

    p = sub.add_parser("sweep", help="x,f,g,g_prime over an x grid at fixed (q, a)")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--x-count", type=int, default=101)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--output", default=None)
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="certify the ratio bounds over a (q,a,x) grid")
    p.add_argument("--q-list", required=True)
    p.add_argument("--a-list", required=True)
    p.add_argument("--x-count", type=int, default=101)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", default=None)
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "verify-classical", help="certify the classical-gamma ratio bounds"
    )
    p.add_argument("--a-list", required=True)
    p.add_argument("--x-count", type=int, default=101)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_verify_classical)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
