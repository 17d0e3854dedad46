"""Command-line interface: one subcommand per library operation plus the
`report` regression document. Exit code 0 means no failures and nothing
undecided."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import FactorizationBudgetError, parse_factored, sigma
from .index import (
    SandwichStatus,
    abundancy_exponent,
    abundancy_index,
    index_lower_bound,
    sandwich_check,
)
from .interval import PrecisionConfig
from .mersenne import mersenne_scan
from .opn import (
    CheckStatus,
    EulerianCandidate,
    ceiling_scan,
    euler_sum_bound,
    residual_case_classify,
    validate_eulerian,
)
from .report import ReportSizes, run_report

ENV_BITS = "ABUNDANCY_BITS"


def _default_bits() -> int:
    return int(os.environ.get(ENV_BITS, "256"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bits", type=int, default=_default_bits(),
                        help="working precision in bits (default 256, env %s)" % ENV_BITS)
    common.add_argument("--max-bits", type=int, default=4096,
                        help="precision ceiling for escalation (default 4096)")
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    parser = argparse.ArgumentParser(
        prog="abundancy",
        description="Exact and certified arithmetic around the abundancy index "
        "and odd-perfect-number constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", parents=[common], help="divisor sum of n")
    p.add_argument("value", help="integer or factored form like 3^2*5")

    p = sub.add_parser("abundancy", parents=[common], help="abundancy index sigma(n)/n")
    p.add_argument("value")

    p = sub.add_parser("exponent", parents=[common], help="abundancy exponent x(n)")
    p.add_argument("value")

    p = sub.add_parser("sandwich", parents=[common],
                       help="certify min(x(a),x(b)) < x(ab) < max(x(a),x(b))")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("check", parents=[common],
                       help="validate an odd-perfect-number candidate line")
    p.add_argument("candidate", nargs="+", help="e.g. q=5 k=1 n=3^2")

    p = sub.add_parser("bound", parents=[common],
                       help="certified lower bound L^(1/x(u))")
    p.add_argument("--L", required=True, help="exact rational, e.g. 8/5")
    p.add_argument("--u", required=True, type=int, help="odd prime")

    p = sub.add_parser("f", parents=[common],
                       help="Euler-prime bound f(q,u) = (q+1)/q + (2q/(q+1))^(1/x(u))")
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--u", required=True, type=int)

    p = sub.add_parser("scan", parents=[common],
                       help="certify f(q,u) against 1+sqrt(3) over primes q = 1 (mod 4)")
    p.add_argument("--qmax", required=True, type=int)
    p.add_argument("--u", required=True, type=int)
    p.add_argument("--margin", default="1/1000",
                   help="required clearance for u >= 5 (exact rational)")
    p.add_argument("--verbose", action="store_true", help="print every grid entry")

    p = sub.add_parser("classify", parents=[common],
                       help="residual case of an Euler prime mod 12")
    p.add_argument("q", type=int)

    p = sub.add_parser("mersenne", parents=[common], help="Lucas-Lehmer exponent scan")
    p.add_argument("--limit", required=True, type=int)
    p.add_argument("--allow-large", action="store_true",
                   help="permit scans beyond the desk-scale cap")

    p = sub.add_parser("report", parents=[common], help="full reproduction document")
    p.add_argument("--seed", type=int, default=42)
    for name, default in (
        ("oracle-limit", 10_000),
        ("sandwich-pairs", 1_000),
        ("grid-prime-limit", 100),
        ("grid-exponent-max", 10),
        ("chain-prime-limit", 1_000),
        ("order-candidates", 2_000),
        ("scan-limit", 10_000),
        ("mersenne-limit", 2_500),
    ):
        p.add_argument(f"--{name}", type=int, default=default)

    return parser


def _cfg(args: argparse.Namespace) -> PrecisionConfig:
    return PrecisionConfig(args.bits, max(args.max_bits, args.bits))


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_sigma(args) -> int:
    f = parse_factored(args.value)
    value = sigma(f)
    _emit(args, {"input": str(f), "sigma": str(value)}, f"sigma({f}) = {value}")
    return 0


def _cmd_abundancy(args) -> int:
    f = parse_factored(args.value)
    index = abundancy_index(f)
    _emit(args, {"input": str(f), "index": str(index)}, f"I({f}) = {index}")
    return 0


def _cmd_exponent(args) -> int:
    f = parse_factored(args.value)
    x = abundancy_exponent(f, _cfg(args)).value
    _emit(args, {"input": str(f), "exponent": x.render()}, f"x({f}) = {x.render()}")
    return 0


def _cmd_sandwich(args) -> int:
    fa = parse_factored(args.a)
    fb = parse_factored(args.b)
    result = sandwich_check(fa, fb, _cfg(args))
    payload = {
        "a": str(fa),
        "b": str(fb),
        "status": result.status.value,
        "x_a": result.x_a.render(),
        "x_b": result.x_b.render(),
        "x_ab": result.x_ab.render(),
    }
    text = (
        f"{result.status.value}: x({fa}) = {result.x_a.render()}, "
        f"x({fb}) = {result.x_b.render()}, x(ab) = {result.x_ab.render()}"
    )
    _emit(args, payload, text)
    return 0 if result.status is SandwichStatus.HOLDS else 1


def _cmd_check(args) -> int:
    candidate = EulerianCandidate.parse(" ".join(args.candidate))
    report = validate_eulerian(candidate, _cfg(args))
    lines = [f"candidate {candidate}"]
    for check in report.checks:
        lines.append(f"  {check.status.value:9s} {check.name}: {check.witness}")
    _emit(args, {"candidate": str(candidate), **report.to_dict()}, "\n".join(lines))
    return 0 if report.all_pass else 1


def _cmd_bound(args) -> int:
    value = index_lower_bound(Fraction(args.L), args.u, _cfg(args))
    text = f"({args.L})^(1/x({args.u})) = {value.render()}"
    _emit(args, {"L": args.L, "u": args.u, "bound": value.render()}, text)
    return 0


def _cmd_f(args) -> int:
    value = euler_sum_bound(args.q, args.u, _cfg(args))
    text = f"f({args.q}, {args.u}) = {value.render()}"
    _emit(args, {"q": args.q, "u": args.u, "f": value.render()}, text)
    return 0


def _cmd_scan(args) -> int:
    report = ceiling_scan(args.qmax, args.u, _cfg(args), Fraction(args.margin))
    per_q = [c for c in report.checks if c.name.startswith("f(")]
    bad = [c for c in report.checks if c.status is not CheckStatus.PASS]
    summaries = [c for c in report.checks if not c.name.startswith("f(")]
    lines = [f"scanned {len(per_q)} primes q = 1 (mod 4) up to {args.qmax} with u = {args.u}"]
    shown = per_q if args.verbose else [c for c in per_q if c.status is not CheckStatus.PASS]
    for check in shown + summaries:
        lines.append(f"  {check.status.value:9s} {check.name}: {check.witness}")
    lines.append(f"failures: {sum(1 for c in bad if c.status is CheckStatus.FAIL)}, "
                 f"undecided: {sum(1 for c in bad if c.status is CheckStatus.UNDECIDED)}")
    _emit(args, {"qmax": args.qmax, "u": args.u, **report.to_dict()}, "\n".join(lines))
    return 0 if report.all_pass else 1


def _cmd_classify(args) -> int:
    result = residual_case_classify(args.q)
    _emit(
        args,
        {"q": args.q, "case": result.case.value, "notes": result.notes},
        f"{result.case.value}: {result.notes}",
    )
    return 0


def _cmd_mersenne(args) -> int:
    exponents = mersenne_scan(args.limit, allow_large=args.allow_large)
    text = f"mersenne exponents <= {args.limit}: " + " ".join(str(p) for p in exponents)
    _emit(args, {"limit": args.limit, "exponents": exponents}, text)
    return 0


def _cmd_report(args) -> int:
    sizes = ReportSizes(
        oracle_limit=args.oracle_limit,
        sandwich_pairs=args.sandwich_pairs,
        grid_prime_limit=args.grid_prime_limit,
        grid_exponent_max=args.grid_exponent_max,
        chain_prime_limit=args.chain_prime_limit,
        order_candidates=args.order_candidates,
        scan_limit=args.scan_limit,
        mersenne_limit=args.mersenne_limit,
    )
    report = run_report(args.seed, _cfg(args), sizes)
    if args.json:
        print(report.to_json())
    else:
        print(report.render())
    return 0 if report.clean else 1


_COMMANDS = {
    "sigma": _cmd_sigma,
    "abundancy": _cmd_abundancy,
    "exponent": _cmd_exponent,
    "sandwich": _cmd_sandwich,
    "check": _cmd_check,
    "bound": _cmd_bound,
    "f": _cmd_f,
    "scan": _cmd_scan,
    "classify": _cmd_classify,
    "mersenne": _cmd_mersenne,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError, FactorizationBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
