"""Reproduction report: one call re-derives every reference constant and
re-runs every certified suite, producing a deterministic document suitable
for regression testing.

Given the same seed and precision configuration, two runs produce
byte-identical JSON: nothing time- or platform-dependent is recorded.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import Factorization, factorize, primes_up_to, sigma, sigma_oracle
from .index import (
    SandwichStatus,
    abundancy_exponent,
    index_lower_bound,
    prime_power_exponent,
    sample_coprime_odd_pair,
    sandwich_check,
)
from .interval import (
    DEFAULT_PRECISION,
    IntervalReal,
    PrecisionConfig,
)
from .mersenne import even_perfect_from_exponent, mersenne_scan
from .opn import (
    CheckStatus,
    ceiling_interval,
    ceiling_scan,
    euler_sum_bound_limit,
    order_predicates,
    sample_surrogate,
)

__all__ = [
    "ConstantEntry",
    "ReportSizes",
    "ReproductionReport",
    "SuiteSummary",
    "reference_constants",
    "run_report",
]

# The decimals these constants are checked against, read as +/- one unit in
# the last printed digit.
REFERENCE_DECIMALS = (
    ("(8/5)^(ln(4/3)/ln(13/9))", "1.44440557"),
    ("ln(13/9)/ln(4/3)", "1.27823"),
    ("1+2^(ln(6/5)/ln(31/25))", "2.799"),
    ("1+sqrt(3)", "2.732"),
    ("1+2^(ln(4/3)/ln(13/9))", "2.7199"),
)


@dataclass(frozen=True)
class ConstantEntry:
    label: str
    value: IntervalReal
    reference: str
    match: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "enclosure": self.value.render(),
            "reference": self.reference,
            "match": self.match,
        }


@dataclass(frozen=True)
class SuiteSummary:
    name: str
    cases: int
    failures: int
    undecided: int
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "undecided": self.undecided,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ReportSizes:
    """Suite sizes for the default regression document (smoke scale; the
    acceptance tests re-run the suites at full scale)."""

    oracle_limit: int = 10_000
    sandwich_pairs: int = 1_000
    grid_prime_limit: int = 100
    grid_exponent_max: int = 10
    chain_prime_limit: int = 1_000
    order_candidates: int = 2_000
    scan_limit: int = 10_000
    mersenne_limit: int = 2_500


@dataclass(frozen=True)
class ReproductionReport:
    constants: tuple[ConstantEntry, ...]
    suites: tuple[SuiteSummary, ...]
    environment: dict

    @property
    def clean(self) -> bool:
        return all(c.match for c in self.constants) and all(
            s.failures == 0 and s.undecided == 0 for s in self.suites
        )

    def to_dict(self) -> dict:
        return {
            "constants": [c.to_dict() for c in self.constants],
            "suites": [s.to_dict() for s in self.suites],
            "environment": self.environment,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render(self) -> str:
        lines = ["reference constants:"]
        for c in self.constants:
            mark = "MATCH" if c.match else "MISMATCH"
            lines.append(f"  {c.label} = {c.value.render()}  [{c.reference}: {mark}]")
        lines.append("suites:")
        for s in self.suites:
            tail = f"  ({s.detail})" if s.detail else ""
            lines.append(
                f"  {s.name}: {s.cases} cases, {s.failures} failures, "
                f"{s.undecided} undecided{tail}"
            )
        lines.append("environment:")
        for key in sorted(self.environment):
            lines.append(f"  {key} = {self.environment[key]}")
        return "\n".join(lines)


def _reference_window(text: str) -> tuple[Fraction, Fraction]:
    """The printed decimal read as an interval of one unit in its last digit."""
    value = Fraction(text)
    places = len(text.partition(".")[2])
    ulp = Fraction(1, 10**places)
    return value - ulp, value + ulp


def reference_constants(cfg: PrecisionConfig = DEFAULT_PRECISION) -> tuple[ConstantEntry, ...]:
    """Re-derive the five reference constants as certified enclosures."""
    values = (
        index_lower_bound(Fraction(8, 5), 3, cfg),
        abundancy_exponent(Factorization(((3, 1),)), cfg).value,
        euler_sum_bound_limit(5, cfg),
        ceiling_interval(cfg.initial_bits),
        euler_sum_bound_limit(3, cfg),
    )
    entries = []
    for (label, reference), value in zip(REFERENCE_DECIMALS, values):
        ref_lo, ref_hi = _reference_window(reference)
        match = value.lo <= ref_hi and ref_lo <= value.hi
        entries.append(ConstantEntry(label, value, reference, match))
    return tuple(entries)


def _suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _oracle_suite(sizes: ReportSizes) -> SuiteSummary:
    failures = 0
    for n in range(1, sizes.oracle_limit + 1):
        if sigma(factorize(n)) != sigma_oracle(n):
            failures += 1
    return SuiteSummary("sigma oracle equivalence", sizes.oracle_limit, failures, 0)


def _sandwich_suite(seed: int, sizes: ReportSizes, cfg: PrecisionConfig) -> SuiteSummary:
    rng = _suite_rng(seed, "sandwich")
    violated = undecided = 0
    for _ in range(sizes.sandwich_pairs):
        fa, fb = sample_coprime_odd_pair(rng)
        result = sandwich_check(fa, fb, cfg)
        if result.status is SandwichStatus.VIOLATED:
            violated += 1
        elif result.status is SandwichStatus.UNDECIDED:
            undecided += 1
    return SuiteSummary("sandwich corpus", sizes.sandwich_pairs, violated, undecided)


def _monotonicity_suite(sizes: ReportSizes, cfg: PrecisionConfig) -> SuiteSummary:
    cases = failures = undecided = 0
    for r in primes_up_to(sizes.grid_prime_limit):
        if r == 2:
            continue
        previous = prime_power_exponent(r, 1, cfg).value
        for s in range(2, sizes.grid_exponent_max + 1):
            current = prime_power_exponent(r, s, cfg).value
            cases += 1
            if previous.lo <= current.hi:  # not certified decreasing
                if current.lo > previous.hi:
                    failures += 1
                else:
                    undecided += 1
            previous = current
    chain = [p for p in primes_up_to(sizes.chain_prime_limit) if p != 2]
    for left, right in zip(chain, chain[1:]):
        x_left = prime_power_exponent(left, 1, cfg).value
        x_right = prime_power_exponent(right, 1, cfg).value
        cases += 1
        if x_right.hi >= x_left.lo:
            if x_right.lo > x_left.hi:
                failures += 1
            else:
                undecided += 1
    return SuiteSummary("monotonicity grids", cases, failures, undecided)


def _order_suite(seed: int, sizes: ReportSizes) -> SuiteSummary:
    rng = _suite_rng(seed, "order")
    failures = converse_held = 0
    for _ in range(sizes.order_candidates):
        predicates = order_predicates(sample_surrogate(rng))
        if not predicates.implications_hold:
            failures += 1
        if predicates.converse_observed:
            converse_held += 1
    detail = f"converse observed in {converse_held}/{sizes.order_candidates}"
    return SuiteSummary("order implications", sizes.order_candidates, failures, 0, detail)


def _scan_suite(u: int, sizes: ReportSizes, cfg: PrecisionConfig) -> SuiteSummary:
    report = ceiling_scan(sizes.scan_limit, u, cfg)
    per_q = [c for c in report.checks if c.name.startswith("f(")]
    failures = sum(1 for c in per_q if c.status is CheckStatus.FAIL)
    undecided = sum(1 for c in per_q if c.status is CheckStatus.UNDECIDED)
    summary = next(c for c in report.checks if c.name == "minimum over scan")
    return SuiteSummary(f"ceiling scan u={u}", len(per_q), failures, undecided, summary.witness)


def _mersenne_suite(sizes: ReportSizes) -> SuiteSummary:
    exponents = mersenne_scan(sizes.mersenne_limit)
    failures = 0
    for p in exponents:
        try:
            even_perfect_from_exponent(p)
        except ArithmeticError:
            failures += 1
    detail = "p = " + ",".join(str(p) for p in exponents)
    return SuiteSummary("mersenne scan", len(exponents), failures, 0, detail)


def run_report(
    seed: int = 42,
    cfg: PrecisionConfig = DEFAULT_PRECISION,
    sizes: ReportSizes = ReportSizes(),
) -> ReproductionReport:
    """Build the full reproduction document. Deterministic in (seed, cfg, sizes)."""
    constants = reference_constants(cfg)
    suites = (
        _oracle_suite(sizes),
        _sandwich_suite(seed, sizes, cfg),
        _monotonicity_suite(sizes, cfg),
        _order_suite(seed, sizes),
        _scan_suite(5, sizes, cfg),
        _scan_suite(3, sizes, cfg),
        _mersenne_suite(sizes),
    )
    environment = {
        "seed": seed,
        "initial_bits": cfg.initial_bits,
        "max_bits": cfg.max_bits,
        "oracle_limit": sizes.oracle_limit,
        "sandwich_pairs": sizes.sandwich_pairs,
        "grid_prime_limit": sizes.grid_prime_limit,
        "grid_exponent_max": sizes.grid_exponent_max,
        "chain_prime_limit": sizes.chain_prime_limit,
        "order_candidates": sizes.order_candidates,
        "scan_limit": sizes.scan_limit,
        "mersenne_limit": sizes.mersenne_limit,
    }
    return ReproductionReport(constants, suites, environment)
