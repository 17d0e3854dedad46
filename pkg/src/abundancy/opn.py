"""Odd-perfect-number candidate model and constraint predicates.

A hypothetical odd perfect number N in Eulerian form is N = q^k * n^2 with q
prime, q = k = 1 (mod 4) and gcd(q, n) = 1. No example is known; the point of
this module is to check a proposed (q, k, n) against every named structural
constraint and published bound exactly, and to certify the inequality
machinery that forces q < n whenever the least prime factor of N is at least
5: the Euler-prime lower bound f(q, u) = (q+1)/q + (2q/(q+1))**(1/x(u)) must
clear the ceiling 1 + sqrt(3) for u = 5, and provably cannot for u = 3.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .arith import Factorization, factorize, gcd, is_prime, omega, primes_up_to, sigma
from .index import (
    abundancy_index,
    index_lower_bound,
    reciprocal_exponent,
    sample_odd_factorization,
)
from .interval import (
    Comparison,
    DEFAULT_PRECISION,
    IntervalReal,
    PrecisionConfig,
    pow_interval,
    sqrt_ratio,
)

__all__ = [
    "Check",
    "CheckStatus",
    "ConstraintReport",
    "EulerianCandidate",
    "OrderPredicates",
    "PremiseError",
    "ResidualCase",
    "ResidualClassification",
    "acquaah_konyagin_holds",
    "ceiling_interval",
    "ceiling_scan",
    "euler_sum_bound",
    "euler_sum_bound_limit",
    "order_predicates",
    "residual_case_classify",
    "sample_surrogate",
    "validate_eulerian",
]

OCHEM_RAO_FLOOR = 10**1500  # every odd perfect number exceeds this
NIELSEN_MIN_OMEGA = 10  # and has at least this many distinct primes

DEFAULT_MARGIN = Fraction(1, 1000)


class CheckStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class Check:
    name: str
    status: CheckStatus
    witness: str


@dataclass(frozen=True)
class ConstraintReport:
    checks: tuple[Check, ...]

    def status_of(self, name: str) -> CheckStatus:
        for check in self.checks:
            if check.name == name:
                return check.status
        raise KeyError(name)

    def count(self, status: CheckStatus) -> int:
        return sum(1 for check in self.checks if check.status is status)

    @property
    def all_pass(self) -> bool:
        return all(check.status is CheckStatus.PASS for check in self.checks)

    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if c.status is not CheckStatus.PASS)

    def to_dict(self) -> dict:
        return {
            "checks": [
                {"name": c.name, "status": c.status.value, "witness": c.witness}
                for c in self.checks
            ]
        }


def _digit_count(n: int) -> int:
    # avoids str(n), which Python caps for huge integers
    if n <= 0:
        raise ValueError("positive input required")
    d = max((n.bit_length() - 1) * 30103 // 100000, 0)
    while 10 ** (d + 1) <= n:
        d += 1
    return d + 1


@dataclass(frozen=True)
class EulerianCandidate:
    """A proposed odd-perfect-number shape N = q^k * n^2.

    Construction only checks syntax (q >= 2, k >= 1, n in canonical factored
    form); every structural constraint lives in validate_eulerian so that
    failing candidates can still be examined.
    """

    q: int
    k: int
    n: Factorization

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")

    @property
    def root(self) -> int:
        """The integer n (square root of the non-Euler part)."""
        return self.n.value()

    @property
    def euler_part(self) -> int:
        return self.q**self.k

    @property
    def value(self) -> int:
        """N = q^k * n^2, reconstructed exactly."""
        return self.euler_part * self.root**2

    @property
    def descartes_frenicle_sorli(self) -> bool:
        """True when the Euler exponent k equals 1 (the conjectured value)."""
        return self.k == 1

    def full_factorization(self) -> Factorization:
        """Factorization of N (works even when q is composite or shares a
        prime with n; exponents merge)."""
        q_part = Factorization(
            tuple((p, e * self.k) for p, e in factorize(self.q).factors)
        )
        return q_part * self.n.squared()

    def least_prime(self) -> int:
        return self.full_factorization().least_prime()

    def __str__(self) -> str:
        return f"q={self.q} k={self.k} n={self.n}"

    @classmethod
    def parse(cls, line: str) -> "EulerianCandidate":
        """Parse the candidate line format ``q=<int> k=<int> n=<factored>``."""
        from .arith import parse_factored

        fields: dict[str, str] = {}
        for token in line.split():
            if "=" not in token:
                raise ValueError(f"expected key=value tokens, got {token!r}")
            key, _, text = token.partition("=")
            fields[key] = text
        missing = {"q", "k", "n"} - fields.keys()
        if missing:
            raise ValueError(f"candidate line is missing {sorted(missing)}")
        return cls(int(fields["q"]), int(fields["k"]), parse_factored(fields["n"]))


def acquaah_konyagin_holds(q: int, n: int) -> bool:
    """q < n*sqrt(3), tested exactly as q^2 < 3*n^2 (no irrationals)."""
    return q * q < 3 * n * n


def _flag(name: str, ok: bool, witness: str) -> Check:
    return Check(name, CheckStatus.PASS if ok else CheckStatus.FAIL, witness)


def validate_eulerian(
    candidate: EulerianCandidate,
    cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> ConstraintReport:
    """Run every named constraint against a candidate.

    Form checks and literature bounds are exact integer comparisons; the index
    lower bound is decided by certified enclosures with automatic precision
    escalation. Failures are report entries, never exceptions.
    """
    q, k = candidate.q, candidate.k
    n = candidate.root
    big_n = candidate.value
    full = candidate.full_factorization()
    checks: list[Check] = []

    checks.append(_flag("q prime", is_prime(q), f"q = {q}"))
    checks.append(_flag("q = 1 (mod 4)", q % 4 == 1, f"q mod 4 = {q % 4}"))
    checks.append(_flag("k = 1 (mod 4)", k % 4 == 1, f"k mod 4 = {k % 4}"))
    g = gcd(q, n)
    checks.append(_flag("gcd(q, n) = 1", g == 1, f"gcd(q, n) = {g}"))
    checks.append(_flag("n odd", n % 2 == 1, f"n mod 2 = {n % 2}"))
    checks.append(
        _flag(
            "N > 10^1500",
            big_n > OCHEM_RAO_FLOOR,
            f"N has {_digit_count(big_n)} digits; needs more than 1500",
        )
    )
    om = omega(full)
    checks.append(_flag("omega(N) >= 10", om >= NIELSEN_MIN_OMEGA, f"omega(N) = {om}"))

    euler_index = abundancy_index(
        Factorization(tuple((p, e * k) for p, e in factorize(q).factors))
    )
    checks.append(
        _flag(
            "I(q^k) < 5/4",
            euler_index < Fraction(5, 4),
            f"I(q^k) = {euler_index}",
        )
    )

    checks.append(_index_bound_check(candidate, cfg))

    if k > 1:
        checks.append(
            _flag("q < n for k > 1", q < n, f"k = {k}, q = {q}, n = {n}")
        )
    else:
        checks.append(Check("q < n for k > 1", CheckStatus.PASS, "k = 1, not applicable"))

    residual = abundancy_index(full)
    if big_n < 10**30:
        witness = f"sigma(N)/N = {sigma(full)}/{big_n}"
        if residual.denominator != big_n:  # only if it actually reduces
            witness += f" = {residual}"
    else:
        witness = f"sigma(N) != 2N (N has {_digit_count(big_n)} digits)"
        if residual == 2:
            witness = "sigma(N) = 2N"
    checks.append(_flag("sigma(N) = 2N", residual == 2, witness))

    return ConstraintReport(tuple(checks))


def _index_bound_check(candidate: EulerianCandidate, cfg: PrecisionConfig) -> Check:
    name = "I(n) > index lower bound"
    u = candidate.least_prime()
    if u == 2:
        return Check(name, CheckStatus.FAIL, "N is even; the bound assumes odd N")
    root_index = abundancy_index(candidate.n)
    enclosure = None
    for bits in cfg.ladder():
        enclosure = index_lower_bound(Fraction(8, 5), u, PrecisionConfig(bits, bits))
        verdict = enclosure.compare(root_index)
        if verdict is Comparison.LESS:  # bound < I(n)
            status = CheckStatus.PASS
            break
        if verdict is Comparison.GREATER:
            status = CheckStatus.FAIL
            break
    else:
        status = CheckStatus.UNDECIDED
    witness = f"I(n) = {root_index} vs (8/5)^(1/x({u})) = {enclosure.render()}"
    return Check(name, status, witness)


# ---------------------------------------------------------------------------
# order predicates between the Euler part and the root
# ---------------------------------------------------------------------------


class PremiseError(ValueError):
    """The abundancy premise I(q^k)^3 < 2 < I(n)^3 does not hold."""


@dataclass(frozen=True)
class OrderPredicates:
    """The three order statements (all exact):

    euler_lt_root:  q^k < n
    cross_lt:       sigma(q^k) * q^k < sigma(n) * n
                    (cross-multiplied form of sigma(q^k)/n < sigma(n)/q^k)
    sigma_lt:       sigma(q^k) < sigma(n)

    Under the premise, euler_lt_root implies both others and cross_lt implies
    sigma_lt. The converse sigma_lt -> euler_lt_root is only observed, never
    asserted.
    """

    euler_lt_root: bool
    cross_lt: bool
    sigma_lt: bool

    @property
    def implications_hold(self) -> bool:
        p1, p2, p3 = self.euler_lt_root, self.cross_lt, self.sigma_lt
        return (not p1 or p3) and (not p1 or p2) and (not p2 or p3)

    @property
    def converse_observed(self) -> bool:
        return not self.sigma_lt or self.euler_lt_root


def order_predicates(candidate: EulerianCandidate) -> OrderPredicates:
    """Evaluate the order predicates for a candidate satisfying the premise.

    Raises PremiseError when I(q^k)^3 < 2 < I(n)^3 fails (checked exactly by
    cubing the rationals), so premise violations are reported, not skipped.
    """
    q, k = candidate.q, candidate.k
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    euler_part = q**k
    sigma_euler = (q ** (k + 1) - 1) // (q - 1)
    euler_index = Fraction(sigma_euler, euler_part)
    root_index = abundancy_index(candidate.n)
    if euler_index**3 >= 2:
        raise PremiseError(f"I(q^k)^3 = {euler_index**3} >= 2")
    if root_index**3 <= 2:
        raise PremiseError(f"I(n)^3 = {root_index**3} <= 2")
    n = candidate.root
    sigma_root = sigma(candidate.n)
    return OrderPredicates(
        euler_lt_root=euler_part < n,
        cross_lt=sigma_euler * euler_part < sigma_root * n,
        sigma_lt=sigma_euler < sigma_root,
    )


# ---------------------------------------------------------------------------
# Euler-prime lower bound f(q, u) against the 1 + sqrt(3) ceiling
# ---------------------------------------------------------------------------


def _require_scan_primes(q: int, u: int) -> None:
    if not is_prime(q) or q % 4 != 1:
        raise ValueError(f"q must be a prime with q = 1 (mod 4), got {q}")
    if u < 3 or u % 2 == 0 or not is_prime(u):
        raise ValueError(f"u must be an odd prime, got {u}")


def _euler_sum_bound_bits(q: int, u: int, bits: int) -> IntervalReal:
    base = IntervalReal.exact(Fraction(2 * q, q + 1), bits)
    return pow_interval(base, reciprocal_exponent(u, bits), bits) + Fraction(q + 1, q)


def euler_sum_bound(q: int, u: int, cfg: PrecisionConfig = DEFAULT_PRECISION) -> IntervalReal:
    """Enclosure of f(q, u) = (q+1)/q + (2q/(q+1))**(1/x(u)): a lower bound
    for I(q) + I(n) when q is the Euler prime and u the least prime of N."""
    _require_scan_primes(q, u)
    return _euler_sum_bound_bits(q, u, cfg.initial_bits)


def _limit_bits(u: int, bits: int) -> IntervalReal:
    return pow_interval(IntervalReal.exact(2, bits), reciprocal_exponent(u, bits), bits) + 1


def euler_sum_bound_limit(u: int, cfg: PrecisionConfig = DEFAULT_PRECISION) -> IntervalReal:
    """Enclosure of the q -> infinity limit 1 + 2**(1/x(u)) of f(q, u)."""
    return _limit_bits(u, cfg.initial_bits)


@lru_cache(maxsize=None)
def ceiling_interval(bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of 1 + sqrt(3), the exact ceiling for sigma(q)/n + sigma(n)/q."""
    return sqrt_ratio(3, bits) + 1


def ceiling_scan(
    q_limit: int,
    u: int,
    cfg: PrecisionConfig = DEFAULT_PRECISION,
    required_margin: Fraction = DEFAULT_MARGIN,
) -> ConstraintReport:
    """Certify f(q, u) against 1 + sqrt(3) for every prime q = 1 (mod 4) with
    5 <= q <= q_limit.

    For u >= 5 each q must clear the ceiling with margin >= required_margin
    (this is the contradiction that forces q < n). For u = 3 each q must stay
    strictly below it (no contradiction is available there). The report ends
    with the scan minimum and the q -> infinity limit; UNDECIDED entries only
    appear after precision escalation up to cfg.max_bits.
    """
    if u < 3 or u % 2 == 0 or not is_prime(u):
        raise ValueError(f"u must be an odd prime, got {u}")
    expect_greater = u >= 5
    checks: list[Check] = []
    minimum: IntervalReal | None = None
    minimum_q = None
    for q in primes_up_to(q_limit):
        if q < 5 or q % 4 != 1:
            continue
        status = CheckStatus.UNDECIDED
        bound = ceiling = None
        for bits in cfg.ladder():
            bound = _euler_sum_bound_bits(q, u, bits)
            ceiling = ceiling_interval(bits)
            if expect_greater:
                if bound.lo - ceiling.hi >= required_margin:
                    status = CheckStatus.PASS
                    break
                if bound.hi - ceiling.lo < required_margin:
                    status = CheckStatus.FAIL
                    break
            else:
                if bound.hi < ceiling.lo:
                    status = CheckStatus.PASS
                    break
                if bound.lo > ceiling.hi:
                    status = CheckStatus.FAIL
                    break
        relation = ">" if expect_greater else "<"
        checks.append(
            Check(
                f"f({q}, {u}) {relation} 1+sqrt(3)",
                status,
                f"f = {bound.render()} vs ceiling = {ceiling.render()}",
            )
        )
        if minimum is None or bound.lo < minimum.lo:
            minimum, minimum_q = bound, q
    if minimum is not None:
        checks.append(
            Check(
                "minimum over scan",
                CheckStatus.PASS,
                f"q = {minimum_q}: f = {minimum.render()}",
            )
        )
    limit_status = CheckStatus.UNDECIDED
    limit = None
    for bits in cfg.ladder():
        limit = _limit_bits(u, bits)
        ceiling = ceiling_interval(bits)
        if limit.lo > ceiling.hi:
            limit_status = CheckStatus.PASS if expect_greater else CheckStatus.FAIL
            break
        if limit.hi < ceiling.lo:
            limit_status = CheckStatus.FAIL if expect_greater else CheckStatus.PASS
            break
    checks.append(
        Check(
            "limit as q grows",
            limit_status,
            f"1 + 2^(1/x({u})) = {limit.render()}",
        )
    )
    return ConstraintReport(tuple(checks))


# ---------------------------------------------------------------------------
# residual case classification of the Euler prime
# ---------------------------------------------------------------------------


class ResidualCase(Enum):
    CASE_Q5 = "CASE_Q5"
    CASE_5_MOD_12 = "CASE_5_MOD_12"
    CASE_1_MOD_12 = "CASE_1_MOD_12"


@dataclass(frozen=True)
class ResidualClassification:
    case: ResidualCase
    notes: str


def residual_case_classify(q: int) -> ResidualClassification:
    """Classify an Euler prime q = 1 (mod 4) by its residue mod 12.

    q = 5 is its own case: k = 1 is then necessary (Iannucci), which gives
    5 = q < n. Otherwise q = 5 (mod 12) forces 3 | (q+1)/2 | n^2 when k = 1,
    while q = 1 (mod 12) forces no divisibility of n by 3.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q % 4 != 1:
        raise ValueError(f"q must be 1 (mod 4), got {q} = {q % 4} (mod 4)")
    half = (q + 1) // 2
    if q == 5:
        return ResidualClassification(
            ResidualCase.CASE_Q5,
            "k = 1 is necessary for q = 5 (Iannucci), hence 5 = q < n; 3 = (q+1)/2 divides n^2",
        )
    if q % 12 == 5:
        return ResidualClassification(
            ResidualCase.CASE_5_MOD_12,
            f"q = 2 (mod 3), so 3 divides (q+1)/2 = {half}, hence 3 | n^2 when k = 1",
        )
    return ResidualClassification(
        ResidualCase.CASE_1_MOD_12,
        f"(q+1)/2 = {half} is not divisible by 3; no divisibility of n by 3 is forced",
    )


# ---------------------------------------------------------------------------
# surrogate sampling
# ---------------------------------------------------------------------------

_SURROGATE_Q_POOL = tuple(p for p in primes_up_to(5000) if p % 4 == 1)


def sample_surrogate(rng: random.Random, max_root: int = 10**6) -> EulerianCandidate:
    """Random premise-satisfying candidate: q prime = 1 (mod 4), k = 1 (mod 4),
    n odd and coprime to q with I(n)^3 > 2 (the I(q^k)^3 < 2 side holds for
    every q >= 5 since I(q^k) < q/(q-1) <= 5/4)."""
    while True:
        q = rng.choice(_SURROGATE_Q_POOL)
        k = rng.choice((1, 1, 1, 5, 9))
        n = sample_odd_factorization(rng, max_root, exclude=(q,))
        if abundancy_index(n) ** 3 > 2:
            return EulerianCandidate(q, k, n)
