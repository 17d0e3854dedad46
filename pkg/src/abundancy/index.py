"""Abundancy index analytics.

The abundancy index I(n) = sigma(n)/n is an exact rational and multiplicative
over coprime arguments. The abundancy exponent of n > 1 is the real number
x(n) = ln(I(n^2))/ln(I(n)), i.e. the exponent with I(n^2) = I(n)**x(n); it
lies strictly between 1 and 2 and, for coprime a and b, x(ab) falls strictly
between x(a) and x(b). This module evaluates I exactly, encloses x
rigorously, certifies the sandwich property, and builds the certified lower
bound L**(1/x(u)) used to constrain odd perfect numbers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .arith import Factorization, gcd, is_prime, primes_up_to, sigma
from .interval import (
    DEFAULT_PRECISION,
    IntervalReal,
    PrecisionConfig,
    ln_ratio,
    pow_interval,
)

__all__ = [
    "ExponentValue",
    "SandwichResult",
    "SandwichStatus",
    "abundancy_exponent",
    "abundancy_index",
    "index_lower_bound",
    "prime_power_exponent",
    "prime_power_index",
    "reciprocal_exponent",
    "sample_coprime_odd_pair",
    "sample_odd_factorization",
    "sandwich_check",
    "square_index_relation",
]


def abundancy_index(f: Factorization) -> Fraction:
    """sigma(n)/n in lowest terms; equals 1 only for n = 1."""
    return Fraction(sigma(f), f.value())


def prime_power_index(r: int, s: int) -> Fraction:
    """I(r^s) = (r^(s+1) - 1) / (r^s (r - 1)) for prime r and s >= 1."""
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if s < 1:
        raise ValueError(f"exponent must be >= 1, got {s}")
    return Fraction(r ** (s + 1) - 1, r**s * (r - 1))


def square_index_relation(r: int, s: int) -> tuple[Fraction, Fraction]:
    """I(r^(2s)) two ways: directly, and as I(r^s) * (1 + (1 - r^-s)/(r^(s+1) - 1))
    with the negative power cleared to exact integers. The two must agree."""
    direct = prime_power_index(r, 2 * s)
    rs = r**s
    factored = prime_power_index(r, s) * (1 + Fraction(rs - 1, rs * (r ** (s + 1) - 1)))
    return direct, factored


@dataclass(frozen=True)
class ExponentValue:
    """Certified enclosure of the abundancy exponent of a factored integer."""

    value: IntervalReal
    of: Factorization


def _exponent_interval(f: Factorization, bits: int) -> IntervalReal:
    # ln I(n^2) / ln I(n); both logs are exact-rational inputs > 0
    return ln_ratio(abundancy_index(f.squared()), bits) / ln_ratio(abundancy_index(f), bits)


def abundancy_exponent(f: Factorization, cfg: PrecisionConfig = DEFAULT_PRECISION) -> ExponentValue:
    """Enclosure of x(n) = ln(I(n^2))/ln(I(n)), certified to lie in (1, 2).

    Undefined for n = 1 (the denominator ln I(1) is zero).
    """
    if not f.factors:
        raise ValueError("abundancy exponent is undefined for 1")
    for bits in cfg.ladder():
        enclosure = _exponent_interval(f, bits)
        if enclosure.lo > 1 and enclosure.hi < 2:
            return ExponentValue(enclosure, f)
    raise ArithmeticError(f"could not certify 1 < x < 2 for {f} at {cfg.max_bits} bits")


def prime_power_exponent(r: int, s: int, cfg: PrecisionConfig = DEFAULT_PRECISION) -> ExponentValue:
    """x(r^s) by the closed form 1 + ln(I(r^(2s))/I(r^s)) / ln(I(r^s)).

    Must agree (as overlapping enclosures) with abundancy_exponent of r^s.
    """
    base = prime_power_index(r, s)
    rs = r**s
    growth = 1 + Fraction(rs - 1, rs * (r ** (s + 1) - 1))  # I(r^(2s)) / I(r^s)
    for bits in cfg.ladder():
        enclosure = IntervalReal.exact(1, bits) + ln_ratio(growth, bits) / ln_ratio(base, bits)
        if enclosure.lo > 1 and enclosure.hi < 2:
            return ExponentValue(enclosure, Factorization(((r, s),)))
    raise ArithmeticError(f"could not certify 1 < x < 2 for {r}^{s} at {cfg.max_bits} bits")


class SandwichStatus(Enum):
    HOLDS = "HOLDS"
    VIOLATED = "VIOLATED"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class SandwichResult:
    status: SandwichStatus
    x_a: IntervalReal
    x_b: IntervalReal
    x_ab: IntervalReal


def sandwich_check(
    fa: Factorization,
    fb: Factorization,
    cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> SandwichResult:
    """Certify min(x(a), x(b)) < x(ab) < max(x(a), x(b)) for coprime a, b > 1.

    HOLDS and VIOLATED are certified by disjoint enclosures only, escalating
    precision up to cfg.max_bits; anything still overlapping there is
    UNDECIDED (equality of x(a) and x(b) is never assumed impossible).
    """
    a, b = fa.value(), fb.value()
    if a == 1 or b == 1:
        raise ValueError("sandwich_check needs both values > 1")
    if gcd(a, b) != 1:
        raise ValueError(f"inputs must be coprime, gcd({a}, {b}) > 1")
    fab = fa * fb
    for bits in cfg.ladder():
        x_a = _exponent_interval(fa, bits)
        x_b = _exponent_interval(fb, bits)
        x_ab = _exponent_interval(fab, bits)
        above_a, below_a = x_a.hi < x_ab.lo, x_ab.hi < x_a.lo
        above_b, below_b = x_b.hi < x_ab.lo, x_ab.hi < x_b.lo
        if (above_a and below_b) or (above_b and below_a):
            return SandwichResult(SandwichStatus.HOLDS, x_a, x_b, x_ab)
        if (below_a and below_b) or (above_a and above_b):
            return SandwichResult(SandwichStatus.VIOLATED, x_a, x_b, x_ab)
    return SandwichResult(SandwichStatus.UNDECIDED, x_a, x_b, x_ab)


@lru_cache(maxsize=None)
def reciprocal_exponent(u: int, bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of 1/x(u) = ln(I(u))/ln(I(u^2)) for an odd prime u."""
    if u < 3 or not is_prime(u):
        raise ValueError(f"u must be an odd prime, got {u}")
    return ln_ratio(prime_power_index(u, 1), bits) / ln_ratio(prime_power_index(u, 2), bits)


def index_lower_bound(
    L: Fraction | int,
    u: int,
    cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> IntervalReal:
    """Enclosure of L**(1/x(u)) for L > 1 and an odd prime u.

    Since x(u) < 2 this always exceeds the trivial bound sqrt(L). Used with
    L = 8/5 (root part of a candidate) and L = 2q/(q+1) (Euler-prime scans).
    """
    L = Fraction(L)
    if L <= 1:
        raise ValueError(f"the bound collapses for L <= 1, got {L}")
    bits = cfg.initial_bits
    return pow_interval(IntervalReal.exact(L, bits), reciprocal_exponent(u, bits), bits)


# ---------------------------------------------------------------------------
# corpus sampling (deterministic given the caller's rng)
# ---------------------------------------------------------------------------

_CORPUS_PRIMES = tuple(p for p in primes_up_to(100) if p % 2 == 1)


def sample_odd_factorization(
    rng: random.Random,
    max_value: int = 10**6,
    exclude: tuple[int, ...] = (),
) -> Factorization:
    """Random odd integer > 1 in factored form: up to 5 distinct odd primes
    below 100 with exponents up to 4, rejected until the value fits."""
    pool = [p for p in _CORPUS_PRIMES if p not in exclude]
    while True:
        count = rng.randint(1, min(5, len(pool)))
        chosen = sorted(rng.sample(pool, count))
        factors = tuple((p, rng.randint(1, 4)) for p in chosen)
        value = 1
        for p, e in factors:
            value *= p**e
        if 1 < value <= max_value:
            return Factorization(factors)


def sample_coprime_odd_pair(
    rng: random.Random,
    max_value: int = 10**6,
) -> tuple[Factorization, Factorization]:
    """Coprime odd pair with disjoint prime supports (coprimality by draw)."""
    fa = sample_odd_factorization(rng, max_value)
    fb = sample_odd_factorization(rng, max_value, exclude=fa.primes())
    return fa, fb
