"""Rigorous real enclosures over exact rational endpoints.

An IntervalReal is a pair of Fractions [lo, hi] guaranteed to contain the
exact real value it stands for. Ring operations combine endpoints in exact
rational arithmetic, so they introduce no error at all. Transcendental
evaluations (ln, exp, powers, square roots) run in fixed-point integer
arithmetic at ``bits + GUARD_BITS`` of precision with every intermediate
division rounded outward (floor for lower bounds, ceil for upper bounds) and
the series truncation remainder folded into the upper bound. Containment is
therefore unconditional; no floating point is involved anywhere.

Strict inequalities are decided only by enclosure separation. When an
enclosure straddles the threshold, `decide`/`decide_order` re-evaluate at
doubled precision up to the configured ceiling and report UNDECIDED only
there; UNDECIDED is a value, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Callable, Iterator, Union

__all__ = [
    "Comparison",
    "DEFAULT_PRECISION",
    "GUARD_BITS",
    "IntervalReal",
    "PrecisionConfig",
    "decide",
    "decide_order",
    "exp_interval",
    "exp_ratio",
    "ln_interval",
    "ln_ratio",
    "pow_interval",
    "sqrt_ratio",
]

GUARD_BITS = 32

RatioLike = Union[Fraction, int]


class Comparison(Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class PrecisionConfig:
    """Working-precision schedule: start at initial_bits, double to max_bits."""

    initial_bits: int = 256
    max_bits: int = 4096

    def __post_init__(self) -> None:
        if self.initial_bits < 8:
            raise ValueError("initial_bits must be at least 8")
        if self.initial_bits > self.max_bits:
            raise ValueError("initial_bits must not exceed max_bits")

    def ladder(self) -> Iterator[int]:
        bits = self.initial_bits
        while True:
            yield bits
            if bits >= self.max_bits:
                return
            bits = min(2 * bits, self.max_bits)


DEFAULT_PRECISION = PrecisionConfig()


@dataclass(frozen=True)
class IntervalReal:
    """Enclosure [lo, hi] of a real value; `bits` is the precision it was
    produced at (metadata only, the endpoints are exact rationals)."""

    lo: Fraction
    hi: Fraction
    bits: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: {self.lo} > {self.hi}")

    @classmethod
    def exact(cls, value: RatioLike, bits: int = DEFAULT_PRECISION.initial_bits) -> "IntervalReal":
        v = Fraction(value)
        return cls(v, v, bits)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return self.width / 2

    def contains(self, value: RatioLike) -> bool:
        v = Fraction(value)
        return self.lo <= v <= self.hi

    def encloses(self, other: "IntervalReal") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "IntervalReal") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def compare(self, threshold: RatioLike) -> Comparison:
        """LESS iff hi < threshold, GREATER iff lo > threshold, else UNDECIDED."""
        t = Fraction(threshold)
        if self.hi < t:
            return Comparison.LESS
        if self.lo > t:
            return Comparison.GREATER
        return Comparison.UNDECIDED

    # Endpoint arithmetic is exact, so these operations are themselves exact
    # enclosures of the pointwise image; no rounding happens here.

    def __neg__(self) -> "IntervalReal":
        return IntervalReal(-self.hi, -self.lo, self.bits)

    def __add__(self, other: Union["IntervalReal", RatioLike]) -> "IntervalReal":
        if isinstance(other, IntervalReal):
            return IntervalReal(self.lo + other.lo, self.hi + other.hi, min(self.bits, other.bits))
        v = Fraction(other)
        return IntervalReal(self.lo + v, self.hi + v, self.bits)

    __radd__ = __add__

    def __sub__(self, other: Union["IntervalReal", RatioLike]) -> "IntervalReal":
        if isinstance(other, IntervalReal):
            return self + (-other)
        return self + (-Fraction(other))

    def __mul__(self, other: Union["IntervalReal", RatioLike]) -> "IntervalReal":
        if isinstance(other, IntervalReal):
            products = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return IntervalReal(min(products), max(products), min(self.bits, other.bits))
        v = Fraction(other)
        if v >= 0:
            return IntervalReal(self.lo * v, self.hi * v, self.bits)
        return IntervalReal(self.hi * v, self.lo * v, self.bits)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["IntervalReal", RatioLike]) -> "IntervalReal":
        if not isinstance(other, IntervalReal):
            other = IntervalReal.exact(other, self.bits)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("divisor interval touches zero")
        quotients = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return IntervalReal(min(quotients), max(quotients), min(self.bits, other.bits))

    def __str__(self) -> str:
        return self.render()

    def render(self, digits: int = 10) -> str:
        """Decimal rendering: midpoint with explicit radius and achieved
        precision, e.g. ``1.444405574 ± 2e-87 @256b``."""
        mid = self.midpoint
        mid_text = _decimal(mid, digits)
        rad_text = _radius_text(self.radius)
        return f"{mid_text} ± {rad_text} @{self.bits}b"


# ---------------------------------------------------------------------------
# fixed-point kernels (integers scaled by 2^w, w = bits + GUARD_BITS)
# ---------------------------------------------------------------------------


def _cdiv(a: int, b: int) -> int:
    """ceil(a / b) for b > 0 (Python's // already floors for the lower side)."""
    return -((-a) // b)


def _atanh_scaled(zn: int, zd: int, w: int) -> tuple[int, int]:
    """Enclosure of atanh(zn/zd) scaled by 2^w, for 0 <= zn/zd <= 1/3.

    Odd series sum z^(2k+1)/(2k+1); the geometric tail
    sum_{j>k} z^(2j+1)/(2j+1) <= z^(2k+3)/(1-z^2) is added to the upper bound.
    """
    if zn == 0:
        return 0, 0
    plo = (zn << w) // zd
    phi = _cdiv(zn << w, zd)
    slo, shi = plo, phi
    z2n, z2d = zn * zn, zd * zd
    k = 1
    while True:
        plo = plo * z2n // z2d
        phi = _cdiv(phi * z2n, z2d)
        d = 2 * k + 1
        slo += plo // d
        shi += _cdiv(phi, d)
        if phi <= d:
            shi += _cdiv(phi * z2n, z2d - z2n) + 1
            return slo, shi
        k += 1


@lru_cache(maxsize=None)
def _ln2_scaled(w: int) -> tuple[int, int]:
    # ln 2 = 2 atanh(1/3)
    lo, hi = _atanh_scaled(1, 3, w)
    return 2 * lo, 2 * hi


def _ln_scaled(num: int, den: int, w: int) -> tuple[int, int]:
    """Enclosure of ln(num/den) scaled by 2^w, for num, den >= 1.

    Argument reduction num/den = 2^e * m with m in [sqrt(2)/2, sqrt(2))
    (decided by the exact test m^2 >= 2), then ln m = 2 atanh((m-1)/(m+1))
    with |(m-1)/(m+1)| <= 3 - 2*sqrt(2) < 0.1716.
    """
    if num == den:
        return 0, 0
    if num < den:
        lo, hi = _ln_scaled(den, num, w)
        return -hi, -lo
    e = num.bit_length() - den.bit_length()
    if num < den << e:
        e -= 1
    scaled_den = den << e
    if num * num >= 2 * scaled_den * scaled_den:
        e += 1
        scaled_den <<= 1
    zn = num - scaled_den
    zd = num + scaled_den
    if zn >= 0:
        alo, ahi = _atanh_scaled(zn, zd, w)
        mlo, mhi = 2 * alo, 2 * ahi
    else:
        alo, ahi = _atanh_scaled(-zn, zd, w)
        mlo, mhi = -2 * ahi, -2 * alo
    l2lo, l2hi = _ln2_scaled(w)
    return mlo + e * l2lo, mhi + e * l2hi  # e >= 0 here


def _exp_series_scaled(t: int, w: int) -> tuple[int, int]:
    """Enclosure of exp(t / 2^w) scaled by 2^w, for 0 <= t/2^w <= 1.

    Plain Taylor sum; the remainder after the term of index j is below
    t^(j+1)/(j+1)! * 1/(1 - t/(j+2)) <= 4*phi + 2 once phi <= 2 ulps.
    """
    one = 1 << w
    plo = phi = one
    slo = shi = one
    j = 1
    while True:
        d = j << w
        plo = plo * t // d
        phi = _cdiv(phi * t, d)
        slo += plo
        shi += phi
        if phi <= 2:
            return slo, shi + 4 * phi + 2
        j += 1


def _exp_scaled(xn: int, xd: int, w: int) -> tuple[int, int]:
    """Enclosure of exp(xn/xd) scaled by 2^w (any sign of xn, xd > 0).

    Reduction x = k*ln2 + r with r in [0, ~0.70]; negative x goes through the
    reciprocal of exp(-x) so the series argument stays non-negative.
    """
    if xn == 0:
        return 1 << w, (1 << w) + 1
    neg = xn < 0
    if neg:
        xn = -xn
    l2lo, l2hi = _ln2_scaled(w)
    xs_lo = (xn << w) // xd
    xs_hi = _cdiv(xn << w, xd)
    k = xs_lo // l2hi
    rlo = xs_lo - k * l2hi  # in [0, l2hi) by choice of k
    rhi = xs_hi - k * l2lo
    elo = _exp_series_scaled(rlo, w)[0]
    ehi = _exp_series_scaled(rhi, w)[1]
    lo, hi = elo << k, ehi << k
    if neg:
        sq = 1 << (2 * w)
        lo, hi = sq // hi, _cdiv(sq, lo)
    return lo, hi


def _sqrt_scaled(num: int, den: int, w: int) -> tuple[int, int]:
    """Enclosure of sqrt(num/den) scaled by 2^w via integer square roots."""
    lo = isqrt((num << (2 * w)) // den)
    t = _cdiv(num << (2 * w), den)
    hi = isqrt(t)
    if hi * hi < t:
        hi += 1
    return lo, hi


def _from_scaled(lo: int, hi: int, w: int, bits: int) -> IntervalReal:
    scale = 1 << w
    return IntervalReal(Fraction(lo, scale), Fraction(hi, scale), bits)


# ---------------------------------------------------------------------------
# public evaluators
# ---------------------------------------------------------------------------


def ln_ratio(r: RatioLike, bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of ln(r) for an exact rational r > 0."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"ln requires a positive argument, got {r}")
    w = bits + GUARD_BITS
    lo, hi = _ln_scaled(r.numerator, r.denominator, w)
    return _from_scaled(lo, hi, w, bits)


def ln_interval(x: IntervalReal, bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of ln over an enclosure (ln is increasing)."""
    if x.lo <= 0:
        raise ValueError("ln requires a strictly positive interval")
    w = bits + GUARD_BITS
    lo = _ln_scaled(x.lo.numerator, x.lo.denominator, w)[0]
    hi = _ln_scaled(x.hi.numerator, x.hi.denominator, w)[1]
    return _from_scaled(lo, hi, w, bits)


def exp_ratio(x: RatioLike, bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of exp(x) for an exact rational x."""
    x = Fraction(x)
    w = bits + GUARD_BITS
    lo, hi = _exp_scaled(x.numerator, x.denominator, w)
    return _from_scaled(lo, hi, w, bits)


def exp_interval(x: IntervalReal, bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of exp over an enclosure (exp is increasing)."""
    w = bits + GUARD_BITS
    lo = _exp_scaled(x.lo.numerator, x.lo.denominator, w)[0]
    hi = _exp_scaled(x.hi.numerator, x.hi.denominator, w)[1]
    return _from_scaled(lo, hi, w, bits)


def pow_interval(
    base: IntervalReal,
    exponent: IntervalReal,
    bits: int = DEFAULT_PRECISION.initial_bits,
) -> IntervalReal:
    """Enclosure of base**exponent via exp(exponent * ln(base)); the base
    interval must be strictly positive."""
    if base.lo <= 0:
        raise ValueError("pow requires a strictly positive base interval")
    log_base = ln_interval(base, bits)
    return exp_interval(exponent * log_base, bits)


def sqrt_ratio(r: RatioLike, bits: int = DEFAULT_PRECISION.initial_bits) -> IntervalReal:
    """Enclosure of sqrt(r) for an exact rational r >= 0, from integer square
    root refinement (no decimal literals anywhere)."""
    r = Fraction(r)
    if r < 0:
        raise ValueError(f"sqrt requires a non-negative argument, got {r}")
    w = bits + GUARD_BITS
    lo, hi = _sqrt_scaled(r.numerator, r.denominator, w)
    return _from_scaled(lo, hi, w, bits)


def decide(
    evaluate: Callable[[int], IntervalReal],
    threshold: RatioLike,
    cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> tuple[Comparison, IntervalReal]:
    """Compare an enclosure-valued evaluation against an exact rational,
    re-evaluating at doubled precision while the enclosure straddles it.
    Returns UNDECIDED only at the precision ceiling."""
    t = Fraction(threshold)
    enclosure = None
    for bits in cfg.ladder():
        enclosure = evaluate(bits)
        verdict = enclosure.compare(t)
        if verdict is not Comparison.UNDECIDED:
            return verdict, enclosure
    return Comparison.UNDECIDED, enclosure


def decide_order(
    eval_a: Callable[[int], IntervalReal],
    eval_b: Callable[[int], IntervalReal],
    cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> tuple[Comparison, IntervalReal, IntervalReal]:
    """Certified order of two enclosure-valued evaluations: LESS iff a < b is
    certified by disjoint enclosures, escalating precision as in `decide`."""
    a = b = None
    for bits in cfg.ladder():
        a = eval_a(bits)
        b = eval_b(bits)
        if a.hi < b.lo:
            return Comparison.LESS, a, b
        if b.hi < a.lo:
            return Comparison.GREATER, a, b
    return Comparison.UNDECIDED, a, b


# ---------------------------------------------------------------------------
# decimal rendering
# ---------------------------------------------------------------------------


def _pow10_at_least(num: int, den: int, e: int) -> bool:
    """num/den >= 10^e, exactly."""
    if e >= 0:
        return num >= den * 10**e
    return num * 10 ** (-e) >= den


def _ilog10(x: Fraction) -> int:
    """Exact floor(log10 x) for x > 0."""
    num, den = x.numerator, x.denominator
    e = (num.bit_length() - den.bit_length()) * 301029995 // 1000000000
    while _pow10_at_least(num, den, e + 1):
        e += 1
    while not _pow10_at_least(num, den, e):
        e -= 1
    return e


def _decimal(x: Fraction, sig: int) -> str:
    """Round x to `sig` significant digits (half up) and format positionally
    when the exponent is moderate, scientifically otherwise."""
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    mag = -x if x < 0 else x
    e = _ilog10(mag)
    shift = sig - 1 - e
    scaled = mag * 10**shift if shift >= 0 else mag / 10 ** (-shift)
    m = int(scaled + Fraction(1, 2))
    if m >= 10**sig:
        m //= 10
        e += 1
    digits = str(m)
    if 0 <= e < sig:
        intpart = digits[: e + 1]
        fracpart = digits[e + 1 :]
        return f"{sign}{intpart}.{fracpart}" if fracpart else f"{sign}{intpart}"
    if -4 <= e < 0:
        return f"{sign}0.{'0' * (-e - 1)}{digits}"
    return f"{sign}{digits[0]}.{digits[1:]}e{e:+d}"


def _radius_text(radius: Fraction) -> str:
    """One-significant-digit upper bound on the radius, e.g. ``3e-12``."""
    if radius == 0:
        return "0"
    e = _ilog10(radius)
    scaled = radius / 10**e if e >= 0 else radius * 10 ** (-e)
    m = _cdiv(scaled.numerator, scaled.denominator)
    if m >= 10:
        m = 1
        e += 1
    return f"{m}e{e}"
