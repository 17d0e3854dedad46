"""Even perfect numbers via Mersenne primes.

Every even perfect number is (2^p - 1) * 2^(p-1) with p and 2^p - 1 prime;
the Lucas-Lehmer residue recurrence certifies the Mersenne side. This is the
one corner of the subject where genuine perfect numbers can be constructed
and verified against the divisor-sum closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, is_prime, sigma

__all__ = [
    "DESK_SCALE_CAP",
    "EuclideanForm",
    "even_perfect_from_exponent",
    "lucas_lehmer",
    "mersenne_scan",
]

DESK_SCALE_CAP = 2500  # larger scans need an explicit override


@dataclass(frozen=True)
class EuclideanForm:
    """An even perfect number (2^p - 1) * 2^(p-1) with its Mersenne factor."""

    p: int
    mersenne: int
    perfect: int


def lucas_lehmer(p: int) -> bool:
    """True iff 2^p - 1 is prime.

    p = 2 is the conventional special case (the recurrence starts at p = 3);
    composite p short-circuits to False since 2^p - 1 is then composite.
    """
    if p < 2:
        raise ValueError(f"exponent must be >= 2, got {p}")
    if p == 2:
        return True
    if not is_prime(p):
        return False
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = s * s - 2
        s = (s & m) + (s >> p)  # reduction mod 2^p - 1
        if s >= m:
            s -= m
    return s == 0


def even_perfect_from_exponent(p: int) -> EuclideanForm:
    """Construct the even perfect number for a Lucas-Lehmer-certified p."""
    if not lucas_lehmer(p):
        raise ValueError(f"2^{p} - 1 is not prime")
    mersenne = (1 << p) - 1
    form = EuclideanForm(p, mersenne, mersenne << (p - 1))
    # construction contract: the divisor-sum closed form confirms perfection
    if sigma(factorize(form.perfect)) != 2 * form.perfect:
        raise ArithmeticError(f"sigma check failed for p = {p}")
    return form


def mersenne_scan(limit: int, allow_large: bool = False) -> list[int]:
    """All p <= limit with 2^p - 1 prime, ascending.

    Scans beyond DESK_SCALE_CAP take minutes to hours and must be requested
    explicitly with allow_large=True.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > DESK_SCALE_CAP and not allow_large:
        raise ValueError(
            f"limit {limit} exceeds the desk-scale cap {DESK_SCALE_CAP}; "
            "pass allow_large=True to scan anyway"
        )
    return [p for p in range(2, limit + 1) if lucas_lehmer(p)]
