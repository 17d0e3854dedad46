"""Exact integer arithmetic and multiplicative number theory primitives.

Everything here is pure and exact: arbitrary-precision integers, canonical
prime factorizations, the divisor-sum function computed from the closed form
sigma(p^e) = (p^(e+1) - 1)/(p - 1), and an independent brute-force divisor
oracle for cross-checking it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "Factorization",
    "FactorizationBudgetError",
    "factorize",
    "gcd",
    "is_perfect",
    "is_prime",
    "omega",
    "parse_factored",
    "primes_up_to",
    "sigma",
    "sigma_oracle",
    "valuation",
]

DEFAULT_BUDGET = 2_000_000  # rho iterations before giving up
ORACLE_CAP = 10**7

_TRIAL_LIMIT = 1 << 16
# Below this bound the first twelve prime bases make Miller-Rabin deterministic.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71)


class FactorizationBudgetError(Exception):
    """Factoring exceeded its effort budget: input too hard, not invalid."""


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(primes_up_to(_TRIAL_LIMIT))


def is_prime(n: int) -> bool:
    """Primality test: deterministic Miller-Rabin below ~3.3e24, the same
    witnesses plus a fixed extra schedule above (no randomness anywhere)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: strictly ascending primes, exponents >= 1.

    The empty tuple represents 1. Construction validates canonicity, so
    equality and hashing are structural.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError(f"primes must be strictly increasing, got {p} after {prev}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def squared(self) -> "Factorization":
        """Factorization of value()**2 (exponents doubled, never refactored)."""
        return Factorization(tuple((p, 2 * e) for p, e in self.factors))

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def least_prime(self) -> int:
        if not self.factors:
            raise ValueError("1 has no prime factors")
        return self.factors[0][0]

    def __mul__(self, other: "Factorization") -> "Factorization":
        """Product of the two represented values (exponents of shared primes add)."""
        merged: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return Factorization(tuple(sorted(merged.items())))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        """Parse the factored text form ``p1^e1*p2^e2*...`` (e.g. ``3^2*5``)."""
        text = text.strip()
        if text == "1":
            return cls(())
        factors = []
        for part in text.split("*"):
            if "^" in part:
                p_text, e_text = part.split("^", 1)
                p, e = int(p_text), int(e_text)
            else:
                p, e = int(part), 1
            factors.append((p, e))
        return cls(tuple(factors))


def factorize(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Canonical factorization of n >= 1.

    Trial division below 2^16, then Miller-Rabin plus Brent-rho splitting with
    a fixed parameter schedule. Deterministic. Raises FactorizationBudgetError
    once `budget` rho iterations are spent, so pathological inputs fail
    cleanly instead of hanging.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}; need n >= 1")
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1:
        effort = [budget]
        stack = [n]
        while stack:
            m = stack.pop()
            if m < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
                # below the trial limit squared anything surviving is prime
                found[m] = found.get(m, 0) + 1
                continue
            d = _brent_rho(m, effort)
            stack.append(d)
            stack.append(m // d)
    return Factorization(tuple(sorted(found.items())))


def _brent_rho(n: int, effort: list[int]) -> int:
    """Nontrivial factor of odd composite n (Brent's cycle variant).

    The polynomial offset walks c = 1, 2, 3, ... so results are deterministic.
    Decrements effort[0] per function evaluation.
    """
    root = isqrt(n)
    if root * root == n:
        return root
    for c in itertools.count(1):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            effort[0] -= r
            if effort[0] <= 0:
                raise FactorizationBudgetError(f"factoring budget exhausted on {n}")
            k = 0
            while k < r and g == 1:
                ys = y
                batch = min(128, r - k)
                for _ in range(batch):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                effort[0] -= batch
                if effort[0] <= 0:
                    raise FactorizationBudgetError(f"factoring budget exhausted on {n}")
                g = gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                effort[0] -= 1
                if effort[0] <= 0:
                    raise FactorizationBudgetError(f"factoring budget exhausted on {n}")
        if g != n:
            return g


def parse_factored(text: str, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Parse either a bare integer or the ``p1^e1*p2^e2`` factored form."""
    text = text.strip()
    if text.isdigit():
        return factorize(int(text), budget=budget)
    return Factorization.parse(text)


def sigma(f: Factorization) -> int:
    """Sum of divisors from the multiplicative closed form; sigma(1) = 1."""
    out = 1
    for p, e in f.factors:
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def sigma_oracle(n: int, cap: int = ORACLE_CAP) -> int:
    """Sum of divisors by direct enumeration (independent of factorize/sigma)."""
    if n < 1:
        raise ValueError(f"sigma_oracle needs n >= 1, got {n}")
    if n > cap:
        raise ValueError(f"sigma_oracle cap {cap} exceeded by {n}")
    total = 0
    root = isqrt(n)
    for d in range(1, root + 1):
        if n % d == 0:
            total += d + n // d
    if root * root == n:
        total -= root
    return total


def omega(f: Factorization) -> int:
    """Number of distinct prime factors."""
    return len(f.factors)


def valuation(p: int, f: Factorization) -> int:
    """Exponent of the prime p in f (0 if absent)."""
    if not is_prime(p):
        raise ValueError(f"valuation requires a prime, got {p}")
    for q, e in f.factors:
        if q == p:
            return e
    return 0


def is_perfect(n: int) -> bool:
    """True iff sigma(n) = 2n."""
    if n < 1:
        raise ValueError(f"is_perfect needs n >= 1, got {n}")
    return sigma(factorize(n)) == 2 * n
