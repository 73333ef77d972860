"""Exact integer helpers: factorials, prime-power components, divisors, residues.

Counts are plain ``int`` and ratios are ``fractions.Fraction``, both arbitrary
precision; nothing in this module ever rounds. All functions are pure and all
returned values are immutable, so they are safe to share between tasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Count",
    "ExactRatio",
    "PrimePower",
    "PrimePowerFactorization",
    "iverson",
    "factorial",
    "factor_prime_powers",
    "delta",
    "nabla",
    "divisors",
    "residue",
]

# Counts of permutations grow like n!; Python ints hold them exactly.
Count = int
ExactRatio = Fraction


def iverson(condition: bool) -> int:
    """1 if the condition holds, else 0."""
    return 1 if condition else 0


def factorial(n: int) -> Count:
    """n! as an exact integer, n >= 0."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


@dataclass(frozen=True)
class PrimePower:
    """A maximal prime-power divisor prime**exponent of some integer."""

    prime: int
    exponent: int
    value: int


@dataclass(frozen=True)
class PrimePowerFactorization:
    """An integer q split as q_1 * ... * q_r, powers of strictly increasing primes.

    The components q_j are pairwise coprime and their product is q; q = 1 has
    no components at all.
    """

    factors: tuple[PrimePower, ...]

    @property
    def value(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.value
        return out

    @property
    def components(self) -> tuple[int, ...]:
        """The prime-power values q_1, ..., q_r (primes ascending)."""
        return tuple(f.value for f in self.factors)


@lru_cache(maxsize=None)
def factor_prime_powers(q: int) -> PrimePowerFactorization:
    """Split q >= 1 into its maximal prime-power factors by trial division.

    Trial division is plenty here: the moduli this library works with are
    small (well below 10**6 in practice).
    """
    if q < 1:
        raise ValueError(f"cannot factor {q}; need a positive integer")
    factors = []
    rest = q
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            value = 1
            while rest % p == 0:
                rest //= p
                e += 1
                value *= p
            factors.append(PrimePower(p, e, value))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append(PrimePower(rest, 1, rest))
    return PrimePowerFactorization(tuple(factors))


def delta(q: int, k: int) -> int:
    """Product of the prime-power components of q that do NOT divide k.

    Together with ``nabla`` this splits q: delta(q, k) * nabla(q, k) == q.
    """
    if k < 1:
        raise ValueError(f"delta requires k >= 1, got {k}")
    out = 1
    for c in factor_prime_powers(q).components:
        if k % c != 0:
            out *= c
    return out


def nabla(q: int, k: int) -> int:
    """Product of the prime-power components of q that divide k."""
    if k < 1:
        raise ValueError(f"nabla requires k >= 1, got {k}")
    out = 1
    for c in factor_prime_powers(q).components:
        if k % c == 0:
            out *= c
    return out


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    if m < 1:
        raise ValueError(f"divisors requires m >= 1, got {m}")
    small = []
    large = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def residue(n: int, q: int) -> int:
    """The representative of n modulo q lying in [0, q); n may be negative."""
    if q < 1:
        raise ValueError(f"residue requires q >= 1, got {q}")
    return n % q
