"""Brute-force ground truth for the census, deliberately naive.

Two independent routes: summation over conjugacy classes (partitions) for
whole symmetric groups, and direct enumeration of the point-stabilizer
cosets C(n, k). Both are exponential-ish in n and capped by configurable
limits; their job is to validate the recurrence engine on small inputs,
not to be fast.

Permutations are image tuples on points 0..n-1 (entry i is the image of
point i). The coset C(n, k) consists of the products a * b where a ranges
over the permutations fixing points 0..k-2 and b is the k-cycle
(0 1 ... k-1); only the cycle type of the product matters here, and that
is independent of which factor acts first, so the composition convention
is an explicit, documented parameter rather than a hidden choice.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

from .census import BaseStat, StatKind
from .numeric import Count, factorial

__all__ = [
    "DEFAULT_SYM_LIMIT",
    "DEFAULT_COSET_LIMIT",
    "partitions",
    "class_size",
    "stat_holds",
    "oracle_sym",
    "oracle_coset",
    "coset_cycle_types",
    "cycle_type",
]

# Enumeration caps, overridable per call: partitions of 14 and cosets of
# 9 moved points keep a full equivalence sweep in the minutes range.
DEFAULT_SYM_LIMIT = 14
DEFAULT_COSET_LIMIT = 9


def partitions(n: int):
    """Yield every partition of n exactly once, as a descending tuple."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")

    def gen(remaining, cap, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from gen(remaining - part, part, prefix)
            prefix.pop()

    yield from gen(n, n, [])


def class_size(parts: tuple[int, ...], n: int) -> Count:
    """Number of elements of the symmetric group on n points whose cycle
    type is ``parts``: n! over the centralizer order prod j**m_j * m_j!."""
    if sum(parts) != n or any(p < 1 for p in parts):
        raise ValueError(f"{parts} is not a partition of {n}")
    centralizer = 1
    for part, mult in Counter(parts).items():
        centralizer *= part**mult * factorial(mult)
    return factorial(n) // centralizer


def stat_holds(parts: tuple[int, ...], base: BaseStat, q: int) -> bool:
    """Whether an element of cycle type ``parts`` satisfies the base
    statistic: order statistics use the lcm of the parts, cycle statistics
    scan the parts themselves."""
    if base is BaseStat.CYCLE_MULTIPLE:
        return any(p % q == 0 for p in parts)
    if base is BaseStat.CYCLE_DIVIDES:
        return any(q % p == 0 for p in parts)
    if base is BaseStat.CYCLE_EQUALS:
        return any(p == q for p in parts)
    order = math.lcm(*parts)
    if base is BaseStat.ORDER_MULTIPLE:
        return order % q == 0
    if base is BaseStat.ORDER_DIVIDES:
        return q % order == 0
    return order == q  # ORDER_EQUALS


def oracle_sym(kind: StatKind, q: int, n: int, *, limit: int = DEFAULT_SYM_LIMIT) -> Count:
    """Count by summing class sizes over all partitions of n."""
    if n > limit:
        raise ValueError(f"partition oracle limited to n <= {limit}, got {n}")
    if n < 1 or q < 1:
        raise ValueError(f"need n >= 1 and q >= 1, got n={n}, q={q}")
    matched = 0
    for parts in partitions(n):
        if stat_holds(parts, kind.base, q):
            matched += class_size(parts, n)
    return factorial(n) - matched if kind.complemented else matched


def cycle_type(images) -> tuple[int, ...]:
    """Cycle lengths of an image tuple, descending."""
    n = len(images)
    seen = bytearray(n)
    parts = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = images[j]
                length += 1
            parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def coset_cycle_types(n: int, k: int, *, convention: str = "ab") -> Counter:
    """Multiset of cycle types over all (n-k+1)! elements of C(n, k).

    convention "ab" applies the stabilizer element first and the k-cycle
    second; "ba" the other way round. The two products of a given pair are
    mutually inverse, so the returned multiset is the same either way.
    """
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if convention not in ("ab", "ba"):
        raise ValueError(f"convention must be 'ab' or 'ba', got {convention!r}")
    b = list(range(n))
    for i in range(k):
        b[i] = (i + 1) % k
    moved = range(k - 1, n)
    types: Counter = Counter()
    for images in itertools.permutations(moved):
        a = list(range(k - 1)) + list(images)
        if convention == "ab":
            prod = tuple(b[a[x]] for x in range(n))
        else:
            prod = tuple(a[b[x]] for x in range(n))
        types[cycle_type(prod)] += 1
    return types


def oracle_coset(
    kind: StatKind,
    q: int,
    n: int,
    k: int,
    *,
    limit: int = DEFAULT_COSET_LIMIT,
    convention: str = "ab",
) -> Count:
    """Count by enumerating the coset C(n, k) element by element."""
    if n - k + 1 > limit:
        raise ValueError(
            f"coset oracle limited to n-k+1 <= {limit}, got {n - k + 1}"
        )
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    types = coset_cycle_types(n, k, convention=convention)
    matched = sum(
        count for parts, count in types.items() if stat_holds(parts, kind.base, q)
    )
    return factorial(n - k + 1) - matched if kind.complemented else matched
