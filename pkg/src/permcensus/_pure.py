"""Pure-Python reference implementations of the hot kernels.

``permcensus._speedups`` (a compiled extension) provides the same entry
points with identical semantics, and ``permcensus._backend`` picks one of
the two at import time. Keep the twins in lockstep: the test suite asserts
byte-identical outputs and identical operation counts across backends.

Kernel surface:

* ``fill_rows``      extend the memoized census tables of one statistic
* ``fq_extend``      extend a table of the cycle-avoidance products f_q
* ``sample_orders``  bulk element orders of uniformly random permutations
* ``splitmix_stream`` raw generator words, exposed for cross-backend tests
"""

from __future__ import annotations

import math

BACKEND_NAME = "pure"

_M64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# Statistic ids shared with the compiled kernel and the census module.
KIND_OM, KIND_OD, KIND_OE, KIND_CM, KIND_CD, KIND_CE = range(6)


def _init_value(kind: int, m: int, n: int) -> int:
    """Natural count on the one-element coset C(n, n), a single n-cycle."""
    if kind == KIND_OM or kind == KIND_CM:
        return 1 if n % m != 0 else 0
    if kind == KIND_OD:
        return 1 if m % n == 0 else 0
    if kind == KIND_CD:
        return 1 if m % n != 0 else 0
    return 1 if m != n else 0  # KIND_OE, KIND_CE


def fill_rows(kind, moduli, plans, rows, cols, n_dones, n_target, fact):
    """Extend the per-modulus census tables of one statistic up to n_target.

    For modulus index mi, ``rows[mi][n][k]`` is the natural count on the
    coset C(n, k) and ``cols[mi][n]`` caches the k = 1 column (the full
    symmetric group), which is what the cross-modulus recursions read.
    Tables are extended in place, one full row per degree n, never touching
    an entry twice; ``n_dones`` records per-modulus progress.

    ``plans`` carries the precomputed head descriptors (see census._Plan):
    nothing for the single-modulus statistics, source column indexes for
    the order-multiple statistic, and (coefficient, sources) pairs for the
    order-equals statistic. ``fact`` must hold factorials up to n_target.

    Returns the number of big-integer operations performed, the
    instrumentation behind the quadratic-cost contract.
    """
    ops = 0
    nmods = len(moduli)
    for n in range(min(n_dones) + 1, n_target + 1):
        for mi in range(nmods):
            if n_dones[mi] >= n:
                continue
            m = moduli[mi]
            row = [0] * (n + 1)
            acc = _init_value(kind, m, n)
            row[n] = acc
            if kind == KIND_OM:
                src = plans[mi]
                for k in range(n - 1, 0, -1):
                    t = n - k
                    acc = cols[src[k]][t] + t * acc
                    ops += 2
                    row[k] = acc
            elif kind == KIND_OE:
                coeff, srcs = plans[mi]
                for k in range(n - 1, 0, -1):
                    t = n - k
                    a = coeff[k]
                    if a == 1:
                        head = fact[t]
                    elif a == 0:
                        head = 0
                    else:
                        head = a * fact[t]
                        ops += 1
                    for s in srcs[k]:
                        head = head + cols[s][t]
                        ops += 1
                    acc = head + t * acc
                    ops += 2
                    row[k] = acc
            else:
                col = cols[mi]
                for k in range(n - 1, 0, -1):
                    t = n - k
                    if kind == KIND_CM:
                        hit = k % m != 0
                    elif kind == KIND_CD:
                        hit = m % k != 0
                    elif kind == KIND_CE:
                        hit = k != m
                    else:  # KIND_OD
                        hit = m % k == 0
                    if hit:
                        acc = col[t] + t * acc
                        ops += 2
                    else:
                        acc = t * acc
                        ops += 1
                    row[k] = acc
            rows[mi].append(row)
            cols[mi].append(row[1])
            n_dones[mi] = n
    return ops


def fq_extend(q, table, n_target):
    """Extend ``table`` so table[n] = prod_{j<=n} (j - [q divides j])."""
    j = len(table)
    while j <= n_target:
        table.append(table[j - 1] * (j - 1 if j % q == 0 else j))
        j += 1


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class Rng:
    """SplitMix64 generator with unbiased bounded draws.

    This is the documented sampling contract: a 64-bit SplitMix64 stream,
    bounded draws by rejection below the largest multiple of the bound,
    and Fisher-Yates shuffling from the top index down. Both backends
    implement exactly this, so a seed fixes the sample everywhere.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _M64
        return _mix(self.state)

    def randbelow(self, bound: int) -> int:
        """Uniform draw from [0, bound); bound <= 1 consumes no output."""
        if bound <= 1:
            return 0
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next64()
            if v < limit:
                return v % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


def splitmix_stream(seed: int, count: int) -> list[int]:
    """The first ``count`` raw 64-bit words of the stream (for tests)."""
    rng = Rng(seed)
    return [rng.next64() for _ in range(count)]


def sample_orders(n: int, count: int, seed: int) -> list[int]:
    """Orders of ``count`` uniform random elements of the symmetric group.

    Equivalent to shuffling the identity arrangement of n points once per
    sample with one continuing ``Rng(seed)`` stream and taking the lcm of
    the cycle lengths each time.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = Rng(seed)
    identity = list(range(n))
    perm = list(range(n))
    lcm = math.lcm
    orders = []
    for _ in range(count):
        perm[:] = identity
        rng.shuffle(perm)
        seen = bytearray(n)
        order = 1
        for s in range(n):
            if not seen[s]:
                length = 0
                j = s
                while not seen[j]:
                    seen[j] = 1
                    j = perm[j]
                    length += 1
                order = lcm(order, length)
        orders.append(order)
    return orders
