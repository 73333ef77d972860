# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Reference semantics live in permcensus._pure; the two
must stay in lockstep (the suite checks outputs and op counts are equal)."""

import math

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

BACKEND_NAME = "ext"

KIND_OM = 0
KIND_OD = 1
KIND_OE = 2
KIND_CM = 3
KIND_CD = 4
KIND_CE = 5

_M64 = (1 << 64) - 1


cdef inline long long _init_value(int kind, long long m, long long n) noexcept nogil:
    if kind == 0 or kind == 3:  # OM, CM
        return 1 if n % m != 0 else 0
    if kind == 1:  # OD
        return 1 if m % n == 0 else 0
    if kind == 4:  # CD
        return 1 if m % n != 0 else 0
    return 1 if m != n else 0  # OE, CE


def fill_rows(int kind, list moduli, list plans, list rows, list cols,
              list n_dones, int n_target, list fact):
    """Extend the per-modulus census tables of one statistic up to n_target.

    Same contract as permcensus._pure.fill_rows; counts are Python ints,
    only the loop plumbing is compiled.
    """
    cdef Py_ssize_t nmods = len(moduli)
    cdef long long ops = 0
    cdef int n, k, t, start
    cdef Py_ssize_t mi
    cdef long long m, a
    cdef list row, col, src_list, coeff, srcs, plan_cols
    cdef tuple src_tuple
    cdef object acc, head
    cdef Py_ssize_t si

    start = min(n_dones) + 1
    for n in range(start, n_target + 1):
        for mi in range(nmods):
            if <int> n_dones[mi] >= n:
                continue
            m = moduli[mi]
            row = [0] * (n + 1)
            acc = _init_value(kind, m, n)
            row[n] = acc
            if kind == 0:  # order-multiple: head column varies with k
                src_list = plans[mi]
                for k in range(n - 1, 0, -1):
                    t = n - k
                    col = cols[<Py_ssize_t> src_list[k]]
                    acc = col[t] + t * acc
                    ops += 2
                    row[k] = acc
            elif kind == 2:  # order-equals: coefficient plus divisor sources
                coeff = <list> (<tuple> plans[mi])[0]
                srcs = <list> (<tuple> plans[mi])[1]
                for k in range(n - 1, 0, -1):
                    t = n - k
                    a = coeff[k]
                    if a == 1:
                        head = fact[t]
                    elif a == 0:
                        head = 0
                    else:
                        head = a * <object> fact[t]
                        ops += 1
                    src_tuple = srcs[k]
                    for si in range(len(src_tuple)):
                        col = cols[<Py_ssize_t> src_tuple[si]]
                        head = head + col[t]
                        ops += 1
                    acc = head + t * acc
                    ops += 2
                    row[k] = acc
            else:
                col = cols[mi]
                for k in range(n - 1, 0, -1):
                    t = n - k
                    if kind == 3:
                        hit = k % m != 0
                    elif kind == 4:
                        hit = m % k != 0
                    elif kind == 5:
                        hit = k != m
                    else:
                        hit = m % k == 0
                    if hit:
                        acc = col[t] + t * acc
                        ops += 2
                    else:
                        acc = t * acc
                        ops += 1
                    row[k] = acc
            (<list> rows[mi]).append(row)
            (<list> cols[mi]).append(row[1])
            n_dones[mi] = n
    return ops


def fq_extend(q, list table, int n_target):
    """Extend ``table`` so table[n] = prod_{j<=n} (j - [q divides j])."""
    cdef int j = <int> len(table)
    cdef long long qc = <long long> q if q <= n_target else 0
    while j <= n_target:
        if qc != 0 and j % qc == 0:
            table.append(table[j - 1] * (j - 1))
        else:
            table.append(table[j - 1] * j)
        j += 1


# ---------------------------------------------------------------------------
# sampling


cdef inline uint64_t _next64(uint64_t* state) noexcept nogil:
    cdef uint64_t z
    state[0] = state[0] + <uint64_t> 0x9E3779B97F4A7C15ULL
    z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t> 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * <uint64_t> 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t _randbelow(uint64_t* state, uint64_t bound) noexcept nogil:
    cdef uint64_t rem, limit, v
    if bound <= 1:
        return 0
    rem = ((~(<uint64_t> 0)) % bound + 1) % bound  # 2^64 mod bound
    limit = 0 - rem  # wraps to 2^64 - rem; 0 means accept everything
    while True:
        v = _next64(state)
        if limit == 0 or v < limit:
            return v % bound


cdef inline uint64_t _gcd64(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t tmp
    while b:
        tmp = a % b
        a = b
        b = tmp
    return a


def splitmix_stream(seed, Py_ssize_t count):
    """The first ``count`` raw 64-bit words of the stream (for tests)."""
    cdef uint64_t state = <uint64_t> (seed & _M64)
    cdef Py_ssize_t i
    out = []
    for i in range(count):
        out.append(_next64(&state))
    return out


def sample_orders(int n, Py_ssize_t count, seed):
    """Orders of ``count`` uniform random degree-n permutations; identical
    stream to the pure backend under the same seed."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    cdef uint64_t state = <uint64_t> (seed & _M64)
    cdef int* perm = <int*> malloc(n * sizeof(int))
    cdef int* lens = <int*> malloc(n * sizeof(int))
    cdef unsigned char* seen = <unsigned char*> malloc(n)
    if perm == NULL or lens == NULL or seen == NULL:
        free(perm); free(lens); free(seen)
        raise MemoryError()
    cdef Py_ssize_t it
    cdef int i, j, s, length, ncyc
    cdef uint64_t jdraw, order, g, scaled, l64
    cdef bint overflow
    orders = []
    try:
        for it in range(count):
            for i in range(n):
                perm[i] = i
            for i in range(n - 1, 0, -1):
                jdraw = _randbelow(&state, <uint64_t> (i + 1))
                j = <int> jdraw
                perm[i], perm[j] = perm[j], perm[i]
            for i in range(n):
                seen[i] = 0
            ncyc = 0
            for s in range(n):
                if not seen[s]:
                    length = 0
                    j = s
                    while not seen[j]:
                        seen[j] = 1
                        j = perm[j]
                        length += 1
                    lens[ncyc] = length
                    ncyc += 1
            order = 1
            overflow = False
            for i in range(ncyc):
                l64 = <uint64_t> lens[i]
                g = _gcd64(order, l64)
                scaled = order // g
                if scaled > (~(<uint64_t> 0)) // l64:
                    overflow = True
                    break
                order = scaled * l64
            if overflow:
                orders.append(math.lcm(*[lens[i] for i in range(ncyc)]))
            else:
                orders.append(order)
    finally:
        free(perm)
        free(lens)
        free(seen)
    return orders
