"""Census of symmetric-group cosets by order and cycle statistics.

The objects being counted live in C(n, k), the coset of the pointwise
stabilizer of {1, ..., k-1} by the cycle (1 2 ... k); C(n, 1) is the whole
symmetric group on n points and C(n, n) is the single n-cycle. For a
modulus q there are six base statistics of an element: order a multiple
of q, order dividing q, order equal to q, and the same three for the
lengths of its cycles. Each base statistic also has a complemented form
(count of elements NOT satisfying it), twelve statistics in all.

Counting works by dynamic programming on the coset decomposition

    C(n, k)  =  {elements fixing k} . (1 ... k)   plus
                (n - k) conjugate copies of C(n, k + 1),

which makes every count a head term read off a smaller symmetric group
plus (n - k) times the count one step further into the coset tower. The
head term may change modulus: the order of a product of disjoint cycles
is the lcm of their lengths, so order statistics recurse into the part of
q coprime to k (``numeric.delta``) and, for order-equals, into a divisor
sum over the complementary part (``numeric.nabla``). Tables are memoized
per (statistic, modulus), so a full census up to degree n costs O(n^2)
big-integer operations times a small divisor-count factor.

For the no-cycle-length-divisible-by-q count there is also a closed form,
``ncm_closed``, built from the partial products f_q(n) = prod (j - [q|j]).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _backend, numeric
from .numeric import Count, delta, divisors, factorial, nabla

__all__ = [
    "BaseStat",
    "StatKind",
    "CosetQuery",
    "CensusEngine",
    "ALL_STAT_KINDS",
    "coset_size",
    "f_closed",
    "ncm_closed",
    "stat_count",
    "complement",
    "default_engine",
]


class BaseStat(Enum):
    """The six uncomplemented statistics, keyed by their two-letter codes."""

    ORDER_MULTIPLE = "om"
    ORDER_DIVIDES = "od"
    ORDER_EQUALS = "oe"
    CYCLE_MULTIPLE = "cm"
    CYCLE_DIVIDES = "cd"
    CYCLE_EQUALS = "ce"


_KIND_IDS = {
    BaseStat.ORDER_MULTIPLE: _backend.KIND_OM,
    BaseStat.ORDER_DIVIDES: _backend.KIND_OD,
    BaseStat.ORDER_EQUALS: _backend.KIND_OE,
    BaseStat.CYCLE_MULTIPLE: _backend.KIND_CM,
    BaseStat.CYCLE_DIVIDES: _backend.KIND_CD,
    BaseStat.CYCLE_EQUALS: _backend.KIND_CE,
}

# Orientation the recurrences naturally produce: the complemented count for
# everything except order-divides.
_NATURAL_BARRED = {
    BaseStat.ORDER_MULTIPLE: True,
    BaseStat.ORDER_DIVIDES: False,
    BaseStat.ORDER_EQUALS: True,
    BaseStat.CYCLE_MULTIPLE: True,
    BaseStat.CYCLE_DIVIDES: True,
    BaseStat.CYCLE_EQUALS: True,
}


@dataclass(frozen=True)
class StatKind:
    """One of the twelve statistics: a base plus a complement flag.

    The string codes prefix complemented kinds with "n": ``ncm`` counts
    elements with no cycle length a multiple of q, ``cm`` the rest.
    """

    base: BaseStat
    complemented: bool = False

    @classmethod
    def parse(cls, name: str) -> "StatKind":
        code = name.strip().lower()
        bare = code[1:] if code.startswith("n") else code
        try:
            base = BaseStat(bare)
        except ValueError:
            valid = ", ".join(k.code for k in ALL_STAT_KINDS)
            raise ValueError(f"unknown stat {name!r}; expected one of: {valid}") from None
        return cls(base, code.startswith("n"))

    @property
    def code(self) -> str:
        return ("n" if self.complemented else "") + self.base.value

    def complement(self) -> "StatKind":
        return StatKind(self.base, not self.complemented)


ALL_STAT_KINDS = tuple(StatKind(b, c) for b in BaseStat for c in (False, True))


@dataclass(frozen=True)
class CosetQuery:
    """A request for one exact count: statistic, modulus q, and coset C(n, k)."""

    kind: StatKind
    q: int
    n: int
    k: int = 1

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"modulus must be positive, got q={self.q}")
        if self.n < 1 or not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")


def coset_size(n: int, k: int) -> Count:
    """|C(n, k)| = (n - k + 1)!, the size of a point stabilizer one step up."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return factorial(n - k + 1)


# ---------------------------------------------------------------------------
# closed form


_fq_tables: dict[int, list[int]] = {}


def _fq_table(q: int, n: int) -> list[int]:
    if q < 1:
        raise ValueError(f"modulus must be positive, got q={q}")
    table = _fq_tables.setdefault(q, [1])
    if len(table) <= n:
        _backend.fq_extend(q, table, n)
    return table


def f_closed(q: int, n: int) -> Count:
    """f_q(n) = prod_{j=1..n} (j - [q divides j]); the empty product is 1.

    This counts the elements of the symmetric group on n points having no
    cycle of length divisible by q.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _fq_table(q, n)[n]


def ncm_closed(q: int, n: int, k: int) -> Count:
    """Closed form for the count of elements of C(n, k) with no cycle length
    divisible by q:  f_q(n-k+1) - [(-k) mod q <= q-2-(n mod q)] * f_q(n-k).

    Must agree exactly with the recurrence census for every (q, n, k); the
    k = 1 case reduces to f_q(n).
    """
    if q < 1:
        raise ValueError(f"modulus must be positive, got q={q}")
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    table = _fq_table(q, n - k + 1)
    s = q - 2 - numeric.residue(n, q)
    if numeric.residue(-k, q) <= s:
        return table[n - k + 1] - table[n - k]
    return table[n - k + 1]


# ---------------------------------------------------------------------------
# recurrence engine


class _Table:
    """Memoized census rows for one (base statistic, modulus) pair.

    rows[n][k] is the natural-orientation count on C(n, k); cols[n] is the
    k = 1 column. Entries are written once and never mutated afterwards.
    """

    __slots__ = ("rows", "cols", "n_done")

    def __init__(self):
        self.rows: list = [None]
        self.cols: list = [None]
        self.n_done = 0


class _Plan:
    """Head descriptors for the recurrence of one base statistic at one
    top-level modulus, precomputed for every k.

    moduli lists the modulus closure the recursion can reach (ascending):
    just {q} for the single-modulus statistics, component products for
    order-multiple, all divisors for order-equals. per_mod[mi] holds the
    k-indexed descriptor arrays read by the fill kernels.
    """

    __slots__ = ("moduli", "index", "per_mod", "n_planned")

    def __init__(self, base: BaseStat, q: int):
        if base is BaseStat.ORDER_MULTIPLE:
            prods = {1}
            for c in numeric.factor_prime_powers(q).components:
                prods |= {p * c for p in prods}
            self.moduli = sorted(prods)
        elif base is BaseStat.ORDER_EQUALS:
            self.moduli = divisors(q)
        else:
            self.moduli = [q]
        self.index = {m: i for i, m in enumerate(self.moduli)}
        if base is BaseStat.ORDER_MULTIPLE:
            self.per_mod = [[0] for _ in self.moduli]  # src index, k-indexed
        elif base is BaseStat.ORDER_EQUALS:
            self.per_mod = [([0], [()]) for _ in self.moduli]  # (coeff, srcs)
        else:
            self.per_mod = [None for _ in self.moduli]
        self.n_planned = 0

    def extend(self, base: BaseStat, n_target: int) -> None:
        if self.n_planned >= n_target:
            return
        for k in range(self.n_planned + 1, n_target + 1):
            for mi, m in enumerate(self.moduli):
                if base is BaseStat.ORDER_MULTIPLE:
                    self.per_mod[mi].append(self.index[delta(m, k)])
                elif base is BaseStat.ORDER_EQUALS:
                    coeff, srcs = self.per_mod[mi]
                    if m % k == 0:
                        dlt = delta(m, k)
                        ds = divisors(nabla(m, k))
                        coeff.append(1 - len(ds))
                        srcs.append(tuple(self.index[d * dlt] for d in ds))
                    else:
                        coeff.append(1)
                        srcs.append(())
        self.n_planned = n_target


class CensusEngine:
    """Memoized evaluator for all twelve statistics over the cosets C(n, k).

    One engine owns its tables and is meant to be driven by a single task;
    results are plain ints, safe to hand anywhere. op_count accumulates the
    number of big-integer operations the fill kernels have performed, which
    the performance contract reads.
    """

    def __init__(self):
        self._tables: dict[tuple[BaseStat, int], _Table] = {}
        self._plans: dict[tuple[BaseStat, int], _Plan] = {}
        self._facts: list[int] = [1]
        self.op_count = 0

    def _fact_list(self, n: int) -> list[int]:
        facts = self._facts
        for j in range(len(facts), n + 1):
            facts.append(facts[j - 1] * j)
        return facts

    def _ensure(self, base: BaseStat, q: int, n: int) -> _Table:
        plan = self._plans.get((base, q))
        if plan is None:
            plan = self._plans[(base, q)] = _Plan(base, q)
        tables = [
            self._tables.setdefault((base, m), _Table()) for m in plan.moduli
        ]
        mine = tables[plan.index[q]]
        if mine.n_done >= n and all(t.n_done >= n for t in tables):
            return mine
        plan.extend(base, n)
        fact = self._fact_list(n)
        n_dones = [t.n_done for t in tables]
        self.op_count += _backend.fill_rows_checked(
            _KIND_IDS[base],
            plan.moduli,
            plan.per_mod,
            [t.rows for t in tables],
            [t.cols for t in tables],
            n_dones,
            n,
            fact,
        )
        for t, nd in zip(tables, n_dones):
            t.n_done = nd
        return mine

    def stat_count(self, query: CosetQuery) -> Count:
        """Exact number of elements of C(n, k) satisfying the statistic."""
        base = query.kind.base
        table = self._ensure(base, query.q, query.n)
        natural = table.rows[query.n][query.k]
        if query.kind.complemented == _NATURAL_BARRED[base]:
            return natural
        return factorial(query.n - query.k + 1) - natural

    def count(self, kind: StatKind | str, q: int, n: int, k: int = 1) -> Count:
        """Convenience wrapper; ``kind`` may be a code string like "ncm"."""
        if isinstance(kind, str):
            kind = StatKind.parse(kind)
        return self.stat_count(CosetQuery(kind, q, n, k))

    def complement(self, query: CosetQuery) -> Count:
        """Count of elements of C(n, k) NOT satisfying the queried statistic.

        Identical to querying the flipped kind: stat_count plus complement
        always add up to the coset size.
        """
        return coset_size(query.n, query.k) - self.stat_count(query)


_default = CensusEngine()


def default_engine() -> CensusEngine:
    """The shared module-level engine (single-task use, like any engine)."""
    return _default


def stat_count(query: CosetQuery) -> Count:
    return _default.stat_count(query)


def complement(query: CosetQuery) -> Count:
    return _default.complement(query)
