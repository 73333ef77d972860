"""Exact proportions of the census counts, and analytic bounds on them.

The central quantity is the proportion p(q, n) of elements of the symmetric
group on n points having no cycle of length divisible by q. It equals the
partial product prod_{d <= n/q} (1 - 1/(dq)), is constant on the blocks
n = mq, ..., mq+q-1, and for q >= 2 is sandwiched between two explicit
expressions in c_q = exp(pi^2 / (6 q^2)).

Bounds are evaluated with interval arithmetic (mpmath.iv) and reported as
exact dyadic rationals taken from the outside of the enclosing interval:
the lower bound is rounded down and the upper bound up, so the bracketing
invariant lower <= exact <= upper is an exact Fraction comparison, not an
approximate one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv
from mpmath.libmp import to_rational

from .census import CensusEngine, CosetQuery, StatKind, default_engine
from .numeric import ExactRatio, factorial

__all__ = [
    "BoundReport",
    "probability",
    "avoidance_product",
    "sandwich_bounds",
    "erdos_turan_bound",
    "multiples_up_to",
]

# Working precision (bits) for the interval evaluation of the bounds.
BOUND_PRECISION_BITS = 60


def probability(
    kind: StatKind | str,
    q: int,
    n: int,
    *,
    engine: CensusEngine | None = None,
) -> ExactRatio:
    """Proportion of elements of the symmetric group on n points satisfying
    the statistic, as an exact reduced fraction."""
    if isinstance(kind, str):
        kind = StatKind.parse(kind)
    eng = engine if engine is not None else default_engine()
    return Fraction(eng.stat_count(CosetQuery(kind, q, n, 1)), factorial(n))


def avoidance_product(q: int, n: int) -> ExactRatio:
    """prod_{d=1..floor(n/q)} (1 - 1/(dq)): the no-cycle-divisible-by-q
    proportion in its product form."""
    if q < 1 or n < 0:
        raise ValueError(f"need q >= 1 and n >= 0, got q={q}, n={n}")
    out = Fraction(1)
    for d in range(1, n // q + 1):
        out *= Fraction(d * q - 1, d * q)
    return out


def _endpoint(x, which: int) -> Fraction:
    """Exact value of one endpoint of an interval scalar (0 lower, 1 upper)."""
    p, qq = to_rational(x._mpi_[which])
    return Fraction(int(p), int(qq))


@dataclass(frozen=True)
class BoundReport:
    """Sandwich bounds around the exact avoidance proportion at n = m*q.

    lower and upper are outward-rounded dyadic rationals enclosing
    c_q^{-1} (e m)^{-1/q} and c_q m^{-1/q}; exact is p(q, mq) itself.
    """

    q: int
    m: int
    lower: Fraction
    upper: Fraction
    exact: ExactRatio

    @property
    def holds(self) -> bool:
        return self.lower <= self.exact <= self.upper


def sandwich_bounds(q: int, m: int, *, precision_bits: int = BOUND_PRECISION_BITS) -> BoundReport:
    """Bracket p(q, mq) by the two c_q expressions; q >= 2, m >= 1.

    The interval evaluation runs at ``precision_bits`` working bits and the
    reported endpoints are rounded outward, so ``holds`` is a theorem about
    these specific rationals whenever it is true of the real expressions.
    """
    if q < 2:
        raise ValueError(f"bounds need q >= 2, got {q}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    old = iv.prec
    iv.prec = precision_bits
    try:
        log_cq = iv.pi**2 / (6 * q * q)
        log_m = iv.log(m)
        lower_iv = iv.exp(-log_cq - (1 + log_m) / q)
        upper_iv = iv.exp(log_cq - log_m / q)
        lower = _endpoint(lower_iv, 0)
        upper = _endpoint(upper_iv, 1)
    finally:
        iv.prec = old
    exact = Fraction(1)
    for d in range(1, m + 1):
        exact *= Fraction(d * q - 1, d * q)
    return BoundReport(q=q, m=m, lower=lower, upper=upper, exact=exact)


def erdos_turan_bound(lengths) -> ExactRatio:
    """Upper bound (sum of reciprocals)^-1 on the probability that a random
    permutation avoids all the given distinct cycle lengths.

    Exact rational. Values >= 1 are vacuous (probabilities never exceed 1);
    callers should cap at 1 when comparing.
    """
    lengths = list(lengths)
    if not lengths:
        raise ValueError("need at least one cycle length")
    if any(a < 1 for a in lengths) or len(set(lengths)) != len(lengths):
        raise ValueError(f"lengths must be distinct positive integers, got {lengths}")
    total = sum(Fraction(1, a) for a in lengths)
    return 1 / total


def multiples_up_to(q: int, n: int) -> list[int]:
    """[q, 2q, ..., floor(n/q) q]: the cycle lengths whose avoidance the
    no-multiple-of-q statistic asks about."""
    if q < 1 or n < q:
        raise ValueError(f"need n >= q >= 1, got q={q}, n={n}")
    return list(range(q, n + 1, q))
