"""Degree identification of a black-box symmetric group from element orders.

Given only the orders of uniformly random elements of a group known to be
symmetric of unknown degree, the observed fraction of odd orders pins the
degree down to a block {m, m+1} with m even (the odd-order proportion takes
one value per block and decreases strictly from block to block). The two
remaining hypotheses are split by the smallest prime p dividing m+1: the
proportion of elements with order coprime to p drops by exactly the factor
m/(m+1) between degree m and degree m+1, so a binomial likelihood
comparison on the observed coprime count decides, with a reportable
confidence.

Sampling is deterministic under a seed (see ``permcensus._pure.Rng`` for
the documented stream contract), and orders are exact integers throughout;
coprimality is tested with integer gcd, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from . import _backend
from .census import CensusEngine, StatKind, default_engine, f_closed
from .numeric import ExactRatio, factor_prime_powers, factorial
from .stats import probability

__all__ = [
    "OrderSample",
    "DegreeEstimate",
    "Rng",
    "random_permutation",
    "order_of",
    "sample_orders",
    "simulate_orders",
    "load_orders",
    "odd_order_fraction",
    "infer_block",
    "disambiguate",
    "identify_degree",
]

Rng = _backend.Rng

_NOM = StatKind.parse("nom")


@dataclass(frozen=True)
class OrderSample:
    """A multiset of element orders drawn from one black-box group."""

    orders: tuple[int, ...]
    source_seed: int | None = None

    def __post_init__(self):
        if not self.orders:
            raise ValueError("empty order sample")
        if any(o < 1 for o in self.orders):
            raise ValueError("element orders must be positive integers")

    @property
    def sample_count(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class DegreeEstimate:
    """Outcome of the two-stage identification.

    block is (m, m+1) with m even; chosen_n is one of the two. The expected
    coprime fractions are the exact model values under each hypothesis, and
    confidence is the chosen hypothesis' share of the two binomial
    likelihoods (in [0, 1], with 1 meaning the alternative is impossible).
    """

    block: tuple[int, int]
    chosen_n: int
    discriminating_prime: int
    sample_count: int
    observed_coprime_fraction: ExactRatio
    expected_coprime_fractions: tuple[ExactRatio, ExactRatio]
    confidence: float
    odd_order_fraction: ExactRatio | None = None

    def to_record(self) -> dict:
        """JSON-ready dict with stable field names."""
        m, m1 = self.block
        rec = {
            "block": [m, m1],
            "chosen_n": self.chosen_n,
            "discriminating_prime": self.discriminating_prime,
            "sample_count": self.sample_count,
            "observed_coprime_fraction": _frac_record(self.observed_coprime_fraction),
            "expected_coprime_fractions": {
                str(m): _frac_record(self.expected_coprime_fractions[0]),
                str(m1): _frac_record(self.expected_coprime_fractions[1]),
            },
            "confidence": self.confidence,
        }
        if self.odd_order_fraction is not None:
            rec["odd_order_fraction"] = _frac_record(self.odd_order_fraction)
        return rec


def _frac_record(f: Fraction) -> dict:
    return {"exact": f"{f.numerator}/{f.denominator}", "approx": float(f)}


# ---------------------------------------------------------------------------
# sampling


def random_permutation(n: int, rng: Rng) -> list[int]:
    """A uniformly random image list on points 0..n-1 (Fisher-Yates)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def order_of(perm) -> int:
    """Order of a permutation: the lcm of its cycle lengths, exact."""
    n = len(perm)
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
            order = math.lcm(order, length)
    return order


def sample_orders(n: int, count: int, seed: int) -> list[int]:
    """Orders of ``count`` independent uniform elements, kernel-backed.

    Matches [order_of(random_permutation(n, rng)) for _ in range(count)]
    with rng = Rng(seed), on either backend.
    """
    if count < 1:
        raise ValueError(f"need count >= 1, got {count}")
    return _backend.sample_orders(n, count, seed)


def simulate_orders(n: int, count: int, seed: int) -> OrderSample:
    """An OrderSample drawn from a simulated symmetric group of degree n."""
    return OrderSample(tuple(sample_orders(n, count, seed)), source_seed=seed)


def load_orders(path) -> OrderSample:
    """Read a sample from a file of one decimal order per line.

    Blank lines are ignored; anything else that does not parse as a
    positive integer raises ValueError.
    """
    orders = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text:
                continue
            try:
                value = int(text)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not an integer: {text!r}") from None
            if value < 1:
                raise ValueError(f"{path}:{lineno}: orders must be >= 1, got {value}")
            orders.append(value)
    if not orders:
        raise ValueError(f"{path}: no orders found")
    return OrderSample(tuple(orders))


# ---------------------------------------------------------------------------
# estimation


def odd_order_fraction(sample: OrderSample) -> ExactRatio:
    """Fraction of sampled orders that are odd."""
    odd = sum(1 for o in sample.orders if o & 1)
    return Fraction(odd, sample.sample_count)


def _odd_probability(n: int) -> Fraction:
    # Proportion of odd-order elements of the symmetric group on n points;
    # one value per block {2t, 2t+1}.
    return Fraction(f_closed(2, n), factorial(n))


def infer_block(fraction, n_max: int) -> tuple[int, int]:
    """The block (m, m+1), m even, whose odd-order proportion is nearest the
    observed fraction; blocks are searched for m up to n_max.

    The block proportions decrease strictly, so a monotone scan with exact
    rational comparisons finds the nearest one; ties go to the smaller
    block.
    """
    frac = Fraction(fraction)
    if not 0 <= frac <= 1:
        raise ValueError(f"fraction must lie in [0, 1], got {fraction}")
    if n_max < 2:
        raise ValueError(f"need n_max >= 2 to hold a block, got {n_max}")
    best_m = 2
    best_err = abs(_odd_probability(2) - frac)
    for m in range(4, n_max + 1, 2):
        err = abs(_odd_probability(m) - frac)
        if err < best_err:
            best_m, best_err = m, err
        else:
            break  # proportions are monotone, the error only grows from here
    return (best_m, best_m + 1)


def _log_binomial_likelihood(e: Fraction, hits: int, total: int) -> float:
    # log of e^hits (1-e)^(total-hits); the binomial coefficient cancels in
    # comparisons. Exact endpoints: impossible observations give -inf.
    misses = total - hits
    out = 0.0
    if hits:
        if e == 0:
            return -math.inf
        out += hits * (math.log(e.numerator) - math.log(e.denominator))
    if misses:
        if e == 1:
            return -math.inf
        anti = 1 - e
        out += misses * (math.log(anti.numerator) - math.log(anti.denominator))
    return out


def disambiguate(
    sample: OrderSample,
    block: tuple[int, int],
    *,
    engine: CensusEngine | None = None,
) -> DegreeEstimate:
    """Decide between the two degrees of a block from one order sample.

    The discriminating prime is the smallest prime divisor of m+1 (a prime
    dividing only m would give both hypotheses the same coprime-order
    proportion and decide nothing). The hypothesis with the larger binomial
    likelihood on the observed coprime count wins; ties go to m.
    """
    m, m1 = block
    if m < 2 or m % 2 != 0 or m1 != m + 1:
        raise ValueError(f"block must be (m, m+1) with m even >= 2, got {block}")
    eng = engine if engine is not None else default_engine()
    p = factor_prime_powers(m1).factors[0].prime
    expected_m = probability(_NOM, p, m, engine=eng)
    expected_m1 = probability(_NOM, p, m1, engine=eng)
    total = sample.sample_count
    hits = sum(1 for o in sample.orders if math.gcd(o, p) == 1)
    observed = Fraction(hits, total)

    log_m = _log_binomial_likelihood(expected_m, hits, total)
    log_m1 = _log_binomial_likelihood(expected_m1, hits, total)
    if log_m1 > log_m:
        chosen, log_chosen, log_other = m1, log_m1, log_m
    else:
        chosen, log_chosen, log_other = m, log_m, log_m1
    if math.isinf(log_other):
        confidence = 1.0
    else:
        confidence = 1.0 / (1.0 + math.exp(log_other - log_chosen))

    return DegreeEstimate(
        block=block,
        chosen_n=chosen,
        discriminating_prime=p,
        sample_count=total,
        observed_coprime_fraction=observed,
        expected_coprime_fractions=(expected_m, expected_m1),
        confidence=confidence,
    )


def identify_degree(
    sample: OrderSample,
    *,
    n_max: int = 200,
    engine: CensusEngine | None = None,
) -> DegreeEstimate:
    """Full pipeline: odd-order fraction, block inference, disambiguation."""
    odd = odd_order_fraction(sample)
    block = infer_block(odd, n_max)
    estimate = disambiguate(sample, block, engine=engine)
    return replace(estimate, odd_order_fraction=odd)
