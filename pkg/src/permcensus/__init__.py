"""permcensus: exact census of symmetric-group cosets by order and cycle
statistics, with analytic bounds and black-box degree identification.

The heavy loops (big-integer table fill, bulk order sampling) run in a
compiled extension when available and in pure Python otherwise; see
``permcensus.backend_name``.
"""

__version__ = "0.1.0"

from ._backend import BACKEND_NAME as backend_name
from .census import (
    ALL_STAT_KINDS,
    BaseStat,
    CensusEngine,
    CosetQuery,
    StatKind,
    complement,
    coset_size,
    default_engine,
    f_closed,
    ncm_closed,
    stat_count,
)
from .identify import (
    DegreeEstimate,
    OrderSample,
    Rng,
    disambiguate,
    identify_degree,
    infer_block,
    order_of,
    random_permutation,
    sample_orders,
    simulate_orders,
)
from .numeric import (
    Count,
    ExactRatio,
    PrimePowerFactorization,
    delta,
    divisors,
    factor_prime_powers,
    factorial,
    nabla,
    residue,
)
from .oracle import class_size, oracle_coset, oracle_sym, partitions, stat_holds
from .stats import (
    BoundReport,
    avoidance_product,
    erdos_turan_bound,
    multiples_up_to,
    probability,
    sandwich_bounds,
)

__all__ = [
    "__version__",
    "backend_name",
    "ALL_STAT_KINDS",
    "BaseStat",
    "BoundReport",
    "CensusEngine",
    "CosetQuery",
    "Count",
    "DegreeEstimate",
    "ExactRatio",
    "OrderSample",
    "PrimePowerFactorization",
    "Rng",
    "StatKind",
    "avoidance_product",
    "class_size",
    "complement",
    "coset_size",
    "default_engine",
    "delta",
    "disambiguate",
    "divisors",
    "erdos_turan_bound",
    "f_closed",
    "factor_prime_powers",
    "factorial",
    "identify_degree",
    "infer_block",
    "multiples_up_to",
    "nabla",
    "ncm_closed",
    "oracle_coset",
    "oracle_sym",
    "order_of",
    "partitions",
    "probability",
    "random_permutation",
    "residue",
    "sample_orders",
    "simulate_orders",
    "stat_count",
    "stat_holds",
]
