"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable PERMCENSUS_PURE (to anything non-empty) forces the
pure-Python kernels. Both expose the same surface, and the suite checks
them against each other, so the choice only affects speed.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("PERMCENSUS_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND_NAME: str = _impl.BACKEND_NAME

fill_rows = _impl.fill_rows
fq_extend = _impl.fq_extend
sample_orders = _impl.sample_orders
splitmix_stream = _impl.splitmix_stream

# The shuffle driver for one-at-a-time draws is always the pure one; only
# bulk sampling goes through the compiled kernel.
Rng = _pure.Rng

KIND_OM = _pure.KIND_OM
KIND_OD = _pure.KIND_OD
KIND_OE = _pure.KIND_OE
KIND_CM = _pure.KIND_CM
KIND_CD = _pure.KIND_CD
KIND_CE = _pure.KIND_CE

# The compiled table kernel does modulus arithmetic in 64-bit integers.
MAX_KERNEL_MODULUS = 1 << 62


def fill_rows_checked(kind, moduli, plans, rows, cols, n_dones, n_target, fact):
    """Dispatch to the active kernel, or the pure one for oversized moduli."""
    if _impl is not _pure and moduli and max(moduli) >= MAX_KERNEL_MODULUS:
        return _pure.fill_rows(kind, moduli, plans, rows, cols, n_dones, n_target, fact)
    return fill_rows(kind, moduli, plans, rows, cols, n_dones, n_target, fact)
