"""
Operation counters and the analytical cost formulas of the bit-pattern
list sorter.

This package contains:
- Counters, the per-invocation tally threaded through every sorter
- MemoryModel and the auxiliary memory bound T(M)
- The split+merge operation coefficient and its prediction for n nodes
"""
from .counters import Counters, MemoryModel
from .formulas import (
    aux_memory_bound,
    bucket_memory,
    coefficient,
    crossover_n,
    predicted_ops,
)

__all__ = [
    "Counters",
    "MemoryModel",
    "aux_memory_bound",
    "bucket_memory",
    "coefficient",
    "crossover_n",
    "predicted_ops",
]
