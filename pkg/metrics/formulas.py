# metrics/formulas.py
"""
Closed-form cost model of the bit-pattern sorter.

  f(n) = (M/K) * n + n                       split relinks plus merge walk
  T    = (2^K * s + 3 * s) * (M/K) + 2 * s   bytes, s = link slot size
"""
from .counters import Counters, MemoryModel


def _levels(bit_width: int, pattern_width: int) -> int:
    if pattern_width <= 0 or bit_width <= 0:
        raise ValueError("bit width and pattern width must be positive")
    if bit_width % pattern_width:
        raise ValueError(f"pattern width {pattern_width} does not divide key width {bit_width}")
    return bit_width // pattern_width


def coefficient(bit_width: int, pattern_width: int) -> int:
    """Per-node operation count: M/K split passes plus one merge pass."""
    return _levels(bit_width, pattern_width) + 1


def predicted_ops(n: int, bit_width: int, pattern_width: int) -> int:
    """Exact relink + merge-visit total for an unsigned sort of n nodes."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return n * _levels(bit_width, pattern_width) + n


def aux_memory_bound(model: MemoryModel) -> int:
    """Maximum auxiliary bytes for one run; independent of the list length."""
    s = model.slot_size
    return (model.bucket_count * s + 3 * s) * model.levels + 2 * s


def bucket_memory(counters: Counters, model: MemoryModel) -> int:
    """Bytes held by the bucket arrays at the deepest point of a recorded run."""
    return counters.live_bucket_arrays_max * model.bucket_count * model.slot_size


def crossover_n(bit_width: int, pattern_width: int) -> int:
    """
    List length above which n*log2(n) comparisons exceed (M/K)*n relinks.

    Pure operation counts; per-operation costs differ by hardware and are
    not modelled.
    """
    return 1 << _levels(bit_width, pattern_width)
