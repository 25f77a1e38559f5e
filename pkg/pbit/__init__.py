"""
Bit-pattern List Sorter

This package contains:
- KeyDescriptor / PbitConfig and their compatibility checks
- Bit extraction and the bucket split of one level
- The recursive sorter threading an end marker through all levels
- The signed/unsigned dispatcher with ascending and descending output
- Single- and double-precision float keys via mantissa and exponent passes
"""
from .config import (
    ALLOWED_KEY_WIDTHS,
    ALLOWED_PATTERN_WIDTHS,
    KeyDescriptor,
    Order,
    PbitConfig,
    PbitConfigError,
)
from .floats import (
    FloatFields,
    FloatFormat,
    NonFiniteKeyError,
    decompose_float,
    recompose_float,
    sort_floats,
)
from .sorter import extract_bits, pbit_recursive, sort, split_into_buckets

__all__ = [
    "ALLOWED_KEY_WIDTHS",
    "ALLOWED_PATTERN_WIDTHS",
    "FloatFields",
    "FloatFormat",
    "KeyDescriptor",
    "NonFiniteKeyError",
    "Order",
    "PbitConfig",
    "PbitConfigError",
    "decompose_float",
    "extract_bits",
    "pbit_recursive",
    "recompose_float",
    "sort",
    "sort_floats",
    "split_into_buckets",
]
