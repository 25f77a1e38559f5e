"""
Comparison Sorters for Linked Lists

This package contains:
- QuickerSort (one pivot, three-way partition)
- MergeSort with an iterative merge
- Psort and Psort2 (two pivots, end-marker chaining)
- A stable oracle sort used as ground truth
- An array sort used as the benchmark's non-list reference
"""
from .array_sort import array_sort
from .mergesort import merge_runs, mergesort, split_halves
from .oracle import oracle_sort
from .psort import psort, psort2
from .quickersort import quickersort
from .recursion import recursion_headroom

__all__ = [
    "array_sort",
    "merge_runs",
    "mergesort",
    "oracle_sort",
    "psort",
    "psort2",
    "quickersort",
    "recursion_headroom",
    "split_halves",
]
