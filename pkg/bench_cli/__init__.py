"""
Sorting Benchmark Harness

This package contains:
- Seeded input generation (numpy PCG64) with several key distributions
- The benchmark runner with oracle verification and counter capture
- CSV / markdown / plot-data report writers
- An optional sqlite results store
- The command-line interface
"""
from .db import BenchDatabaseError, init_database, load_rows, save_report
from .emit import CSV_COLUMNS, emit, parse_csv, render
from .generator import DISTRIBUTIONS, generate, generate_keys
from .runner import (
    ALGORITHMS,
    BenchReport,
    BenchRow,
    BenchSpec,
    Reproduction,
    VerificationError,
    run,
    timing_ratio,
)

__all__ = [
    "ALGORITHMS",
    "BenchDatabaseError",
    "BenchReport",
    "BenchRow",
    "BenchSpec",
    "CSV_COLUMNS",
    "DISTRIBUTIONS",
    "Reproduction",
    "VerificationError",
    "emit",
    "generate",
    "generate_keys",
    "init_database",
    "load_rows",
    "parse_csv",
    "render",
    "run",
    "save_report",
    "timing_ratio",
]
