# bench_cli/runner.py
"""
Benchmark driver: for every size, algorithm and repeat the repeat's input
is generated from its seed, sorted once (timed and instrumented) and
checked against the oracle. Only one input is alive at a time; every
algorithm sees the same keys because the seed fixes them.
"""
import logging
import statistics
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from baseline_sorters import array_sort, mergesort, oracle_sort, psort, psort2, quickersort
from common import config
from common.timer import measure_execution_time
from list_core import LinkedList, ValidationResult, from_pairs, to_pairs, validate
from metrics.counters import Counters
from pbit import KeyDescriptor, Order, PbitConfig
from pbit import sort as pbit_sort

from .generator import DISTRIBUTIONS, KeyRange, SEED_MASK, check_range, full_range, generate_keys

logger = logging.getLogger(__name__)

ALGORITHMS = ("pbit", "quickersort", "mergesort", "psort", "psort2", "array_baseline")
MEAN = "mean"

Sorter = Callable[[LinkedList, Counters], LinkedList]
Pairs = List[Tuple[int, int]]

# comparison sorters always produce ascending output
LIST_SORTERS: Dict[str, Sorter] = {
    "quickersort": quickersort,
    "mergesort": mergesort,
    "psort": lambda lst, counters: psort(lst, counters=counters),
    "psort2": lambda lst, counters: psort2(lst, counters=counters),
}


@dataclass(frozen=True)
class BenchSpec:
    algorithms: Tuple[str, ...] = ALGORITHMS
    sizes: Tuple[int, ...] = (1000,)
    pattern_widths: Tuple[int, ...] = (4,)
    order: Order = Order.ASCENDING
    signed: bool = False
    bit_width: int = config.DEFAULT_KEY_BITS
    seed: int = config.FALLBACK_SEED
    repeats: int = config.DEFAULT_REPEATS
    key_range: Optional[KeyRange] = None
    dist: str = "uniform"
    verify: bool = True

    def __post_init__(self):
        if self.repeats < 1:
            raise ValueError(f"repeats must be at least 1, got {self.repeats}")
        if not self.sizes:
            raise ValueError("at least one list size is required")
        if any(n < 0 for n in self.sizes):
            raise ValueError(f"list sizes must be non-negative, got {self.sizes}")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ValueError(f"unknown algorithm(s) {unknown}; choose from {ALGORITHMS}")
        if self.dist not in DISTRIBUTIONS:
            raise ValueError(f"distribution must be one of {DISTRIBUTIONS}, got {self.dist!r}")
        if not 0 <= self.seed <= SEED_MASK:
            raise ValueError(f"seed must be an unsigned 64-bit value, got {self.seed}")
        check_range(self.effective_range, self.key_descriptor)
        if "pbit" in self.algorithms:
            if not self.pattern_widths:
                raise ValueError("pbit needs at least one pattern width")
            for cfg in self.pbit_configs():
                cfg.validate_for(self.key_descriptor)

    @property
    def key_descriptor(self) -> KeyDescriptor:
        return KeyDescriptor(self.bit_width, self.signed)

    @property
    def effective_range(self) -> KeyRange:
        return self.key_range if self.key_range is not None else full_range(self.key_descriptor)

    @property
    def descending(self) -> bool:
        return self.order is Order.DESCENDING

    def pbit_configs(self) -> List[PbitConfig]:
        return [PbitConfig(k, self.order) for k in self.pattern_widths]

    def seed_for(self, repeat: int) -> int:
        return (self.seed + repeat) & SEED_MASK


@dataclass
class BenchRow:
    algorithm: str
    n: int
    k: Optional[int]
    seed: int
    repeat: Union[int, str]
    elapsed_ms: float
    counters: Counters = field(default_factory=Counters)
    verified: bool = True

    @property
    def label(self) -> str:
        return f"{self.algorithm}(K={self.k})" if self.k is not None else self.algorithm

    @property
    def is_mean(self) -> bool:
        return self.repeat == MEAN


@dataclass
class BenchReport:
    spec: Optional[BenchSpec] = None
    rows: List[BenchRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def labels(self) -> List[str]:
        seen: List[str] = []
        for row in self.rows:
            if row.label not in seen:
                seen.append(row.label)
        return seen

    def sizes(self) -> List[int]:
        return sorted({row.n for row in self.rows})

    def mean_rows(self) -> List[BenchRow]:
        return [row for row in self.rows if row.is_mean]

    def repeat_rows(self, label: str, n: int) -> List[BenchRow]:
        return [row for row in self.rows if not row.is_mean and row.label == label and row.n == n]

    def mean_elapsed(self, label: str, n: int) -> Optional[float]:
        for row in self.mean_rows():
            if row.label == label and row.n == n:
                return row.elapsed_ms
        return None


class Reproduction(NamedTuple):
    algorithm: str
    k: Optional[int]
    seed: int
    n: int

    def __str__(self) -> str:
        k = f" k={self.k}" if self.k is not None else ""
        return f"reproduce: algorithm={self.algorithm}{k} seed={self.seed} n={self.n}"


class VerificationError(RuntimeError):
    """A sorter's output differed from the oracle on a benchmark input."""

    def __init__(self, row: BenchRow, reproduction: Reproduction):
        super().__init__(f"{row.label} failed verification at n={row.n}, seed={row.seed}; "
                         f"{reproduction}")
        self.row = row
        self.reproduction = reproduction


def sorter_for(algorithm: str, k: Optional[int], spec: BenchSpec) -> Sorter:
    kd = spec.key_descriptor
    if algorithm == "pbit":
        cfg = PbitConfig(k, spec.order)
        return lambda lst, counters: pbit_sort(lst, kd, cfg, counters)
    if algorithm == "array_baseline":
        return lambda lst, counters: array_sort(lst, spec.descending, kd.bit_width, kd.signed)
    return LIST_SORTERS[algorithm]


def _variants(spec: BenchSpec) -> List[Tuple[str, Optional[int]]]:
    variants: List[Tuple[str, Optional[int]]] = []
    for algorithm in spec.algorithms:
        if algorithm == "pbit":
            variants.extend(("pbit", k) for k in spec.pattern_widths)
        else:
            variants.append((algorithm, None))
    return variants


def _is_descending(algorithm: str, spec: BenchSpec) -> bool:
    return spec.descending and algorithm in ("pbit", "array_baseline")


def matches_oracle(result: LinkedList, pairs: Pairs, descending: bool) -> bool:
    """
    Keys in oracle order and the same (key, payload) multiset, so no node
    was lost, duplicated or given another key.
    """
    if validate(result, len(pairs)) is not ValidationResult.OK:
        return False
    got = to_pairs(result)
    if len(got) != len(pairs):
        return False
    expected = [key for key, _ in to_pairs(oracle_sort(from_pairs(pairs), descending))]
    if [key for key, _ in got] != expected:
        return False
    return Counter(got) == Counter(pairs)


def repeat_input(spec: BenchSpec, n: int, repeat: int) -> Pairs:
    """(key, input index) pairs of one repeat; the same for every algorithm."""
    return _pairs(generate_keys(n, spec.seed_for(repeat), spec.effective_range,
                                spec.key_descriptor, spec.dist))


def _pairs(keys: Sequence[int]) -> Pairs:
    return [(key, index) for index, key in enumerate(keys)]


def _fails(spec: BenchSpec, algorithm: str, k: Optional[int], seed: int, n: int) -> bool:
    pairs = _pairs(generate_keys(n, seed, spec.effective_range, spec.key_descriptor, spec.dist))
    result = sorter_for(algorithm, k, spec)(from_pairs(pairs), Counters())
    return not matches_oracle(result, pairs, _is_descending(algorithm, spec))


def minimize(spec: BenchSpec, algorithm: str, k: Optional[int], seed: int, n: int) -> Reproduction:
    """Halve n while the failure persists with the same seed."""
    while n > 1 and _fails(spec, algorithm, k, seed, n // 2):
        n //= 2
    return Reproduction(algorithm, k, seed, n)


def _mean_row(algorithm: str, k: Optional[int], n: int, seed: int,
              runs: List[BenchRow]) -> BenchRow:
    return BenchRow(
        algorithm=algorithm,
        n=n,
        k=k,
        seed=seed,
        repeat=MEAN,
        elapsed_ms=statistics.fmean(row.elapsed_ms for row in runs),
        counters=Counters.mean([row.counters for row in runs]),
        verified=all(row.verified for row in runs),
    )


def run(spec: BenchSpec) -> BenchReport:
    """
    Run every (algorithm, n, repeat) of ``spec`` sequentially and append one
    mean row per (algorithm, K, n).

    :raises VerificationError: on the first output that differs from the
        oracle (only when ``spec.verify``)
    """
    report = BenchReport(spec)
    variants = _variants(spec)
    for n in spec.sizes:
        for algorithm, k in variants:
            sorter = sorter_for(algorithm, k, spec)
            descending = _is_descending(algorithm, spec)
            runs: List[BenchRow] = []
            for repeat in range(spec.repeats):
                # one input alive at a time; regenerated from its seed per algorithm
                pairs = repeat_input(spec, n, repeat)
                counters = Counters()
                result, elapsed_ms = measure_execution_time(sorter, from_pairs(pairs), counters)
                verified = matches_oracle(result, pairs, descending) if spec.verify else True
                row = BenchRow(algorithm, n, k, spec.seed_for(repeat), repeat,
                               elapsed_ms, counters, verified)
                if not verified:
                    reproduction = minimize(spec, algorithm, k, row.seed, n)
                    logger.error("%s: output differs from oracle at n=%d; %s",
                                 row.label, n, reproduction)
                    raise VerificationError(row, reproduction)
                runs.append(row)
                del pairs, result
            report.rows.extend(runs)
            report.rows.append(_mean_row(algorithm, k, n, spec.seed, runs))
            logger.info("%s n=%d: mean %.3f ms over %d repeats",
                        report.rows[-1].label, n, report.rows[-1].elapsed_ms, len(runs))
    return report


def timing_ratio(report: BenchReport, faster: str, slower: str) -> float:
    """
    Median elapsed time of ``slower`` divided by that of ``faster`` at the
    largest n both labels were measured at.

    :raises ValueError: the labels share no size, or ``faster`` took no time
    """
    common_sizes = [n for n in report.sizes()
                    if report.repeat_rows(faster, n) and report.repeat_rows(slower, n)]
    if not common_sizes:
        raise ValueError(f"no size measured for both {faster!r} and {slower!r}")
    n = common_sizes[-1]
    fast = statistics.median(row.elapsed_ms for row in report.repeat_rows(faster, n))
    slow = statistics.median(row.elapsed_ms for row in report.repeat_rows(slower, n))
    if fast <= 0:
        raise ValueError(f"{faster!r} measured zero time at n={n}")
    return slow / fast
