# metrics/counters.py
"""
Per-invocation operation tallies.

A Counters object belongs to exactly one sort call; sorters receive it as
an explicit argument (``counters=None`` switches instrumentation off and
leaves the output unchanged).
"""
from dataclasses import dataclass, field, fields
from typing import Dict, Sequence


@dataclass
class Counters:
    relink_count: int = 0
    merge_visit_count: int = 0
    comparison_count: int = 0
    recursion_depth_max: int = 0
    live_bucket_arrays_max: int = 0
    bucket_scans: int = 0
    # arrays currently alive; not part of the reported tallies
    _live_bucket_arrays: int = field(default=0, repr=False, compare=False)

    def note_depth(self, depth: int) -> None:
        if depth > self.recursion_depth_max:
            self.recursion_depth_max = depth

    def open_bucket_array(self, slots: int) -> None:
        self._live_bucket_arrays += 1
        if self._live_bucket_arrays > self.live_bucket_arrays_max:
            self.live_bucket_arrays_max = self._live_bucket_arrays
        self.bucket_scans += slots

    def close_bucket_array(self) -> None:
        self._live_bucket_arrays -= 1

    def as_dict(self) -> Dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self) if not f.name.startswith("_")}

    @classmethod
    def mean(cls, runs: Sequence["Counters"]) -> "Counters":
        """Field-wise arithmetic mean over repeats, rounded to the nearest integer."""
        if not runs:
            return cls()
        totals = {name: 0 for name in cls().as_dict()}
        for run in runs:
            for name, value in run.as_dict().items():
                totals[name] += value
        return cls(**{name: round(total / len(runs)) for name, total in totals.items()})


@dataclass(frozen=True)
class MemoryModel:
    """
    Inputs of the auxiliary memory bound: key width M, pattern width K and
    the size in bytes of one link slot (4 for 32-bit pointers).
    """
    bit_width: int
    pattern_width: int
    slot_size: int = 4

    def __post_init__(self):
        if self.slot_size <= 0:
            raise ValueError(f"slot_size must be positive, got {self.slot_size}")
        if self.pattern_width <= 0 or self.bit_width <= 0:
            raise ValueError("bit_width and pattern_width must be positive")
        if self.bit_width % self.pattern_width:
            raise ValueError(
                f"pattern width {self.pattern_width} does not divide key width {self.bit_width}"
            )

    @property
    def bucket_count(self) -> int:
        return 1 << self.pattern_width

    @property
    def levels(self) -> int:
        return self.bit_width // self.pattern_width
