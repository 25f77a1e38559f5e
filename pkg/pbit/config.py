# pbit/config.py
"""
Key and sorter configuration.

KeyDescriptor says how wide the keys are and whether they are signed;
PbitConfig says how many bits are consumed per split level and in which
direction the result is produced. ``PbitConfig.validate_for`` is the single
place where the two are checked against each other.
"""
from dataclasses import dataclass
from enum import Enum

ALLOWED_KEY_WIDTHS = (8, 16, 32, 64)
ALLOWED_PATTERN_WIDTHS = (1, 2, 4, 8, 16)


class PbitConfigError(ValueError):
    """Pattern width and key width cannot be combined as requested."""


class Order(Enum):
    ASCENDING = "asc"
    DESCENDING = "desc"

    @classmethod
    def parse(cls, text: str) -> "Order":
        aliases = {"asc": cls.ASCENDING, "ascending": cls.ASCENDING,
                   "desc": cls.DESCENDING, "descending": cls.DESCENDING}
        try:
            return aliases[str(text).strip().lower()]
        except KeyError:
            raise ValueError(f"order must be 'asc' or 'desc', got {text!r}") from None


@dataclass(frozen=True)
class KeyDescriptor:
    bit_width: int = 32
    signed: bool = False

    def __post_init__(self):
        if self.bit_width not in ALLOWED_KEY_WIDTHS:
            raise PbitConfigError(
                f"key width must be one of {ALLOWED_KEY_WIDTHS} bits, got {self.bit_width}"
            )

    @property
    def min_key(self) -> int:
        return -(1 << (self.bit_width - 1)) if self.signed else 0

    @property
    def max_key(self) -> int:
        if self.signed:
            return (1 << (self.bit_width - 1)) - 1
        return (1 << self.bit_width) - 1

    def fits(self, key) -> bool:
        return isinstance(key, int) and self.min_key <= key <= self.max_key

    def require_fits(self, key) -> None:
        if not self.fits(key):
            kind = "signed" if self.signed else "unsigned"
            raise ValueError(f"key {key!r} does not fit in {self.bit_width} {kind} bits")

    def pattern(self, key: int) -> int:
        """Key as an unsigned M-bit pattern (two's complement for negatives)."""
        return key & ((1 << self.bit_width) - 1)


@dataclass(frozen=True)
class PbitConfig:
    pattern_width: int = 4
    order: Order = Order.ASCENDING
    stable: bool = True

    def __post_init__(self):
        if self.pattern_width not in ALLOWED_PATTERN_WIDTHS:
            raise PbitConfigError(
                f"pattern width must be one of {ALLOWED_PATTERN_WIDTHS}, got {self.pattern_width}"
            )
        if not isinstance(self.order, Order):
            object.__setattr__(self, "order", Order.parse(str(self.order)))

    @property
    def bucket_count(self) -> int:
        return 1 << self.pattern_width

    @property
    def mask(self) -> int:
        return self.bucket_count - 1

    @property
    def ascending(self) -> bool:
        return self.order is Order.ASCENDING

    def levels(self, kd: KeyDescriptor) -> int:
        return kd.bit_width // self.pattern_width

    def validate_for(self, kd: KeyDescriptor) -> None:
        """
        :raises PbitConfigError: K does not divide M, or M/K is odd while
            stability is requested (each level reverses equal keys once)
        """
        if kd.bit_width % self.pattern_width:
            raise PbitConfigError(
                f"pattern width {self.pattern_width} does not divide key width {kd.bit_width}"
            )
        if self.stable and self.levels(kd) % 2:
            raise PbitConfigError(
                f"stable sort needs an even number of levels; "
                f"{kd.bit_width}/{self.pattern_width} = {self.levels(kd)}"
            )


# Presets used by the benchmark
SHORT_LISTS = PbitConfig(pattern_width=4)
LONG_LISTS = PbitConfig(pattern_width=8)
VERY_LONG_LISTS = PbitConfig(pattern_width=16)
