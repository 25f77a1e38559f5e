# pbit/floats.py
"""
Binary floating-point keys, single or double precision.

A finite float is sign * mantissa * 2^exponent. For values of one sign the
magnitude order is the lexicographic order of (exponent field, mantissa
field), so two stable passes sort them: first by mantissa, then by
exponent. Negatives are sorted by magnitude in the opposite direction and
placed in front of the non-negatives through the end marker.
"""
import math
import struct
from enum import Enum
from typing import NamedTuple, Optional

from list_core import LinkedList, debug_check
from metrics.counters import Counters

from .config import PbitConfig
from .sorter import partition_stable, sort_chain


class FloatFormat(Enum):
    """Stored field widths and struct codes of an IEEE 754 interchange format."""
    SINGLE = (23, 8, "<f", "<I")
    DOUBLE = (52, 11, "<d", "<Q")

    def __init__(self, mantissa_bits: int, exponent_bits: int, float_code: str, bits_code: str):
        self.mantissa_bits = mantissa_bits
        self.exponent_bits = exponent_bits
        self.float_code = float_code
        self.bits_code = bits_code

    @property
    def sign_shift(self) -> int:
        return self.mantissa_bits + self.exponent_bits

    @property
    def mantissa_mask(self) -> int:
        return (1 << self.mantissa_bits) - 1

    @property
    def exponent_mask(self) -> int:
        return (1 << self.exponent_bits) - 1


class NonFiniteKeyError(ValueError):
    """A float key is NaN or infinite in the sort's precision."""

    def __init__(self, value, index: Optional[int] = None, payload=None):
        self.value = value
        self.index = index
        self.payload = payload
        where = "" if index is None else f"node {index} (payload {payload!r}): "
        super().__init__(f"{where}non-finite floating-point key {value!r}")


class FloatFields(NamedTuple):
    sign: int
    exponent: int
    mantissa: int


def float_pattern(value: float, fmt: FloatFormat = FloatFormat.SINGLE) -> int:
    """Raw encoding of ``value`` rounded to ``fmt``."""
    if not math.isfinite(value):
        raise NonFiniteKeyError(value)
    try:
        packed = struct.pack(fmt.float_code, value)
    except OverflowError:
        # beyond the format's range: would be infinite
        raise NonFiniteKeyError(value) from None
    return struct.unpack(fmt.bits_code, packed)[0]


def decompose_float(value: float, fmt: FloatFormat = FloatFormat.SINGLE) -> FloatFields:
    bits = float_pattern(value, fmt)
    return FloatFields(
        sign=bits >> fmt.sign_shift,
        exponent=(bits >> fmt.mantissa_bits) & fmt.exponent_mask,
        mantissa=bits & fmt.mantissa_mask,
    )


def recompose_float(sign: int, exponent: int, mantissa: int,
                    fmt: FloatFormat = FloatFormat.SINGLE) -> float:
    if (sign not in (0, 1) or not 0 <= exponent <= fmt.exponent_mask
            or not 0 <= mantissa <= fmt.mantissa_mask):
        raise ValueError(f"invalid {fmt.name.lower()}-precision fields ({sign}, {exponent}, {mantissa})")
    bits = (sign << fmt.sign_shift) | (exponent << fmt.mantissa_bits) | mantissa
    return struct.unpack(fmt.float_code, struct.pack(fmt.bits_code, bits))[0]


def padded_width(field_bits: int, pattern_width: int) -> int:
    """Smallest multiple of 2K covering the field (even level count keeps passes stable)."""
    step = 2 * pattern_width
    return -(-field_bits // step) * step


def _is_negative(key) -> bool:
    return key[1] < 0


def sort_floats(lst: LinkedList, cfg: PbitConfig, counters: Optional[Counters] = None,
                fmt: FloatFormat = FloatFormat.SINGLE) -> LinkedList:
    """
    Sort nodes with float keys numerically in ``cfg.order``, stably.

    -0.0 and +0.0 are equal keys. Keys are compared as values of ``fmt``
    (single precision rounds them first); the keys stored on the nodes are
    left untouched.

    :raises NonFiniteKeyError: for the first NaN or infinite key, before any
        node is relinked
    """
    patterns = []
    for index, node in enumerate(lst):
        try:
            patterns.append(float_pattern(node.key, fmt))
        except NonFiniteKeyError:
            raise NonFiniteKeyError(node.key, index, node.payload) from None
    # while sorting, node.key holds (pattern, original value)
    for node, bits in zip(lst, patterns):
        node.key = (bits, node.key)

    k, mask = cfg.pattern_width, cfg.mask
    mantissa_bits = padded_width(fmt.mantissa_bits, k)
    exponent_bits = padded_width(fmt.exponent_bits, k)
    mantissa_mask, exponent_mask, shift = fmt.mantissa_mask, fmt.exponent_mask, fmt.mantissa_bits

    def mantissa_of(key) -> int:
        return key[0] & mantissa_mask

    def exponent_of(key) -> int:
        return (key[0] >> shift) & exponent_mask

    def by_magnitude(head, ascending: bool, marker):
        head = sort_chain(head, mantissa_bits, None, k, mask, ascending, mantissa_of, counters, 1)
        return sort_chain(head, exponent_bits, marker, k, mask, ascending, exponent_of, counters, 1)

    negatives, non_negatives, moved = partition_stable(lst.head, _is_negative)
    lst.head = None
    if counters is not None:
        counters.relink_count += moved

    if cfg.ascending:
        head = by_magnitude(negatives, False, by_magnitude(non_negatives, True, None))
    else:
        head = by_magnitude(non_negatives, False, by_magnitude(negatives, True, None))

    result = LinkedList(head)
    for node in result:
        node.key = node.key[1]
    debug_check(result, len(patterns), "sort_floats")
    return result
