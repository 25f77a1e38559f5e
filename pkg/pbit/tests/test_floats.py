"""
Unit tests for pbit.floats

Covers:
- Field decomposition and bit-exact recomposition in single and double precision
- Padded field widths giving an even number of levels
- sort_floats against a stable comparison sort, both orders and both precisions
- Signed zeros and equal negative keys
- Rejection of NaN and infinity before any relinking
"""
import math
import struct

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bench_cli.generator import make_rng
from list_core import LinkedList, from_pairs, from_sequence, to_pairs, to_sequence
from metrics import Counters
from pbit import (
    FloatFormat,
    NonFiniteKeyError,
    Order,
    PbitConfig,
    decompose_float,
    recompose_float,
    sort_floats,
)
from pbit.floats import padded_width

DOUBLE = FloatFormat.DOUBLE


def bits_of(value):
    return struct.unpack("<I", struct.pack("<f", value))[0]


def double_bits_of(value):
    return struct.unpack("<Q", struct.pack("<d", value))[0]


def stable_reference(pairs, descending=False):
    return sorted(pairs, key=lambda pair: pair[0], reverse=descending)


def with_zeros_and_duplicates(values):
    for i in range(0, len(values), 97):
        values[i] = -0.0 if i % 2 else 0.0
    for i in range(5, len(values), 89):
        values[i] = values[i - 5]
    return [(value, i) for i, value in enumerate(values)]


@pytest.fixture
def mixed_floats():
    """1000 single-precision values of both signs, with several +0.0 and -0.0."""
    rng = make_rng(2003)
    magnitudes = rng.standard_normal(1000) * np.exp(rng.uniform(-20, 20, 1000))
    return with_zeros_and_duplicates([float(v) for v in magnitudes.astype(np.float32)])


@pytest.fixture
def mixed_doubles():
    """1000 double-precision values spanning a wide exponent range, with signed zeros."""
    rng = make_rng(2004)
    magnitudes = rng.standard_normal(1000) * np.exp(rng.uniform(-600, 600, 1000))
    return with_zeros_and_duplicates([float(v) for v in magnitudes])


# ---------------------------------------------------------------------------
# Field decomposition
# ---------------------------------------------------------------------------
class TestDecompose:
    def test_zero(self):
        assert decompose_float(0.0) == (0, 0, 0)

    def test_negative_zero_has_sign_only(self):
        """
        -0.0 carries only the sign bit.
        """
        assert decompose_float(-0.0) == (1, 0, 0)

    def test_one(self):
        assert decompose_float(1.0) == (0, 127, 0)

    def test_minus_two_and_a_half(self):
        """
        -2.5 = -1.25 * 2^1 in single precision.
        """
        assert decompose_float(-2.5) == (1, 128, 0x200000)

    def test_field_names(self):
        fields = decompose_float(0.75)
        assert (fields.sign, fields.exponent, fields.mantissa) == (0, 126, 0x400000)

    @pytest.mark.parametrize("value", [math.nan, math.inf, -math.inf, 1e39])
    def test_non_finite_rejected(self, value):
        """
        NaN, infinities and values beyond single range are rejected.
        """
        with pytest.raises(NonFiniteKeyError):
            decompose_float(value)

    @given(st.floats(width=32, allow_nan=False, allow_infinity=False))
    def test_recompose_is_bit_exact(self, value):
        """
        Decomposing and recomposing any finite single restores its bits.
        """
        restored = recompose_float(*decompose_float(value))
        assert bits_of(restored) == bits_of(value)

    def test_recompose_rejects_bad_fields(self):
        """
        Fields wider than the single layout are rejected.
        """
        with pytest.raises(ValueError):
            recompose_float(2, 0, 0)
        with pytest.raises(ValueError):
            recompose_float(0, 256, 0)
        with pytest.raises(ValueError):
            recompose_float(0, 0, 1 << 23)


class TestDecomposeDouble:
    def test_one(self):
        """
        1.0 has the double exponent bias and an empty mantissa.
        """
        assert decompose_float(1.0, DOUBLE) == (0, 1023, 0)

    def test_minus_two_and_a_half(self):
        """
        -2.5 = -1.25 * 2^1 sets the sign, exponent 1024 and the top mantissa bit but one.
        """
        assert decompose_float(-2.5, DOUBLE) == (1, 1024, 1 << 50)

    def test_negative_zero(self):
        """
        -0.0 carries only the sign bit.
        """
        assert decompose_float(-0.0, DOUBLE) == (1, 0, 0)

    def test_beyond_single_range_is_finite(self):
        """
        Values too large for single precision decompose as doubles.
        """
        assert decompose_float(1e39, DOUBLE).exponent == 1023 + 129

    @pytest.mark.parametrize("value", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, value):
        """
        NaN and infinities are rejected in double precision too.
        """
        with pytest.raises(NonFiniteKeyError):
            decompose_float(value, DOUBLE)

    @given(st.floats(allow_nan=False, allow_infinity=False))
    def test_recompose_is_bit_exact(self, value):
        """
        Decomposing and recomposing any finite double restores its bits.
        """
        restored = recompose_float(*decompose_float(value, DOUBLE), fmt=DOUBLE)
        assert double_bits_of(restored) == double_bits_of(value)

    def test_recompose_rejects_bad_fields(self):
        """
        Fields wider than the double layout are rejected.
        """
        with pytest.raises(ValueError):
            recompose_float(0, 1 << 11, 0, DOUBLE)
        with pytest.raises(ValueError):
            recompose_float(0, 0, 1 << 52, DOUBLE)


@pytest.mark.parametrize("k,mantissa,exponent", [(1, 24, 8), (2, 24, 8), (4, 24, 8),
                                                 (8, 32, 16), (16, 32, 32)])
def test_padded_widths_give_even_level_counts(k, mantissa, exponent):
    """
    Single fields pad to multiples of 2K.
    """
    assert padded_width(23, k) == mantissa
    assert padded_width(8, k) == exponent
    assert (mantissa // k) % 2 == 0 and (exponent // k) % 2 == 0


@pytest.mark.parametrize("k,mantissa,exponent", [(1, 52, 12), (2, 52, 12), (4, 56, 16),
                                                 (8, 64, 16), (16, 64, 32)])
def test_padded_double_widths(k, mantissa, exponent):
    """
    Double fields pad to multiples of 2K as well.
    """
    assert padded_width(DOUBLE.mantissa_bits, k) == mantissa
    assert padded_width(DOUBLE.exponent_bits, k) == exponent


# ---------------------------------------------------------------------------
# sort_floats
# ---------------------------------------------------------------------------
def test_sort_floats_empty():
    """
    An empty list stays empty.
    """
    assert sort_floats(LinkedList(), PbitConfig(4)).is_empty()


def test_sort_floats_small_mixed():
    """
    Mixed signs come out in numeric order.
    """
    result = sort_floats(from_sequence([2.5, -1.0, 0.0, 1.5]), PbitConfig(4))
    assert to_sequence(result) == [-1.0, 0.0, 1.5, 2.5]


def test_sort_floats_descending():
    """
    Descending order reverses the numeric order.
    """
    result = sort_floats(from_sequence([2.5, -1.0, 0.0, 1.5, -3.25]),
                         PbitConfig(4, Order.DESCENDING))
    assert to_sequence(result) == [2.5, 1.5, 0.0, -1.0, -3.25]


def test_signed_zeros_are_stable_equal_keys():
    """
    +0.0 and -0.0 compare equal and keep their input order.
    """
    keys = [0.0, -0.0, 1.0, 0.0, -0.0]
    result = to_pairs(sort_floats(from_sequence(keys), PbitConfig(4)))
    assert [p for _, p in result] == [0, 1, 3, 4, 2]
    # keys come back untouched, sign of zero included
    assert [math.copysign(1.0, k) for k, _ in result[:4]] == [1.0, -1.0, 1.0, -1.0]


def test_equal_negatives_keep_input_order():
    """
    Equal negative keys stay in input order.
    """
    keys = [-2.0, -5.0, -2.0, -5.0, -2.0]
    result = to_pairs(sort_floats(from_sequence(keys), PbitConfig(4)))
    assert result == [(-5.0, 1), (-5.0, 3), (-2.0, 0), (-2.0, 2), (-2.0, 4)]


@pytest.mark.parametrize("k", [4, 8, 16])
@pytest.mark.parametrize("order", [Order.ASCENDING, Order.DESCENDING])
def test_sort_floats_matches_reference(mixed_floats, k, order):
    """
    1000 single-precision values match a stable comparison sort.
    """
    cfg = PbitConfig(k, order)
    result = to_pairs(sort_floats(from_pairs(mixed_floats), cfg))
    assert result == stable_reference(mixed_floats, descending=order is Order.DESCENDING)


@pytest.mark.parametrize("k", [4, 8, 16])
@pytest.mark.parametrize("order", [Order.ASCENDING, Order.DESCENDING])
def test_sort_doubles_matches_reference(mixed_doubles, k, order):
    """
    1000 double-precision values match a stable comparison sort.
    """
    cfg = PbitConfig(k, order)
    result = to_pairs(sort_floats(from_pairs(mixed_doubles), cfg, fmt=DOUBLE))
    assert result == stable_reference(mixed_doubles, descending=order is Order.DESCENDING)


def test_double_precision_separates_close_values():
    """
    Values equal in single precision are ordered in double precision.
    """
    keys = [1.0 + 2 ** -40, 1.0, -(1.0 + 2 ** -40), -1.0]
    single = to_sequence(sort_floats(from_sequence(keys), PbitConfig(4)))
    double = to_sequence(sort_floats(from_sequence(keys), PbitConfig(4), fmt=DOUBLE))
    # single precision rounds both pairs together and keeps input order
    assert single == [-(1.0 + 2 ** -40), -1.0, 1.0 + 2 ** -40, 1.0]
    assert double == sorted(keys)


def test_sort_floats_counters():
    """
    One sign pass, then 24/4 mantissa and 8/4 exponent levels; two merge walks.
    """
    n = 200
    counters = Counters()
    keys = [float(np.float32(v)) for v in make_rng(5).uniform(-100, 100, n)]
    sort_floats(from_sequence(keys), PbitConfig(4), counters)
    assert counters.relink_count == n + n * (6 + 2)
    assert counters.merge_visit_count == 2 * n


def test_sort_doubles_counters():
    """
    Doubles with K=4 take 56/4 mantissa and 16/4 exponent levels.
    """
    n = 200
    counters = Counters()
    keys = [float(v) for v in make_rng(6).uniform(-1e6, 1e6, n)]
    sort_floats(from_sequence(keys), PbitConfig(4), counters, DOUBLE)
    assert counters.relink_count == n + n * (14 + 4)
    assert counters.merge_visit_count == 2 * n


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
@pytest.mark.parametrize("fmt", list(FloatFormat))
def test_non_finite_rejected_before_mutation(bad, fmt):
    """
    A NaN or infinite key is reported with its position and the list is left as it was.
    """
    lst = from_sequence([1.0, 2.0, bad, 0.5])
    head = lst.head
    with pytest.raises(NonFiniteKeyError) as info:
        sort_floats(lst, PbitConfig(4), fmt=fmt)
    assert info.value.index == 2
    assert info.value.payload == 2
    assert lst.head is head
    assert to_sequence(lst)[:2] == [1.0, 2.0]
    assert to_sequence(lst)[3] == 0.5
