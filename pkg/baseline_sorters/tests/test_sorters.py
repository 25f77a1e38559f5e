"""
Unit tests for the comparison sorters, the oracle and the array sort.

Covers:
- Listed examples for quickersort, mergesort, psort and psort2
- Oracle equivalence on seeded inputs and node/payload preservation
- Recursion depth on the degenerate inputs (sorted keys, all-equal keys)
- Equal output from the recursive and explicit-stack forms
- Stability of mergesort and of the array sort in both directions
"""
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baseline_sorters import (
    array_sort,
    merge_runs,
    mergesort,
    oracle_sort,
    psort,
    psort2,
    quickersort,
    recursion_headroom,
    split_halves,
)
from bench_cli.generator import generate_keys, make_rng
from common import config
from list_core import LinkedList, from_pairs, from_sequence, to_pairs, to_sequence
from metrics import Counters
from pbit import KeyDescriptor

U32 = KeyDescriptor(32)
COMPARISON_SORTERS = {
    "quickersort": quickersort,
    "mergesort": mergesort,
    "psort": lambda lst, counters=None: psort(lst, counters=counters),
    "psort2": lambda lst, counters=None: psort2(lst, counters=counters),
}


def keys_of(sorter, keys):
    return to_sequence(sorter(from_sequence(keys)))


def seeded_pairs(n, seed, key_range=(0, 2 ** 32 - 1), dist="uniform"):
    return [(key, i) for i, key in enumerate(generate_keys(n, seed, key_range, U32, dist))]


@pytest.fixture(params=sorted(COMPARISON_SORTERS))
def sorter(request):
    return COMPARISON_SORTERS[request.param]


@pytest.fixture
def explicit_stack(monkeypatch):
    """Force the explicit-stack form for every list."""
    monkeypatch.setattr(config, "RECURSIVE_SORT_MAX_N", 0)


# ---------------------------------------------------------------------------
# Listed examples
# ---------------------------------------------------------------------------
def test_quickersort_examples():
    """
    quickersort on an empty list and a small list with a duplicate.
    """
    assert quickersort(LinkedList()).is_empty()
    assert keys_of(quickersort, [3, 1, 2, 1]) == [1, 1, 2, 3]


def test_quickersort_sorted_input_depth():
    """
    Sorted input drives quickersort to depth n-1.
    """
    counters = Counters()
    result = quickersort(from_sequence(range(1, 65)), counters)
    assert to_sequence(result) == list(range(1, 65))
    assert counters.recursion_depth_max == 63


def test_quickersort_counts_comparisons():
    """
    Each partition test counts as one comparison.
    """
    counters = Counters()
    quickersort(from_sequence([2, 1, 3]), counters)
    # 3 greater than 2: one test; 1 vs 2: two tests
    assert counters.comparison_count == 3


def test_mergesort_examples():
    """
    mergesort on an empty and a two-key list.
    """
    assert mergesort(LinkedList()).is_empty()
    assert keys_of(mergesort, [2, 1]) == [1, 2]


def test_mergesort_keeps_equal_keys_in_order():
    """
    Equal keys keep their input order.
    """
    result = mergesort(from_pairs([(5, "a"), (5, "b"), (1, "c")]))
    assert to_pairs(result) == [(1, "c"), (5, "a"), (5, "b")]


def test_psort_examples():
    """
    psort returns the marker for an empty list and sorts small lists.
    """
    marker = from_sequence([8, 9])
    assert to_sequence(psort(LinkedList(), marker)) == [8, 9]
    assert keys_of(psort, [6]) == [6]
    assert keys_of(psort, [4, 1, 3, 2, 5]) == [1, 2, 3, 4, 5]


def test_psort_appends_marker():
    """
    The marker follows the sorted keys.
    """
    result = psort(from_sequence([3, 1, 2]), from_sequence([10, 11]))
    assert to_sequence(result) == [1, 2, 3, 10, 11]


def test_psort2_examples():
    """
    psort2 handles an empty list with a marker and duplicates.
    """
    assert to_sequence(psort2(LinkedList(), from_sequence([5]))) == [5]
    assert keys_of(psort2, [4, 1, 3, 2, 5, 3, 3]) == [1, 2, 3, 3, 3, 4, 5]


def test_psort2_all_equal_depth():
    """
    All-equal keys finish in one level with the three-way split.
    """
    counters = Counters()
    result = psort2(from_sequence([7] * 1000), counters=counters)
    assert to_sequence(result) == [7] * 1000
    assert counters.recursion_depth_max == 1


def test_psort2_four_sevens_depth():
    """
    Four equal keys take a single level.
    """
    counters = Counters()
    assert to_sequence(psort2(from_sequence([7, 7, 7, 7]), counters=counters)) == [7] * 4
    assert counters.recursion_depth_max == 1


def test_psort_pivot_tie_goes_to_second_node():
    """
    Keys equal to the pivot keep their input order.
    """
    result = psort(from_pairs([(2, "first"), (2, "second"), (1, "x")]))
    assert to_pairs(result) == [(1, "x"), (2, "first"), (2, "second")]


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------
class TestOracle:
    def test_empty(self):
        assert oracle_sort(LinkedList()).is_empty()

    def test_two(self):
        assert to_sequence(oracle_sort(from_sequence([2, 1]))) == [1, 2]

    def test_stable_both_directions(self):
        """
        The oracle is stable ascending and descending.
        """
        lst = from_pairs([(5, "a"), (3, "b"), (5, "c")])
        assert to_pairs(oracle_sort(lst)) == [(3, "b"), (5, "a"), (5, "c")]
        assert to_pairs(oracle_sort(lst, descending=True)) == [(5, "a"), (5, "c"), (3, "b")]

    def test_input_untouched(self):
        """
        The oracle copies; the input keeps its order and nodes.
        """
        lst = from_sequence([3, 1, 2])
        result = oracle_sort(lst)
        assert to_sequence(lst) == [3, 1, 2]
        assert not {id(n) for n in lst} & {id(n) for n in result}


# ---------------------------------------------------------------------------
# Oracle equivalence
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("n", [0, 1, 2, 3, 17, 256, 4096])
def test_matches_oracle_on_seeded_inputs(sorter, n):
    """
    Seeded lists over full and narrow ranges come out sorted and complete.
    """
    for seed in range(4):
        for key_range in ((0, 2 ** 32 - 1), (0, 15)):
            pairs = seeded_pairs(n, seed, key_range)
            result = to_pairs(sorter(from_pairs(pairs)))
            assert [k for k, _ in result] == sorted(k for k, _ in pairs)
            assert sorted(result) == sorted(pairs)


@pytest.mark.slow
def test_matches_oracle_on_500_seeded_lists(sorter):
    """
    500 seeded lists of up to 4096 keys, alternating full and narrow key ranges.
    """
    for seed in range(500):
        n = int(make_rng(seed).integers(0, 4097))
        key_range = (0, 2 ** 32 - 1) if seed % 2 == 0 else (0, 15)
        pairs = seeded_pairs(n, seed, key_range)
        result = to_pairs(sorter(from_pairs(pairs)))
        assert [k for k, _ in result] == sorted(k for k, _ in pairs), (seed, n)
        assert sorted(result) == sorted(pairs)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-50, 50), max_size=120), st.sampled_from(sorted(COMPARISON_SORTERS)))
def test_property_sorted_permutation(keys, name):
    """
    Output is a sorted permutation of the input.
    """
    pairs = [(key, i) for i, key in enumerate(keys)]
    result = to_pairs(COMPARISON_SORTERS[name](from_pairs(pairs)))
    assert [k for k, _ in result] == sorted(keys)
    assert sorted(p for _, p in result) == list(range(len(keys)))


@pytest.mark.parametrize("dist", ["sorted", "reversed", "equal", "few"])
def test_degenerate_distributions(sorter, dist):
    """
    Sorted, reversed, equal and few-valued inputs sort correctly.
    """
    pairs = seeded_pairs(1500, 9, dist=dist)
    result = to_pairs(sorter(from_pairs(pairs)))
    assert [k for k, _ in result] == sorted(k for k, _ in pairs)


@given(st.lists(st.integers(0, 9), max_size=200))
def test_mergesort_is_stable(keys):
    """
    mergesort agrees with the stable oracle.
    """
    pairs = [(key, i) for i, key in enumerate(keys)]
    assert to_pairs(mergesort(from_pairs(pairs))) == to_pairs(oracle_sort(from_pairs(pairs)))


# ---------------------------------------------------------------------------
# Recursive and explicit-stack forms
# ---------------------------------------------------------------------------
class TestExplicitStack:
    @pytest.mark.parametrize("name", ["quickersort", "psort", "psort2"])
    @pytest.mark.parametrize("dist", ["uniform", "sorted", "few"])
    def test_same_output_and_counters(self, name, dist, monkeypatch):
        """
        The explicit-stack form matches the recursive form, counters included.
        """
        pairs = seeded_pairs(1000, 31, dist=dist)
        sorter = COMPARISON_SORTERS[name]

        recursive_counters = Counters()
        recursive = to_pairs(sorter(from_pairs(pairs), recursive_counters))

        monkeypatch.setattr(config, "RECURSIVE_SORT_MAX_N", 0)
        stack_counters = Counters()
        iterative = to_pairs(sorter(from_pairs(pairs), stack_counters))

        assert iterative == recursive
        assert stack_counters == recursive_counters

    def test_quickersort_depth_on_sorted_input(self, explicit_stack):
        """
        The explicit stack reports the same depth as recursion.
        """
        counters = Counters()
        quickersort(from_sequence(range(1, 65)), counters)
        assert counters.recursion_depth_max == 63

    def test_psort_marker(self, explicit_stack):
        """
        The explicit-stack psort appends the marker.
        """
        result = psort(from_sequence([3, 1, 2]), from_sequence([10]))
        assert to_sequence(result) == [1, 2, 3, 10]

    def test_psort_empty_with_marker(self, explicit_stack):
        """
        An empty list returns the marker.
        """
        assert to_sequence(psort2(LinkedList(), from_sequence([4]))) == [4]

    def test_deep_sorted_input_without_recursion(self, explicit_stack):
        """
        Inputs deeper than the recursion limit sort without recursing.
        """
        counters = Counters()
        n = sys.getrecursionlimit() + 500
        result = quickersort(from_sequence(range(n)), counters)
        assert to_sequence(result) == list(range(n))
        assert counters.recursion_depth_max == n - 1


def test_recursion_headroom_restores_limit():
    """
    The recursion limit is raised inside the block and restored after.
    """
    before = sys.getrecursionlimit()
    with recursion_headroom(before * 4):
        assert sys.getrecursionlimit() > before * 4
    assert sys.getrecursionlimit() == before


def test_recursive_form_handles_sorted_input_deeper_than_default_limit():
    """
    The recursive form raises the limit for deep inputs.
    """
    n = 2 * sys.getrecursionlimit()
    result = quickersort(from_sequence(range(n)))
    assert to_sequence(result) == list(range(n))


# ---------------------------------------------------------------------------
# Merge helpers
# ---------------------------------------------------------------------------
def test_split_halves():
    """
    An odd list splits with the extra node in the front half.
    """
    lst = from_sequence([1, 2, 3, 4, 5])
    second = split_halves(lst.head)
    assert to_sequence(lst) == [1, 2, 3]
    assert to_sequence(LinkedList(second)) == [4, 5]


def test_split_single_node():
    """
    A single node has no second half.
    """
    lst = from_sequence([1])
    assert split_halves(lst.head) is None


def test_merge_runs_takes_left_on_ties():
    """
    Ties take the left run first.
    """
    a = from_pairs([(1, "a"), (3, "a")])
    b = from_pairs([(1, "b"), (2, "b")])
    counters = Counters()
    head = merge_runs(a.head, b.head, counters)
    assert to_pairs(LinkedList(head)) == [(1, "a"), (1, "b"), (2, "b"), (3, "a")]
    assert counters.comparison_count == 3


# ---------------------------------------------------------------------------
# Array sort
# ---------------------------------------------------------------------------
class TestArraySort:
    def test_empty(self):
        assert array_sort(LinkedList()).is_empty()

    def test_ascending_stable(self):
        """
        The array sort is stable ascending.
        """
        pairs = seeded_pairs(2000, 41, dist="few")
        assert to_pairs(array_sort(from_pairs(pairs))) == to_pairs(oracle_sort(from_pairs(pairs)))

    def test_descending_stable(self):
        """
        The array sort is stable descending.
        """
        pairs = seeded_pairs(2000, 42, dist="few")
        expected = to_pairs(oracle_sort(from_pairs(pairs), descending=True))
        assert to_pairs(array_sort(from_pairs(pairs), descending=True)) == expected

    def test_unsigned_64_bit_keys(self):
        """
        Unsigned 64-bit keys sort through numpy.
        """
        keys = [2 ** 64 - 1, 0, 2 ** 63, 5]
        result = array_sort(from_sequence(keys), bit_width=64)
        assert to_sequence(result) == sorted(keys)

    def test_signed_keys(self):
        """
        Signed 64-bit extremes sort through numpy.
        """
        keys = [-(2 ** 63), 2 ** 63 - 1, -1, 0]
        result = array_sort(from_sequence(keys), bit_width=64, signed=True)
        assert to_sequence(result) == sorted(keys)

    def test_float_keys(self):
        """
        Float keys sort through numpy.
        """
        assert to_sequence(array_sort(from_sequence([1.5, -2.0, 0.0]))) == [-2.0, 0.0, 1.5]

    def test_reuses_nodes(self):
        """
        The array sort relinks the input nodes.
        """
        lst = from_sequence([3, 1, 2])
        nodes = {id(n) for n in lst}
        result = array_sort(lst)
        assert {id(n) for n in result} == nodes
        assert lst.is_empty()
