# baseline_sorters/mergesort.py
"""
MergeSort (version 2) for singly-linked lists: split into two halves,
sort each, then join them with an iterative merge so the merge itself
never recurses.

Halves are contiguous (slow/fast walk) and the merge takes from the left
run on ties, so the sort is stable. Recursion depth is ceil(log2 n), so
there is no explicit-stack variant.
"""
from typing import Optional

from list_core import LinkedList, SortableNode
from metrics.counters import Counters

from .recursion import run_sorter


def split_halves(head: SortableNode) -> Optional[SortableNode]:
    """
    Cut the chain after its middle node and return the second half
    (None for a one-node chain). The first half keeps ceil(n/2) nodes.
    """
    slow = head
    fast = head.next
    while fast is not None and fast.next is not None:
        slow = slow.next
        fast = fast.next.next
    second = slow.next
    slow.next = None
    return second


def merge_runs(a: Optional[SortableNode], b: Optional[SortableNode],
               counters: Optional[Counters] = None) -> Optional[SortableNode]:
    """Merge two ascending chains; on equal keys the node from ``a`` goes first."""
    if a is None:
        return b
    if b is None:
        return a
    comparisons = 1
    if a.key <= b.key:
        head = tail = a
        a = a.next
    else:
        head = tail = b
        b = b.next
    while a is not None and b is not None:
        comparisons += 1
        if a.key <= b.key:
            tail.next = a
            tail = a
            a = a.next
        else:
            tail.next = b
            tail = b
            b = b.next
    tail.next = a if a is not None else b
    if counters is not None:
        counters.comparison_count += comparisons
    return head


def _sort_recursive(head: SortableNode, counters: Optional[Counters], depth: int) -> SortableNode:
    if head.next is None:
        return head
    if counters is not None:
        counters.note_depth(depth)
    second = split_halves(head)
    return merge_runs(_sort_recursive(head, counters, depth + 1),
                      _sort_recursive(second, counters, depth + 1), counters)


def _sort_from_top(head: SortableNode, counters: Optional[Counters]) -> SortableNode:
    return _sort_recursive(head, counters, 1)


def mergesort(lst: LinkedList, counters: Optional[Counters] = None) -> LinkedList:
    """
    Sort ``lst`` ascending by key, stably; ``lst`` is consumed.

    :param lst: list to sort
    :param counters: optional tallies (comparisons, recursion depth)
    :return: the sorted list
    """
    return run_sorter(lst, counters, _sort_from_top, None, "mergesort")
