# baseline_sorters/quickersort.py
"""
QuickerSort (version 2): one-pivot, three-way partition sort on a singly
linked list.

The head node is the pivot. Every other node goes to the "greater" chain,
the "equal" chain (which keeps the pivot as its tail) or the "less" chain.
The result is sorted(less) + equal + sorted(greater); the recursive form
returns (head, tail) pairs so no chain is ever walked to find its end.

Not stable. Recursion depth is n-1 on already sorted distinct keys.
"""
from typing import List, Optional, Tuple

from list_core import LinkedList, SortableNode
from metrics.counters import Counters

from .recursion import run_sorter

Partition = Tuple[Optional[SortableNode], SortableNode, SortableNode, Optional[SortableNode], int]


def _partition(head: SortableNode) -> Partition:
    """
    Returns (less, equal_head, pivot, greater, comparisons). The pivot is
    the tail of the equal chain.
    """
    pivot = equal = head
    key = pivot.key
    less = greater = None
    node = head.next
    pivot.next = None
    comparisons = 0
    while node is not None:
        following = node.next
        comparisons += 1
        if key < node.key:
            node.next = greater
            greater = node
        else:
            comparisons += 1
            if key == node.key:
                node.next = equal
                equal = node
            else:
                node.next = less
                less = node
        node = following
    return less, equal, pivot, greater, comparisons


def _sort_recursive(head: SortableNode, counters: Optional[Counters],
                    depth: int) -> Tuple[SortableNode, SortableNode]:
    if head.next is None:
        return head, head
    less, equal, pivot, greater, comparisons = _partition(head)
    if counters is not None:
        counters.comparison_count += comparisons
        counters.note_depth(depth)

    if less is not None:
        first, less_tail = _sort_recursive(less, counters, depth + 1)
        less_tail.next = equal
    else:
        first = equal
    if greater is not None:
        pivot.next, last = _sort_recursive(greater, counters, depth + 1)
    else:
        last = pivot
    return first, last


_SORT, _EMIT = 0, 1


def _sort_iterative(head: SortableNode, counters: Optional[Counters]) -> SortableNode:
    """
    Same output as the recursive form. The result is built from the right:
    pending work is popped largest-first and prepended to ``result``.
    """
    result: Optional[SortableNode] = None
    # (_SORT, chain, depth) or (_EMIT, chain head, chain tail)
    stack: List[tuple] = [(_SORT, head, 1)]
    while stack:
        kind, chain, extra = stack.pop()
        if kind == _EMIT:
            extra.next = result
            result = chain
            continue
        if chain.next is None:
            chain.next = result
            result = chain
            continue
        less, equal, pivot, greater, comparisons = _partition(chain)
        if counters is not None:
            counters.comparison_count += comparisons
            counters.note_depth(extra)
        if less is not None:
            stack.append((_SORT, less, extra + 1))
        stack.append((_EMIT, equal, pivot))
        if greater is not None:
            stack.append((_SORT, greater, extra + 1))
    return result


def quickersort(lst: LinkedList, counters: Optional[Counters] = None) -> LinkedList:
    """
    Sort ``lst`` ascending by key; ``lst`` is consumed.

    :param lst: list to sort
    :param counters: optional tallies (comparisons, recursion depth)
    :return: the sorted list
    """
    return run_sorter(lst, counters, _sort_from_top, _sort_iterative, "quickersort")


def _sort_from_top(head: SortableNode, counters: Optional[Counters]) -> SortableNode:
    return _sort_recursive(head, counters, 1)[0]
