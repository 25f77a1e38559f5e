# baseline_sorters/psort.py
"""
Two-pivot partition sorts that thread an end marker like the bucket
sorter does.

The two leading nodes become pivots L <= P2. The remaining nodes are split
into keys below L, keys above P2 and keys in between; the parts are then
sorted right to left, each one in front of the already sorted suffix:

    P2.next = sort(greater, marker)
    L.next  = sort(between, P2)
    return    sort(less, L)

Psort2 also pulls keys equal to a pivot into a chain ending at that pivot,
so runs of equal keys never reach another recursion level. Neither sort is
stable.
"""
from functools import partial
from typing import List, Optional, Tuple

from list_core import LinkedList, SortableNode
from metrics.counters import Counters

from .recursion import run_sorter

Node = Optional[SortableNode]


def _pick_pivots(head: SortableNode) -> Tuple[SortableNode, SortableNode, Node]:
    """Return (low, high, rest); on a tie the second node is ``high``."""
    first, second = head, head.next
    rest = second.next
    if first.key > second.key:
        low, high = second, first
    else:
        low, high = first, second
    low.next = high.next = None
    return low, high, rest


def _partition(head: SortableNode) -> Tuple[Node, SortableNode, Node, SortableNode,
                                              SortableNode, Node, SortableNode, int]:
    low, high, node = _pick_pivots(head)
    less = between = greater = None
    comparisons = 1
    low_key, high_key = low.key, high.key
    while node is not None:
        following = node.next
        comparisons += 1
        if node.key < low_key:
            node.next = less
            less = node
        else:
            comparisons += 1
            if node.key > high_key:
                node.next = greater
                greater = node
            else:
                node.next = between
                between = node
        node = following
    return less, low, between, high, high, greater, low, comparisons


def _partition_capturing(head: SortableNode) -> Tuple[Node, SortableNode, Node, SortableNode,
                                                        SortableNode, Node, SortableNode, int]:
    low, high, node = _pick_pivots(head)
    less = between = greater = None
    # equal-key chains are built by prepending, so each pivot stays the tail
    low_run, high_run = low, high
    comparisons = 1
    low_key, high_key = low.key, high.key
    while node is not None:
        following = node.next
        comparisons += 1
        if node.key < low_key:
            node.next = less
            less = node
            node = following
            continue
        comparisons += 1
        if node.key > high_key:
            node.next = greater
            greater = node
            node = following
            continue
        comparisons += 1
        if node.key == low_key:
            node.next = low_run
            low_run = node
        else:
            comparisons += 1
            if node.key == high_key:
                node.next = high_run
                high_run = node
            else:
                node.next = between
                between = node
        node = following
    return less, low_run, between, high_run, high, greater, low, comparisons


def _sort_recursive(head: Node, marker: Node, counters: Optional[Counters],
                    depth: int, partition) -> Node:
    if head is None:
        return marker
    if head.next is None:
        head.next = marker
        return head
    less, low_run, between, high_run, high, greater, low, comparisons = partition(head)
    if counters is not None:
        counters.comparison_count += comparisons
        counters.note_depth(depth)
    high.next = _sort_recursive(greater, marker, counters, depth + 1, partition)
    low.next = _sort_recursive(between, high_run, counters, depth + 1, partition)
    return _sort_recursive(less, low_run, counters, depth + 1, partition)


_SORT, _EMIT = 0, 1


def _sort_iterative(head: Node, marker: Node, counters: Optional[Counters], partition) -> Node:
    """
    Explicit-stack form with the same output: the result grows from the
    right, ``greater`` parts are popped first.
    """
    result = marker
    # (_SORT, chain, depth) or (_EMIT, run head, run tail)
    stack: List[tuple] = [(_SORT, head, 1)]
    while stack:
        kind, chain, extra = stack.pop()
        if kind == _EMIT:
            extra.next = result
            result = chain
            continue
        if chain is None:
            continue
        if chain.next is None:
            chain.next = result
            result = chain
            continue
        less, low_run, between, high_run, high, greater, low, comparisons = partition(chain)
        if counters is not None:
            counters.comparison_count += comparisons
            counters.note_depth(extra)
        stack.append((_SORT, less, extra + 1))
        stack.append((_EMIT, low_run, low))
        stack.append((_SORT, between, extra + 1))
        stack.append((_EMIT, high_run, high))
        stack.append((_SORT, greater, extra + 1))
    return result


def _run(lst: LinkedList, marker: Optional[LinkedList], counters: Optional[Counters],
         partition, operation: str) -> LinkedList:
    tail = None
    extra = 0
    if marker is not None:
        tail = marker.head
        extra = len(marker)
        marker.head = None
    recursive = partial(_recursive_entry, marker=tail, partition=partition)
    iterative = partial(_iterative_entry, marker=tail, partition=partition)
    return run_sorter(lst, counters, recursive, iterative, operation, extra_nodes=extra)


def _recursive_entry(head: Node, counters: Optional[Counters], marker: Node, partition) -> Node:
    return _sort_recursive(head, marker, counters, 1, partition)


def _iterative_entry(head: Node, counters: Optional[Counters], marker: Node, partition) -> Node:
    return _sort_iterative(head, marker, counters, partition)


def psort(lst: LinkedList, marker: Optional[LinkedList] = None,
          counters: Optional[Counters] = None) -> LinkedList:
    """
    Sort ``lst`` ascending and return it followed by ``marker`` (an already
    sorted list whose keys are not smaller, or None). Both roots are consumed.
    """
    return _run(lst, marker, counters, _partition, "psort")


def psort2(lst: LinkedList, marker: Optional[LinkedList] = None,
           counters: Optional[Counters] = None) -> LinkedList:
    """
    Like psort, but keys equal to either pivot are settled in the same pass;
    a list of identical keys is sorted with recursion depth 1.
    """
    return _run(lst, marker, counters, _partition_capturing, "psort2")
