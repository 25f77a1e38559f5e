# baseline_sorters/array_sort.py
"""
Non-list reference point for the benchmark: keys are copied into a
contiguous numpy array, ordered with numpy's stable sort, and the nodes
are relinked in that order.
"""
from typing import Optional

import numpy as np

from list_core import LinkedList, SortableNode


def _key_dtype(bit_width: Optional[int], signed: bool):
    if bit_width == 64 and not signed:
        return np.uint64
    return np.int64


def array_sort(lst: LinkedList, descending: bool = False,
               bit_width: Optional[int] = None, signed: bool = False) -> LinkedList:
    """
    Sort ``lst`` through an array; ``lst`` is consumed. Equal keys keep
    their input order in both directions.

    :param bit_width: key width, selects the array dtype (unsigned 64-bit
        keys need uint64); float keys are detected from the first node
    """
    nodes = list(lst)
    lst.head = None
    if not nodes:
        return LinkedList()

    if isinstance(nodes[0].key, float):
        dtype = np.float64
    else:
        dtype = _key_dtype(bit_width, signed)
    keys = np.fromiter((node.key for node in nodes), dtype=dtype, count=len(nodes))

    if descending:
        # stable ascending sort of the reversed array, read backwards
        order = len(nodes) - 1 - np.argsort(keys[::-1], kind="stable")[::-1]
    else:
        order = np.argsort(keys, kind="stable")

    head: Optional[SortableNode] = None
    for index in order[::-1].tolist():
        node = nodes[index]
        node.next = head
        head = node
    return LinkedList(head)
