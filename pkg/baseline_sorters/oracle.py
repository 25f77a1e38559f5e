# baseline_sorters/oracle.py
"""Ground-truth sort built on Python's own stable ``sorted``."""
from list_core import LinkedList, from_pairs


def oracle_sort(lst: LinkedList, descending: bool = False) -> LinkedList:
    """
    Return a fresh list holding the (key, payload) pairs of ``lst`` in key
    order; equal keys keep their input order in both directions. ``lst`` is
    left untouched.
    """
    pairs = [(node.key, node.payload) for node in lst]
    # list.sort keeps equal keys in input order, also with reverse=True
    pairs.sort(key=lambda pair: pair[0], reverse=descending)
    return from_pairs(pairs)
