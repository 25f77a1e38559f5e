# baseline_sorters/recursion.py
"""
Helpers shared by the comparison sorters.

Partition sorters degrade to recursion depth n-1 on adversarial input, so
each of them has a recursive form (used up to RECURSIVE_SORT_MAX_N nodes,
with the interpreter limit raised for the duration) and an explicit work
stack form for longer lists. Both forms produce the same chain.
"""
import sys
import threading
from contextlib import contextmanager
from typing import Callable, Iterator, Optional

from common import config
from list_core import LinkedList, SortableNode, debug_check, length
from metrics.counters import Counters

ChainSorter = Callable[[SortableNode, Optional[Counters]], SortableNode]

_MARGIN = 200
_lock = threading.Lock()
_active = 0
_saved_limit = 0


@contextmanager
def recursion_headroom(depth: int) -> Iterator[None]:
    """
    Raise the interpreter recursion limit so ``depth`` more nested calls fit.
    The original limit is restored when the last concurrent user leaves.
    """
    global _active, _saved_limit
    with _lock:
        if _active == 0:
            _saved_limit = sys.getrecursionlimit()
        _active += 1
        needed = depth + _MARGIN + _stack_depth()
        if needed > sys.getrecursionlimit():
            sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        with _lock:
            _active -= 1
            if _active == 0:
                sys.setrecursionlimit(_saved_limit)


def _stack_depth() -> int:
    count = 0
    frame = sys._getframe()
    while frame is not None:
        count += 1
        frame = frame.f_back
    return count


def run_sorter(lst: LinkedList, counters: Optional[Counters], recursive: ChainSorter,
               iterative: Optional[ChainSorter], operation: str,
               extra_nodes: int = 0) -> LinkedList:
    """
    Detach the chain from ``lst``, sort it with the recursive form when it is
    short enough and with the explicit-stack form otherwise. Sorters with
    logarithmic depth pass ``iterative=None`` and always recurse.

    :param extra_nodes: nodes the sorter appends behind the result (an end
        marker), used only for the debug-mode length check
    """
    head = lst.head
    lst.head = None
    if head is None and not extra_nodes:
        return LinkedList()
    n = length(LinkedList(head))
    if iterative is None:
        head = recursive(head, counters)
    elif n <= config.RECURSIVE_SORT_MAX_N:
        with recursion_headroom(n):
            head = recursive(head, counters)
    else:
        head = iterative(head, counters)
    result = LinkedList(head)
    debug_check(result, n + extra_nodes, operation)
    return result
