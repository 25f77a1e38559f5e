# list_core/operations.py
"""
Operations on singly-linked chains.

Public functions take and return LinkedList roots. Functions that relink
nodes consume their input roots (the roots are emptied) so no two roots
ever share a chain.
"""
import logging
import sys
from typing import Any, Iterable, List, Optional, Tuple, Type

from common import config
from metrics.counters import Counters

from .nodes import LinkedList, SortableNode, ValidationResult

logger = logging.getLogger(__name__)


class ListAllocationError(RuntimeError):
    """A node could not be allocated."""


class ChainValidationError(ValueError):
    """A chain failed validation in debug mode (cycle or more nodes than expected)."""


def validate(lst: LinkedList, max_nodes: int) -> ValidationResult:
    """
    Check that the chain is acyclic and holds at most ``max_nodes`` nodes.

    Two-speed traversal: ``fast`` moves two links per step of ``slow``; on an
    acyclic chain it stays strictly ahead, so meeting ``slow`` means a cycle.
    A cycle is reported even when the bound is also exceeded.
    """
    count = 0
    slow = fast = lst.head
    while fast is not None:
        fast = fast.next
        count += 1
        if fast is None:
            break
        fast = fast.next
        count += 1
        slow = slow.next
        if fast is slow:
            return ValidationResult.CYCLE_DETECTED
    if count > max_nodes:
        return ValidationResult.OVERLONG
    return ValidationResult.OK


def debug_check(lst: LinkedList, max_nodes: int, operation: str) -> None:
    """Validate ``lst`` when LISTSORT_LAB_DEBUG is on; raise on failure."""
    if not config.DEBUG_VALIDATE:
        return
    result = validate(lst, max_nodes)
    logger.debug("%s: chain validation -> %s", operation, result.value)
    if result is not ValidationResult.OK:
        raise ChainValidationError(f"{operation}: chain validation failed ({result.value})")


def _new_node(node_type: Type[SortableNode], key, payload) -> SortableNode:
    try:
        return node_type(key, payload)
    except MemoryError as e:
        raise ListAllocationError(f"memory overflow while allocating node for key {key!r}") from e


def push(lst: LinkedList, key, payload: Any = None, descriptor=None,
         node_type: Type[SortableNode] = SortableNode) -> LinkedList:
    """
    Insert a new node in front of the list (stack discipline).

    :param descriptor: optional key descriptor; when given the key must fit it
    :raises ListAllocationError: when the node cannot be allocated
    """
    if descriptor is not None:
        descriptor.require_fits(key)
    node = _new_node(node_type, key, payload)
    node.next = lst.head
    lst.head = node
    # the list's prior length is unknown; only cycles are caught
    debug_check(lst, sys.maxsize, "push")
    return lst


def splice(a: Optional[SortableNode], b: Optional[SortableNode],
           counters: Optional[Counters] = None) -> Optional[SortableNode]:
    """
    Walk chain ``a`` to its terminal node and link ``b`` behind it.

    Counts one visit for the first node of ``a`` and one per advance; no
    early exit when ``b`` is empty.
    """
    if a is None:
        return b
    visited = 1
    tail = a
    while tail.next is not None:
        tail = tail.next
        visited += 1
    tail.next = b
    if counters is not None:
        counters.merge_visit_count += visited
    return a


def merge(a: LinkedList, b: LinkedList, counters: Optional[Counters] = None) -> LinkedList:
    """Concatenate ``b`` behind ``a``; both roots are consumed."""
    expected = len(a) + len(b) if config.DEBUG_VALIDATE else 0
    result = LinkedList(splice(a.head, b.head, counters))
    a.head = b.head = None
    debug_check(result, expected, "merge")
    return result


def length(lst: LinkedList) -> int:
    return len(lst)


def from_pairs(pairs: Iterable[Tuple[Any, Any]],
               node_type: Type[SortableNode] = SortableNode) -> LinkedList:
    """Build a list whose nodes carry the given (key, payload) pairs in order."""
    head: Optional[SortableNode] = None
    tail: Optional[SortableNode] = None
    count = 0
    for key, payload in pairs:
        node = _new_node(node_type, key, payload)
        count += 1
        if tail is None:
            head = node
        else:
            tail.next = node
        tail = node
    result = LinkedList(head)
    debug_check(result, count, "from_pairs")
    return result


def from_sequence(keys: Iterable, node_type: Type[SortableNode] = SortableNode) -> LinkedList:
    """Build a list with the keys in order; each payload is the key's input index."""
    return from_pairs(((key, index) for index, key in enumerate(keys)), node_type)


def to_sequence(lst: LinkedList) -> List:
    return [node.key for node in lst]


def to_pairs(lst: LinkedList) -> List[Tuple[Any, Any]]:
    return [(node.key, node.payload) for node in lst]


def repair_back_links(lst: LinkedList) -> LinkedList:
    """
    Recompute ``back`` on every node of a doubly-linked list after its
    forward links were rewritten (for example by a sort).
    """
    debug_check(lst, sys.maxsize, "repair_back_links")
    previous = None
    node = lst.head
    while node is not None:
        node.back = previous
        previous = node
        node = node.next
    return lst
