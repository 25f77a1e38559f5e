# pbit/sorter.py
"""
Most-significant-bits-first bucket sort for singly-linked lists.

Each level takes the next K bits of the key (counted from the top), moves
every node to the front of one of 2^K bucket chains, and recurses into the
non-empty buckets. When no bits remain the bucket chains are spliced in
front of the end marker, the already-sorted suffix that is threaded
through the whole recursion, so no separate concatenation pass is needed.

Cost per sort of n nodes with M-bit keys: exactly n*(M/K) relinks and n
merge visits. Auxiliary memory is at most M/K live bucket arrays.

Stability: prepending reverses equal keys once per level, so the original
order survives when M/K is even (enforced by PbitConfig.validate_for).
"""
import logging
from typing import Callable, List, Optional, Tuple

from common import config
from list_core import LinkedList, SortableNode, debug_check, splice
from metrics.counters import Counters

from .config import KeyDescriptor, PbitConfig, PbitConfigError

logger = logging.getLogger(__name__)

KeyFn = Optional[Callable[[object], int]]


def extract_bits(key: int, shift: int, pattern_width: int) -> int:
    """
    Bucket index of ``key``: the ``pattern_width`` bits starting at ``shift``.

    Shift first, mask second: the mask discards whatever an arithmetic shift
    copies in from the sign, so negative keys give their two's-complement
    pattern bits.
    """
    return (key >> shift) & ((1 << pattern_width) - 1)


def _split(head: Optional[SortableNode], shift: int, mask: int,
           key_of: KeyFn) -> Tuple[List[Optional[SortableNode]], int]:
    tab: List[Optional[SortableNode]] = [None] * (mask + 1)
    moved = 0
    node = head
    if key_of is None:
        while node is not None:
            following = node.next
            slot = (node.key >> shift) & mask
            node.next = tab[slot]
            tab[slot] = node
            node = following
            moved += 1
    else:
        while node is not None:
            following = node.next
            slot = (key_of(node.key) >> shift) & mask
            node.next = tab[slot]
            tab[slot] = node
            node = following
            moved += 1
    return tab, moved


def split_into_buckets(lst: LinkedList, shift: int, cfg: PbitConfig,
                       counters: Optional[Counters] = None) -> List[LinkedList]:
    """
    Distribute the nodes of ``lst`` over 2^K bucket lists by the K bits at
    ``shift``. Nodes are prepended, so each bucket holds its nodes in reverse
    input order. ``lst`` is consumed.
    """
    expected = len(lst) if config.DEBUG_VALIDATE else 0
    tab, moved = _split(lst.head, shift, cfg.mask, None)
    lst.head = None
    if counters is not None:
        counters.relink_count += moved
    buckets = [LinkedList(chain) for chain in tab]
    for bucket in buckets:
        debug_check(bucket, expected, "split_into_buckets")
    return buckets


def sort_chain(head: Optional[SortableNode], remaining: int, marker: Optional[SortableNode],
               k: int, mask: int, ascending: bool, key_of: KeyFn,
               counters: Optional[Counters], depth: int) -> Optional[SortableNode]:
    """One recursion level on raw chains: split by K bits, recurse or splice."""
    if head is None:
        return marker
    shift = remaining - k
    tab, moved = _split(head, shift, mask, key_of)
    if counters is not None:
        counters.relink_count += moved
        counters.note_depth(depth)
        counters.open_bucket_array(len(tab))

    # Ascending output is assembled from the largest bucket down, so the
    # smallest keys end up in front of the marker last.
    chains = filter(None, reversed(tab) if ascending else tab)
    if shift:
        for chain in chains:
            marker = sort_chain(chain, shift, marker, k, mask, ascending, key_of, counters, depth + 1)
    else:
        for chain in chains:
            marker = splice(chain, marker, counters)

    if counters is not None:
        counters.close_bucket_array()
    return marker


def pbit_recursive(lst: LinkedList, remaining_bits: int, marker: Optional[LinkedList],
                   cfg: PbitConfig, counters: Optional[Counters] = None) -> LinkedList:
    """
    Sort ``lst`` on its low ``remaining_bits`` bits and return it followed by
    ``marker`` (an already sorted list, or None). Both roots are consumed.
    """
    if remaining_bits <= 0 or remaining_bits % cfg.pattern_width:
        raise PbitConfigError(
            f"remaining bits must be a positive multiple of {cfg.pattern_width}, got {remaining_bits}"
        )
    expected = (len(lst) + (len(marker) if marker else 0)) if config.DEBUG_VALIDATE else 0
    tail = marker.head if marker is not None else None
    head = sort_chain(lst.head, remaining_bits, tail, cfg.pattern_width, cfg.mask,
                      cfg.ascending, None, counters, 1)
    lst.head = None
    if marker is not None:
        marker.head = None
    result = LinkedList(head)
    debug_check(result, expected, "pbit_recursive")
    return result


def partition_stable(head: Optional[SortableNode],
                     goes_first: Callable[[object], bool]
                     ) -> Tuple[Optional[SortableNode], Optional[SortableNode], int]:
    """
    Split a chain in two by a key predicate, appending at the tails so both
    parts keep their input order. Returns (first, second, nodes moved).
    """
    first_head = first_tail = None
    second_head = second_tail = None
    moved = 0
    node = head
    while node is not None:
        following = node.next
        node.next = None
        if goes_first(node.key):
            if first_tail is None:
                first_head = node
            else:
                first_tail.next = node
            first_tail = node
        else:
            if second_tail is None:
                second_head = node
            else:
                second_tail.next = node
            second_tail = node
        node = following
        moved += 1
    return first_head, second_head, moved


def _is_negative(key) -> bool:
    return key < 0


def _require_keys_fit(lst: LinkedList, kd: KeyDescriptor) -> None:
    for index, node in enumerate(lst):
        if not kd.fits(node.key):
            raise ValueError(f"node {index}: {kd.bit_width}-bit key expected, got {node.key!r}")


def sort(lst: LinkedList, kd: KeyDescriptor, cfg: PbitConfig,
         counters: Optional[Counters] = None) -> LinkedList:
    """
    Sort ``lst`` by key in ``cfg.order``; ``lst`` is consumed.

    Unsigned keys take one recursive pass over all M bits. Signed keys are
    first partitioned into negatives and non-negatives (n extra relinks, order
    kept), each part is sorted on its raw M-bit pattern, and the parts are
    chained through the end marker: negatives first when ascending.

    :raises PbitConfigError: before anything is relinked, when ``cfg`` does
        not fit ``kd``
    """
    try:
        cfg.validate_for(kd)
    except PbitConfigError as e:
        logger.warning("rejected sort configuration: %s", e)
        raise

    expected = 0
    if config.DEBUG_VALIDATE:
        _require_keys_fit(lst, kd)
        expected = len(lst)

    m, k, mask, ascending = kd.bit_width, cfg.pattern_width, cfg.mask, cfg.ascending
    head = lst.head
    lst.head = None

    if kd.signed:
        negatives, non_negatives, moved = partition_stable(head, _is_negative)
        if counters is not None:
            counters.relink_count += moved
        if ascending:
            rest = sort_chain(non_negatives, m, None, k, mask, True, None, counters, 1)
            head = sort_chain(negatives, m, rest, k, mask, True, None, counters, 1)
        else:
            rest = sort_chain(negatives, m, None, k, mask, False, None, counters, 1)
            head = sort_chain(non_negatives, m, rest, k, mask, False, None, counters, 1)
    else:
        head = sort_chain(head, m, None, k, mask, ascending, None, counters, 1)

    result = LinkedList(head)
    debug_check(result, expected, "pbit.sort")
    return result
