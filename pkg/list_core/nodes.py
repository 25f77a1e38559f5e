# list_core/nodes.py
"""
Node and list-root types.

A chain is a sequence of nodes joined through ``next``; the last node has
``next = None``. LinkedList is only the root (the head link); all sorting
code works on raw head nodes and wraps the result at the public boundary.

Nodes define neither ``__len__`` nor ``__bool__`` so any node
is truthy and ``filter(None, buckets)`` skips exactly the empty slots.
"""
from enum import Enum
from typing import Any, Iterator, Optional


class SortableNode:
    __slots__ = ("key", "payload", "next")

    def __init__(self, key, payload: Any = None, next: Optional["SortableNode"] = None):
        self.key = key
        self.payload = payload
        self.next = next

    def __repr__(self) -> str:
        return f"{type(self).__name__}(key={self.key!r}, payload={self.payload!r})"


class BackLinkedNode(SortableNode):
    """Node of a doubly-linked list; sorters only maintain ``next``."""
    __slots__ = ("back",)

    def __init__(self, key, payload: Any = None, next: Optional[SortableNode] = None,
                 back: Optional[SortableNode] = None):
        super().__init__(key, payload, next)
        self.back = back


class LinkedList:
    __slots__ = ("head",)

    def __init__(self, head: Optional[SortableNode] = None):
        self.head = head

    def __iter__(self) -> Iterator[SortableNode]:
        node = self.head
        while node is not None:
            yield node
            node = node.next

    def __len__(self) -> int:
        count = 0
        node = self.head
        while node is not None:
            count += 1
            node = node.next
        return count

    def is_empty(self) -> bool:
        return self.head is None

    def __repr__(self) -> str:
        keys = []
        for i, node in enumerate(self):
            if i == 16:
                keys.append("...")
                break
            keys.append(repr(node.key))
        return f"LinkedList([{', '.join(keys)}])"


class ValidationResult(Enum):
    OK = "ok"
    CYCLE_DETECTED = "cycle-detected"
    OVERLONG = "overlong"
