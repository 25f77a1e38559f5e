"""
Singly-linked List Primitives

This package contains:
- The node model (SortableNode, BackLinkedNode) and the LinkedList root
- Stack-style insertion (push) and end-splice concatenation (merge)
- Conversion to and from plain Python sequences
- Chain validation with two-speed cycle detection
- Back-link repair for doubly-linked lists after a forward-only sort
"""
from .nodes import BackLinkedNode, LinkedList, SortableNode, ValidationResult
from .operations import (
    ChainValidationError,
    ListAllocationError,
    debug_check,
    from_pairs,
    from_sequence,
    length,
    merge,
    push,
    repair_back_links,
    splice,
    to_pairs,
    to_sequence,
    validate,
)

__all__ = [
    "BackLinkedNode",
    "ChainValidationError",
    "LinkedList",
    "ListAllocationError",
    "SortableNode",
    "ValidationResult",
    "debug_check",
    "from_pairs",
    "from_sequence",
    "length",
    "merge",
    "push",
    "repair_back_links",
    "splice",
    "to_pairs",
    "to_sequence",
    "validate",
]
