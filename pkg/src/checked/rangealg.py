"""Constraint-dispatched range algorithms.

Ranges have a traversal category: random access (indexed reads and writes
plus a length) or forward (repeatable iteration plus an ordered write-back).
A type can declare its category with a ``range_category`` class attribute,
the way a container advertises an iterator tag; otherwise the category is
inferred structurally.  ``sort`` picks the in-place random-access path
whenever it applies, because that constraint set strictly contains the
forward one, and reports which path ran.  Ranges satisfying neither
category, and element types the predicate cannot order, are rejected with
``ConstraintError`` before anything is touched.

Sorting mutates the caller's range; don't touch it concurrently during a
sort.  The functions themselves keep no shared state.
"""

from __future__ import annotations

import functools
import operator
from array import array
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .narrowing import ConstraintError
from .span import Span, register_spanable

__all__ = [
    "RangeCategory",
    "SortPath",
    "SortDispatchReport",
    "less",
    "greater",
    "register_random_access",
    "category_of",
    "sort",
    "sort_random_access",
    "sort_forward",
    "is_power_of_two",
    "Buffer",
    "LinkedList",
    "draw_all",
]

less = operator.lt
greater = operator.gt


class RangeCategory(Enum):
    RANDOM_ACCESS = "random-access"
    FORWARD = "forward"


class SortPath(Enum):
    RANDOM_ACCESS = "RandomAccess"
    FORWARD_COPY = "ForwardCopy"


@dataclass(frozen=True)
class SortDispatchReport:
    """Which sort path ran, and over how many elements."""

    chosen_path: SortPath
    element_count: int


_RANDOM_ACCESS_TYPES: list[type] = [list, bytearray, array, memoryview, Span]

# Iterable but not sortable ranges: mappings and sets have no element order
# to rewrite, the rest are immutable.
_NOT_RANGES = (dict, set, frozenset, str, bytes, tuple, range)


def register_random_access(cls: type) -> type:
    """Declare ``cls`` as a random-access range."""
    if not isinstance(cls, type):
        raise ConstraintError("register_random_access expects a type")
    if cls not in _RANDOM_ACCESS_TYPES:
        _RANDOM_ACCESS_TYPES.append(cls)
    return cls


def category_of(r) -> Optional[RangeCategory]:
    """Traversal category of ``r``, or None when it is not a usable range.

    A declared ``range_category`` class attribute wins; after that, known
    and registered random-access types; after that, structure (indexed
    read/write plus a length means random access, repeatable iteration plus
    a write-back path means forward).
    """
    declared = getattr(type(r), "range_category", None)
    if isinstance(declared, RangeCategory):
        return declared
    if isinstance(r, _NOT_RANGES):
        return None
    if isinstance(r, tuple(_RANDOM_ACCESS_TYPES)):
        return RangeCategory.RANDOM_ACCESS
    cls = type(r)
    if all(hasattr(cls, m) for m in ("__getitem__", "__setitem__", "__len__", "__iter__")):
        return RangeCategory.RANDOM_ACCESS
    if hasattr(cls, "__iter__") and (hasattr(cls, "write_back") or hasattr(cls, "__setitem__")):
        return RangeCategory.FORWARD
    return None


def _require_orderable(r, pred: Callable) -> None:
    # Probe one element against itself so an unorderable element type is
    # rejected before the range is copied or mutated.
    it = iter(r)
    try:
        first = next(it)
    except StopIteration:
        return
    try:
        pred(first, first)
    except TypeError as exc:
        if pred is less:
            raise ConstraintError(f"{type(first).__name__} does not provide <") from exc
        raise ConstraintError(
            f"{type(first).__name__} does not satisfy the sort predicate"
        ) from exc


def _host_sort(buf: list, pred: Callable) -> None:
    if pred is less:
        buf.sort()
    elif pred is greater:
        buf.sort(reverse=True)
    else:
        def cmp(x, y):
            if pred(x, y):
                return -1
            if pred(y, x):
                return 1
            return 0

        buf.sort(key=functools.cmp_to_key(cmp))


def sort_random_access(r, pred: Callable = less) -> None:
    """Sort a random-access range in place under ``pred`` (default: ascending).

    The result is a permutation of the input; equal-element order is
    unspecified.  ``pred`` must be a strict weak ordering, that part of the
    contract stays with the caller.
    """
    if category_of(r) is not RangeCategory.RANDOM_ACCESS:
        raise ConstraintError("range does not provide random access")
    _require_orderable(r, pred)
    buf = list(r)
    _host_sort(buf, pred)
    for i, v in enumerate(buf):
        r[i] = v


def sort_forward(r, pred: Callable = less) -> None:
    """Sort any forward range by copying out, sorting, and writing back.

    Works on anything at least forward (random-access ranges included) and
    leaves the range sorted under ``pred`` in traversal order.
    """
    if category_of(r) is None:
        raise ConstraintError("range is not forward-iterable with write-back")
    _require_orderable(r, pred)
    buf = list(r)
    sort_random_access(buf, pred)
    write_back = getattr(r, "write_back", None)
    if callable(write_back):
        write_back(buf)
    else:
        for i, v in enumerate(buf):
            r[i] = v


def sort(r, pred: Callable = less) -> SortDispatchReport:
    """Sort ``r`` in place, picking the strictest applicable path.

    Random access wins whenever it holds (its requirements strictly include
    the forward ones); otherwise the forward copy-out path runs.  A range
    satisfying neither is rejected.  The report records the decision.
    """
    category = category_of(r)
    if category is RangeCategory.RANDOM_ACCESS:
        sort_random_access(r, pred)
        return SortDispatchReport(SortPath.RANDOM_ACCESS, len(r))
    if category is RangeCategory.FORWARD:
        sort_forward(r, pred)
        return SortDispatchReport(SortPath.FORWARD_COPY, _range_length(r))
    raise ConstraintError(
        f"{type(r).__name__} is neither a random-access nor a forward range"
    )


def _range_length(r) -> int:
    try:
        return len(r)
    except TypeError:
        return sum(1 for _ in r)


def is_power_of_two(n: int) -> bool:
    """True iff ``n`` is a positive power of two."""
    return 0 < n and (n & (n - 1)) == 0


class Buffer:
    """Fixed-size element storage whose size constraint is checked up front.

    The size must be a power of two and at least 1024; violations raise
    ``ConstraintError`` when the buffer is created, before any storage is
    allocated, so no runtime error handler is ever needed.  Elements start
    as ``element_type()``.
    """

    MIN_SIZE = 1024

    range_category = RangeCategory.RANDOM_ACCESS

    __slots__ = ("element_type", "_items")

    def __init__(self, element_type: Callable, size: int):
        if not isinstance(size, int) or isinstance(size, bool):
            raise ConstraintError("buffer size must be an integer constant")
        if size < self.MIN_SIZE:
            raise ConstraintError(f"buffer too small: {size} < {self.MIN_SIZE}")
        if not is_power_of_two(size):
            raise ConstraintError(f"size not binary: {size} is not a power of two")
        self.element_type = element_type
        self._items = [element_type() for _ in range(size)]

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, index):
        return self._items[index]

    def __setitem__(self, index, value) -> None:
        self._items[index] = value

    def __iter__(self):
        return iter(self._items)

    def __repr__(self) -> str:
        name = getattr(self.element_type, "__name__", repr(self.element_type))
        return f"Buffer({name}, {len(self._items)})"


register_spanable(Buffer)


class _Node:
    __slots__ = ("value", "next")

    def __init__(self, value):
        self.value = value
        self.next = None


class LinkedList:
    """Singly linked sequence; the canonical forward-only range here.

    Iteration yields values front to back; ``write_back`` rewrites them in
    the same order, which is all the forward sort path needs.
    """

    range_category = RangeCategory.FORWARD

    __slots__ = ("_head", "_tail", "_count")

    def __init__(self, items=()):
        self._head = None
        self._tail = None
        self._count = 0
        for item in items:
            self.append(item)

    def append(self, value) -> None:
        node = _Node(value)
        if self._tail is None:
            self._head = node
        else:
            self._tail.next = node
        self._tail = node
        self._count += 1

    def __len__(self) -> int:
        return self._count

    def __iter__(self):
        node = self._head
        while node is not None:
            yield node.value
            node = node.next

    def write_back(self, values) -> None:
        """Overwrite the stored values in traversal order."""
        node = self._head
        count = 0
        for value in values:
            if node is None:
                raise ValueError("more values than nodes")
            node.value = value
            node = node.next
            count += 1
        if node is not None:
            raise ValueError(f"expected {self._count} values, got {count}")

    def __repr__(self) -> str:
        return f"LinkedList({list(self)!r})"


def draw_all(r) -> None:
    """Call ``draw()`` once on every handle in ``r``, in order.

    Works across any forward range of heterogeneous handles; the only
    requirement is that each element exposes a callable ``draw``.
    """
    try:
        handles = iter(r)
    except TypeError as exc:
        raise ConstraintError(f"{type(r).__name__} is not iterable") from exc
    for handle in handles:
        draw = getattr(handle, "draw", None)
        if not callable(draw):
            raise ConstraintError(f"{type(handle).__name__} has no draw()")
        draw()
