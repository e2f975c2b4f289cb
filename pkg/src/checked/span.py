"""Length-carrying, bounds-checked views over contiguous storage.

A ``Span`` never owns elements; it records a backing sequence, a start
offset, and a validated length.  Counts and indices pass through the checked
unsigned conversion first, so a negative or fractional index raises
``NarrowError`` before any range logic runs (there is no Python-style
wrap-around), and an index outside ``[0, len)`` raises ``RangeError``.

The one deliberate hole is ``Span.unchecked``: the caller asserts the
extent, nothing validates it, and the name exists to stand out in review.
Indexing through such a span still checks against the claimed length.

Spans are plain values and may be shared freely across threads; access to
the underlying elements is not synchronized here, that contract stays with
the caller, as for any non-owning view.
"""

from __future__ import annotations

from array import array

from .narrowing import U32, ConstraintError, convert_to, deduced_type
from .number import Number

__all__ = ["RangeError", "Span", "register_spanable", "is_spanable"]


class RangeError(IndexError):
    """An index or bound failed the span's length check."""

    def __init__(self, attempted, length: int) -> None:
        self.attempted = attempted
        self.length = length
        super().__init__(f"index {attempted} out of range for span of length {length}")


# Contiguous, writable backing stores.  str/bytes/tuple are immutable and
# deliberately absent; spans are read/write views.
_SPANABLE_TYPES: list[type] = [list, bytearray, array, memoryview]


def register_spanable(cls: type) -> type:
    """Declare ``cls`` as contiguous element storage usable behind a Span."""
    if not isinstance(cls, type):
        raise ConstraintError("register_spanable expects a type")
    if cls not in _SPANABLE_TYPES:
        _SPANABLE_TYPES.append(cls)
    return cls


def is_spanable(obj) -> bool:
    return isinstance(obj, Span) or isinstance(obj, tuple(_SPANABLE_TYPES))


def _as_unsigned(value) -> int:
    """Checked conversion of an index/count into the unsigned index type."""
    if isinstance(value, Number):
        return convert_to(value.value, value.numtype, U32)
    return convert_to(value, deduced_type(value), U32)


def _view_of(storage):
    if isinstance(storage, Span):
        return storage._storage, storage._offset, storage._length
    if not is_spanable(storage):
        raise ConstraintError(
            f"{type(storage).__name__} is not a contiguous range"
        )
    return storage, 0, len(storage)


class Span:
    """Bounds-checked view of a contiguous range.

    ``Span(r)`` views all of ``r``; ``Span(r, n)`` views the first ``n``
    elements (``n`` may not exceed the range size); ``Span(r, lo, hi)``
    views ``[lo:hi)``.  Counts and bounds accept any numeric value and are
    converted with the checked unsigned conversion, so ``Span(a, -500)``
    raises ``NarrowError`` rather than producing an enormous view.
    """

    __slots__ = ("_storage", "_offset", "_length")

    def __init__(self, storage, low=None, high=None):
        base, offset, size = _view_of(storage)
        if low is None:
            length = size
        elif high is None:
            nn = _as_unsigned(low)
            if nn > size:
                raise RangeError(nn, size)
            length = nn
        else:
            lo = _as_unsigned(low)
            hi = _as_unsigned(high)
            if hi > size:
                raise RangeError(hi, size)
            if lo > hi:
                raise RangeError(lo, size)
            offset += lo
            length = hi - lo
        self._storage = base
        self._offset = offset
        self._length = length

    @classmethod
    def unchecked(cls, storage, count) -> "Span":
        """View ``count`` elements of ``storage`` on the caller's say-so.

        Nothing verifies that the storage really has ``count`` elements;
        this is the only unchecked entry point and should draw review.  The
        count itself still goes through the checked unsigned conversion, so
        a negative count raises ``NarrowError`` even here.
        """
        span = object.__new__(cls)
        span._storage = storage
        span._offset = 0
        span._length = _as_unsigned(count)
        return span

    def __len__(self) -> int:
        return self._length

    def check(self, index) -> int:
        """Validated element index: returns it when inside ``[0, len)``."""
        i = _as_unsigned(index)
        if i >= self._length:
            raise RangeError(i, self._length)
        return i

    def __getitem__(self, index):
        return self._storage[self._offset + self.check(index)]

    def __setitem__(self, index, value) -> None:
        self._storage[self._offset + self.check(index)] = value

    def __iter__(self):
        storage, base = self._storage, self._offset
        for i in range(self._length):
            yield storage[base + i]

    def __repr__(self) -> str:
        return (
            f"Span(length={self._length}, offset={self._offset}, "
            f"storage={type(self._storage).__name__})"
        )
