"""Declaration-ordered record layout descriptors.

A record type opts in by registration with a fixed field order; its layout
(one ``(name, offset, size)`` descriptor per field, in declaration order) is
computed once at registration time and immutable afterwards.  Offsets follow
the reference 64-bit C rules: scalars are naturally aligned, the record is
padded to its strictest member alignment, and owned text occupies a 24-byte
block aligned to 8 (pointer, length, capacity).

Only flat records of known primitives are supported; anything else is
rejected at registration, before a single descriptor exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .narrowing import ConstraintError

__all__ = [
    "MemberDescriptor",
    "RecordType",
    "PRIMITIVE_LAYOUTS",
    "register_record",
    "layout_of",
    "record_size",
    "registered_record_names",
]


@dataclass(frozen=True)
class MemberDescriptor:
    """Placement of one field: its name, byte offset, and byte size."""

    name: str
    offset: int
    size: int


#: (size, alignment) per primitive field type on the 64-bit reference
#: platform.  "text" models an owned string: three 8-byte words.
PRIMITIVE_LAYOUTS: dict[str, tuple[int, int]] = {
    "i8": (1, 1),
    "u8": (1, 1),
    "i16": (2, 2),
    "u16": (2, 2),
    "i32": (4, 4),
    "u32": (4, 4),
    "i64": (8, 8),
    "u64": (8, 8),
    "f32": (4, 4),
    "f64": (8, 8),
    "sf16": (2, 2),
    "text": (24, 8),
}


@dataclass(frozen=True)
class RecordType:
    """A registered record: ordered fields plus the computed layout."""

    name: str
    fields: tuple[tuple[str, str], ...]
    layout: tuple[MemberDescriptor, ...]
    size: int
    alignment: int


_RECORDS: dict[str, RecordType] = {}


def _align_up(offset: int, alignment: int) -> int:
    return (offset + alignment - 1) // alignment * alignment


def register_record(name: str, fields) -> RecordType:
    """Register a record type and fix its layout.

    ``fields`` is an ordered iterable of ``(field_name, primitive)`` pairs.
    Unknown primitives, duplicate or invalid names, and re-registration are
    all rejected here, so every registered record has a valid layout.
    """
    if not isinstance(name, str) or not name.isidentifier():
        raise ConstraintError(f"record name {name!r} is not an identifier")
    if name in _RECORDS:
        raise ConstraintError(f"record {name!r} already registered")
    normalized: list[tuple[str, str]] = []
    seen: set[str] = set()
    for field_name, primitive in fields:
        if not isinstance(field_name, str) or not field_name.isidentifier():
            raise ConstraintError(f"field name {field_name!r} is not an identifier")
        if field_name in seen:
            raise ConstraintError(f"duplicate field name {field_name!r}")
        if primitive not in PRIMITIVE_LAYOUTS:
            raise ConstraintError(f"unknown field type {primitive!r}")
        seen.add(field_name)
        normalized.append((field_name, primitive))

    offset = 0
    alignment = 1
    descriptors: list[MemberDescriptor] = []
    for field_name, primitive in normalized:
        size, align = PRIMITIVE_LAYOUTS[primitive]
        offset = _align_up(offset, align)
        descriptors.append(MemberDescriptor(field_name, offset, size))
        offset += size
        alignment = max(alignment, align)
    total = _align_up(offset, alignment)

    record = RecordType(name, tuple(normalized), tuple(descriptors), total, alignment)
    _RECORDS[name] = record
    return record


def _resolve(record) -> RecordType:
    if isinstance(record, RecordType):
        return record
    if isinstance(record, str):
        try:
            return _RECORDS[record]
        except KeyError:
            raise ConstraintError(f"unknown record type {record!r}") from None
    raise ConstraintError(f"cannot interpret {record!r} as a record type")


def layout_of(record) -> tuple[MemberDescriptor, ...]:
    """The record's member descriptors, one per field in declaration order."""
    return _resolve(record).layout


def record_size(record) -> int:
    """Total padded size of the record in bytes."""
    return _resolve(record).size


def registered_record_names() -> tuple[str, ...]:
    return tuple(_RECORDS)


# Reference records, also used by the layout demo.  X is the classic
# byte / int / owned-text shape with interior padding.
register_record("X", [("a", "i8"), ("b", "i32"), ("c", "text")])
register_record("Empty", [])
register_record("Word", [("w", "u64")])
register_record("Mixed", [
    ("flag", "i8"),
    ("count", "u16"),
    ("tag", "i8"),
    ("ratio", "f64"),
    ("scale", "f32"),
])
register_record("AllInts", [
    ("a", "i8"), ("b", "i16"), ("c", "i32"), ("d", "i64"),
    ("e", "u8"), ("f", "u16"), ("g", "u32"), ("h", "u64"),
])
register_record("Tail", [("big", "f64"), ("small", "i8")])
