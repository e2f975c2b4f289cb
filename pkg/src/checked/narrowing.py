"""Checked numeric conversions over a closed set of fixed-width types.

The central question is always "can converting this value lose information
or change its meaning?".  It is answered in two stages:

* a per-type-pair classification, computed once at import time, says whether
  a conversion between two types can narrow at all;
* a per-value test runs only for pairs where the classification says
  narrowing is possible.

``narrow_checker`` exposes the staged form directly: it returns ``None`` for
pairs that can never narrow, so hot paths can skip per-value work entirely.
``convert_to`` raises ``NarrowError`` instead of ever returning a changed
value.

The supported set is the 8/16/32/64-bit signed and unsigned integers, the
32/64-bit binary floats, and ``sf16``, a software-emulated bfloat16-style
float (8 mantissa digits in 2 bytes) included so the small-mantissa rules
are exercisable without special hardware.  ``register_numeric_type`` extends
the set; arbitrary-precision types are deliberately unsupported.

All operations are pure functions over plain values and safe to call from
any thread.  Registering new types is the one exception and belongs in
start-up code.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Callable, Optional, Union

__all__ = [
    "NumericKind",
    "NumericTraits",
    "NumType",
    "NarrowError",
    "ConstraintError",
    "NARROWING_MATRIX",
    "numeric_type",
    "supported_types",
    "register_numeric_type",
    "deduced_type",
    "traits_of",
    "can_narrow_to",
    "can_narrow",
    "narrow_checker",
    "will_narrow",
    "convert_to",
    "convert_explicit",
    "convert",
    "I8", "I16", "I32", "I64",
    "U8", "U16", "U32", "U64",
    "F32", "F64", "SF16",
]


class NumericKind(Enum):
    """Classification of a numeric type."""

    SIGNED_INT = "signed-int"
    UNSIGNED_INT = "unsigned-int"
    FLOAT = "float"


@dataclass(frozen=True)
class NumericTraits:
    """Shape of a numeric type, fixed per type and usable without any value.

    ``digits`` counts representable-value bits: width minus the sign bit for
    signed integers, the full width for unsigned ones, and the mantissa
    precision (implicit bit included) for floats.
    """

    kind: NumericKind
    digits: int
    byte_size: int


class NarrowError(ValueError):
    """A conversion would lose information or change the value's meaning."""

    def __init__(self, value, source: "NumType", target: "NumType") -> None:
        self.value_text = repr(value)
        self.source_name = source.name
        self.target_name = target.name
        super().__init__(
            f"converting {self.value_text} from {source.name} to "
            f"{target.name} would change its value"
        )


class ConstraintError(TypeError):
    """A type-level requirement failed; raised before any per-value work."""


class NumType:
    """One member of the supported numeric set.

    Instances are interned, compare them with ``is``.  ``cast`` applies the
    host-style conversion into the type (two's-complement wrap for integers,
    truncation toward zero for float-to-integer, round-to-nearest-even for
    floats) and is intentionally unchecked; the checked entry points are
    ``convert_to`` and friends.
    """

    __slots__ = ("name", "kind", "digits", "byte_size", "min", "max", "_cast")

    def __init__(self, name, kind, digits, byte_size, min_value, max_value, cast):
        self.name = name
        self.kind = kind
        self.digits = digits
        self.byte_size = byte_size
        self.min = min_value
        self.max = max_value
        self._cast = cast

    @property
    def traits(self) -> NumericTraits:
        return NumericTraits(self.kind, self.digits, self.byte_size)

    def cast(self, value):
        return self._cast(value)

    def __repr__(self) -> str:
        return self.name


# --- host-style casts -------------------------------------------------------

def _wrap_int_cast(bits: int, signed: bool):
    mask = (1 << bits) - 1
    sign_bit = 1 << (bits - 1)

    def cast(value):
        i = int(value)  # truncates a float's fraction toward zero
        i &= mask
        if signed and i & sign_bit:
            i -= 1 << bits
        return i

    return cast


def _cast_f64(value) -> float:
    try:
        return float(value)
    except OverflowError:  # integers beyond the f64 range
        return math.inf if value > 0 else -math.inf


def _cast_f32(value) -> float:
    d = _cast_f64(value)
    try:
        return struct.unpack("<f", struct.pack("<f", d))[0]
    except OverflowError:  # rounds past the largest finite f32
        return math.copysign(math.inf, d)


def _cast_sf16(value) -> float:
    f = _cast_f32(value)
    if math.isnan(f) or math.isinf(f):
        return f
    # bfloat16 shares f32's exponent layout; round the low 16 mantissa bits
    # to nearest, ties to even.  Carry into the exponent (up to infinity) is
    # handled by the integer addition itself.
    bits = struct.unpack("<I", struct.pack("<f", f))[0]
    rounded = (bits + 0x7FFF + ((bits >> 16) & 1)) >> 16
    return struct.unpack("<f", struct.pack("<I", (rounded << 16) & 0xFFFFFFFF))[0]


# --- registry and classification tables -------------------------------------

_TYPES: dict[str, NumType] = {}
_MATRIX: dict[tuple[str, str], bool] = {}
_CHECKERS: dict[tuple[str, str], Optional[Callable]] = {}
_REGISTRATION_HOOKS: list[Callable[[NumType], None]] = []

#: Read-only view of the per-pair classification, keyed by (source name,
#: target name).  Filled when types are registered (import time for the
#: built-in set), never per value.
NARROWING_MATRIX = MappingProxyType(_MATRIX)

TypeSpec = Union[NumType, str]


def numeric_type(spec: TypeSpec) -> NumType:
    """Resolve a type object or name to the interned ``NumType``."""
    if isinstance(spec, NumType):
        return spec
    if isinstance(spec, str):
        try:
            return _TYPES[spec]
        except KeyError:
            raise ConstraintError(f"unknown numeric type {spec!r}") from None
    raise ConstraintError(f"cannot interpret {spec!r} as a numeric type")


def supported_types() -> tuple[NumType, ...]:
    """The currently registered numeric types, in registration order."""
    return tuple(_TYPES.values())


def traits_of(spec: TypeSpec) -> NumericTraits:
    """Traits table entry for a supported type."""
    return numeric_type(spec).traits


def _signed(traits: NumericTraits) -> bool:
    return traits.kind is NumericKind.SIGNED_INT


def can_narrow_to(src: NumericTraits, dst: NumericTraits, same_type: bool) -> bool:
    """Can converting a ``src``-shaped value to ``dst`` lose information?

    True when a fraction can be dismissed (float source, integer target),
    when the target has fewer value digits, or when a sign can change
    meaning.  A signed source can hide a negative from any unsigned target
    whatever the widths, so the sign rule cannot be limited to equal-size
    pairs; the reverse direction (unsigned into signed) is already covered
    by the digits rule at equal size and is harmless when widening.

    Pure over the traits; the result for every registered pair is frozen
    into ``NARROWING_MATRIX`` when the types are registered, so nothing here
    runs on a per-value path.
    """
    if same_type:
        return False
    return (
        (src.kind is NumericKind.FLOAT and dst.kind is not NumericKind.FLOAT)
        or src.digits > dst.digits
        or (_signed(src) and dst.kind is NumericKind.UNSIGNED_INT)
    )


def can_narrow(source: TypeSpec, target: TypeSpec) -> bool:
    """Table lookup form of ``can_narrow_to`` for registered types."""
    return _MATRIX[(numeric_type(source).name, numeric_type(target).name)]


def _make_checker(src: NumType, dst: NumType) -> Optional[Callable]:
    """Per-value narrowing test for one type pair, or None when impossible.

    Built once per pair at registration time.  The returned callable never
    inspects the source value unless the pair classification allows
    narrowing (in which case this function returned a real test).
    """
    if not _MATRIX[(src.name, dst.name)]:
        return None
    if src.kind is not NumericKind.FLOAT and dst.kind is not NumericKind.FLOAT:
        # Integer to integer: a sign flip or truncation is exactly an
        # out-of-range value; in-range integers always convert exactly.
        lo, hi = dst.min, dst.max

        def check_int(value, _lo=lo, _hi=hi):
            return value < _lo or value > _hi

        return check_int
    if dst.kind is not NumericKind.FLOAT:
        # Float to integer: the value must be integral and in range.
        lo, hi = dst.min, dst.max

        def check_float_to_int(value, _lo=lo, _hi=hi):
            if not math.isfinite(value):
                return True
            return not float(value).is_integer() or value < _lo or value > _hi

        return check_float_to_int

    # Anything to float: convert, convert back, compare exactly.  Python
    # compares int and float values exactly, so equality holds iff the
    # target represents the value.  NaN never round-trips by this rule.
    cast = dst._cast

    def check_to_float(value, _cast=cast):
        return _cast(value) != value

    return check_to_float


def narrow_checker(source: TypeSpec, target: TypeSpec) -> Optional[Callable]:
    """Per-value narrowing test for the pair, or ``None`` if never needed.

    The ``None`` case is the zero-overhead path: once the pair is known,
    callers can drop the test from their hot loop entirely.
    """
    return _CHECKERS[(numeric_type(source).name, numeric_type(target).name)]


def will_narrow(value, source: TypeSpec, target: TypeSpec) -> bool:
    """Would converting ``value`` from ``source`` to ``target`` change it?

    Returns ``False`` without inspecting the value at all when the pair
    classification rules narrowing out.
    """
    chk = _CHECKERS[(numeric_type(source).name, numeric_type(target).name)]
    return False if chk is None else bool(chk(value))


def convert_to(value, source: TypeSpec, target: TypeSpec):
    """Convert ``value`` between supported types without changing it.

    The result compares mathematically equal to the input; if no such result
    exists in the target type, ``NarrowError`` is raised instead.
    """
    src = numeric_type(source)
    dst = numeric_type(target)
    chk = _CHECKERS[(src.name, dst.name)]
    if chk is not None and chk(value):
        raise NarrowError(value, src, dst)
    return dst._cast(value)


def convert_explicit(value, target):
    """Value-preserving explicit construction for non-numeric targets.

    ``target`` is any callable type; pairs the host cannot construct fail
    with the constructor's own error.  Used by ``convert`` when the checked
    numeric overload does not apply.
    """
    return target(value)


def convert(value, target):
    """Checked conversion when both sides are numeric, explicit otherwise.

    The stricter overload wins whenever it applies: a numeric value headed
    for a registered numeric type goes through ``convert_to`` and can raise
    ``NarrowError``; everything else is built with ``target(value)``.
    """
    if isinstance(target, NumType) or (isinstance(target, str) and target in _TYPES):
        dst = numeric_type(target)
        numtype = getattr(value, "numtype", None)
        if isinstance(numtype, NumType):
            return convert_to(value.value, numtype, dst)
        return convert_to(value, deduced_type(value), dst)
    return convert_explicit(value, target)


def deduced_type(value) -> NumType:
    """Numeric type a bare Python value stands for.

    Integers follow the i32-then-i64 literal ladder, floats are f64.  A
    positive integer beyond the i64 range deduces to u64, the one supported
    type that holds it exactly.  bool is rejected outright, its arithmetic
    quirks are out of scope here.
    """
    if isinstance(value, bool):
        raise ConstraintError("bool is outside the supported numeric set")
    if isinstance(value, int):
        if I32.min <= value <= I32.max:
            return I32
        if I64.min <= value <= I64.max:
            return I64
        if 0 <= value <= U64.max:
            return U64
        raise ConstraintError(
            f"integer {value} does not fit any supported type; "
            "register a wider one or pass an explicit type"
        )
    if isinstance(value, float):
        return F64
    raise ConstraintError(f"cannot deduce a numeric type for {type(value).__name__}")


def register_numeric_type(
    name: str,
    kind: NumericKind,
    digits: int,
    byte_size: int,
    *,
    cast: Optional[Callable] = None,
) -> NumType:
    """Add a fixed-width numeric type to the supported set.

    Integer kinds derive their range and wrap-around cast from the width;
    float kinds must supply a ``cast`` that rounds an exact value into the
    type.  The classification tables are extended in place for every pair
    involving the new type.
    """
    if not isinstance(name, str) or not name.isidentifier():
        raise ConstraintError(f"type name {name!r} is not an identifier")
    if name in _TYPES:
        raise ConstraintError(f"numeric type {name!r} already registered")
    if byte_size < 1 or digits < 1:
        raise ConstraintError("digits and byte_size must be at least 1")
    bits = 8 * byte_size
    if kind is NumericKind.SIGNED_INT:
        if digits != bits - 1:
            raise ConstraintError(f"signed {name}: digits must be {bits - 1}")
        lo, hi = -(1 << (bits - 1)), (1 << (bits - 1)) - 1
        cast = _wrap_int_cast(bits, signed=True)
    elif kind is NumericKind.UNSIGNED_INT:
        if digits != bits:
            raise ConstraintError(f"unsigned {name}: digits must be {bits}")
        lo, hi = 0, (1 << bits) - 1
        cast = _wrap_int_cast(bits, signed=False)
    else:
        if digits >= bits:
            raise ConstraintError(f"float {name}: digits must be below {bits}")
        if cast is None:
            raise ConstraintError(f"float {name}: a rounding cast is required")
        lo = hi = None
    nt = NumType(name, kind, digits, byte_size, lo, hi, cast)
    _TYPES[name] = nt
    for other in _TYPES.values():
        for a, b in ((nt, other), (other, nt)):
            key = (a.name, b.name)
            _MATRIX[key] = can_narrow_to(a.traits, b.traits, a is b)
            _CHECKERS[key] = _make_checker(a, b)
    for hook in _REGISTRATION_HOOKS:
        hook(nt)
    return nt


I8 = register_numeric_type("i8", NumericKind.SIGNED_INT, 7, 1)
U8 = register_numeric_type("u8", NumericKind.UNSIGNED_INT, 8, 1)
I16 = register_numeric_type("i16", NumericKind.SIGNED_INT, 15, 2)
U16 = register_numeric_type("u16", NumericKind.UNSIGNED_INT, 16, 2)
I32 = register_numeric_type("i32", NumericKind.SIGNED_INT, 31, 4)
U32 = register_numeric_type("u32", NumericKind.UNSIGNED_INT, 32, 4)
I64 = register_numeric_type("i64", NumericKind.SIGNED_INT, 63, 8)
U64 = register_numeric_type("u64", NumericKind.UNSIGNED_INT, 64, 8)
F32 = register_numeric_type("f32", NumericKind.FLOAT, 24, 4, cast=_cast_f32)
F64 = register_numeric_type("f64", NumericKind.FLOAT, 53, 8, cast=_cast_f64)
SF16 = register_numeric_type("sf16", NumericKind.FLOAT, 8, 2, cast=_cast_sf16)
