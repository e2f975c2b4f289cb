"""A numeric wrapper that makes narrowing checks implicit.

Every way of getting a value into a ``Number`` goes through ``convert_to``,
so a value that would not survive the conversion raises ``NarrowError``
instead of silently changing.  Mixed-type arithmetic promotes both operands
into a common type chosen by a fixed lattice: floats beat integers, more
digits beat fewer, and between equal-size integers of differing signedness
the unsigned type wins (mirroring the usual host arithmetic rules; safety
comes from check-converting the operands, not from the lattice).  Results
that do not fit the common type raise ``CheckedOverflowError`` rather than
wrapping or saturating.

Comparisons are mathematically correct for integer operands of any
signedness mix, so ``Number(-1) < Number(2, "u32")`` is True.  Mixed
float/integer comparisons happen in the float common type with its usual
rounding, and float comparisons keep the host partial order for NaN.

Numbers are immutable values; all operations are pure and thread-safe.
"""

from __future__ import annotations

import math
from typing import Optional, Union

from .narrowing import (
    ConstraintError,
    NumericKind,
    NumericTraits,
    NumType,
    TypeSpec,
    _REGISTRATION_HOOKS,
    convert_to,
    deduced_type,
    numeric_type,
    supported_types,
)

__all__ = ["CheckedOverflowError", "Number", "common_type", "compare_lt"]


class CheckedOverflowError(OverflowError):
    """An arithmetic result cannot be represented in the common type."""

    def __init__(self, operation: str, operands, reason: str = "result not representable"):
        self.operation = operation
        self.operand_text = tuple(repr(v) for v in operands)
        self.reason = reason
        super().__init__(f"{operation}({', '.join(self.operand_text)}): {reason}")


# --- common-type lattice -----------------------------------------------------

_COMMON: dict[tuple[str, str], NumType] = {}


def _common_of(a: NumType, b: NumType) -> NumType:
    if a is b:
        return a
    a_float = a.kind is NumericKind.FLOAT
    b_float = b.kind is NumericKind.FLOAT
    if a_float != b_float:
        return a if a_float else b
    if a_float:
        return a if a.digits >= b.digits else b
    if a.byte_size == b.byte_size:
        # widths equal but types distinct, so signedness differs
        return a if a.kind is NumericKind.UNSIGNED_INT else b
    return a if a.digits > b.digits else b


def _extend_common_table(new: NumType) -> None:
    for other in supported_types():
        common = _common_of(new, other)
        _COMMON[(new.name, other.name)] = common
        _COMMON[(other.name, new.name)] = common


_REGISTRATION_HOOKS.append(_extend_common_table)
for _t in supported_types():
    _extend_common_table(_t)


def common_type(a: Union[TypeSpec, NumericTraits], b: Union[TypeSpec, NumericTraits]) -> NumType:
    """The type mixed arithmetic on the two given types executes in.

    Deterministic, commutative, and frozen in a table keyed by type names.
    Accepts types, names, or traits.
    """
    return _COMMON[(_resolve(a).name, _resolve(b).name)]


def _resolve(spec) -> NumType:
    if isinstance(spec, NumericTraits):
        for t in supported_types():
            if t.traits == spec:
                return t
        raise ConstraintError(f"no registered type has traits {spec}")
    return numeric_type(spec)


# --- the wrapper -------------------------------------------------------------

def _wrap(numtype: NumType, value) -> "Number":
    # Internal fast path for values already known to inhabit `numtype`.
    n = object.__new__(Number)
    n._type = numtype
    n._value = value
    return n


def _as_number(value) -> Optional["Number"]:
    if isinstance(value, Number):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return None
    return _wrap(deduced_type(value), value)


class Number:
    """A numeric value that refuses to be narrowed silently.

    ``Number(v)`` deduces the type from the bare value (integers follow the
    i32-then-i64 literal ladder, floats are f64); ``Number(v, "u32")``
    converts and raises ``NarrowError`` if the value would change.  There is
    no unchecked way in.  Instances are immutable: ``assign`` checks a new
    value into the same type and returns a new Number.

    Arithmetic with other Numbers or bare numerics promotes into the common
    type (see ``common_type``).  Division follows the common type: truncated
    toward zero for integers, ordinary float division otherwise.
    """

    __slots__ = ("_type", "_value")

    def __init__(self, value, of: Optional[TypeSpec] = None):
        if isinstance(value, Number):
            source, raw = value._type, value._value
        else:
            source = deduced_type(value)
            raw = value
        target = source if of is None else numeric_type(of)
        self._type = target
        self._value = convert_to(raw, source, target)

    @property
    def value(self):
        """The wrapped value, unchanged."""
        return self._value

    @property
    def numtype(self) -> NumType:
        return self._type

    def assign(self, value) -> "Number":
        """Check ``value`` into this Number's type; the original is untouched."""
        return Number(value, of=self._type)

    def __repr__(self) -> str:
        return f"Number({self._value!r}, {self._type.name})"

    def __str__(self) -> str:
        return str(self._value)

    def __hash__(self):
        return hash(self._value)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return _arith("add", self, other)

    def __radd__(self, other):
        return _arith("add", self, other, reflected=True)

    def __sub__(self, other):
        return _arith("sub", self, other)

    def __rsub__(self, other):
        return _arith("sub", self, other, reflected=True)

    def __mul__(self, other):
        return _arith("mul", self, other)

    def __rmul__(self, other):
        return _arith("mul", self, other, reflected=True)

    def __truediv__(self, other):
        return _arith("div", self, other)

    def __rtruediv__(self, other):
        return _arith("div", self, other, reflected=True)

    # comparisons --------------------------------------------------------

    def __lt__(self, other):
        rhs = _as_number(other)
        return NotImplemented if rhs is None else _lt(self, rhs)

    def __gt__(self, other):
        rhs = _as_number(other)
        return NotImplemented if rhs is None else _lt(rhs, self)

    def __le__(self, other):
        rhs = _as_number(other)
        if rhs is None:
            return NotImplemented
        return _lt(self, rhs) or _eq(self, rhs)

    def __ge__(self, other):
        rhs = _as_number(other)
        if rhs is None:
            return NotImplemented
        return _lt(rhs, self) or _eq(self, rhs)

    def __eq__(self, other):
        rhs = _as_number(other)
        return NotImplemented if rhs is None else _eq(self, rhs)


_BASIC_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
}


def _trunc_div(x: int, y: int) -> int:
    q = x // y
    if (x % y) and ((x < 0) != (y < 0)):
        q += 1
    return q


def _arith(name: str, lhs: Number, other, reflected: bool = False) -> Number:
    rhs = _as_number(other)
    if rhs is None:
        return NotImplemented
    a, b = (rhs, lhs) if reflected else (lhs, rhs)
    common = _COMMON[(a._type.name, b._type.name)]
    x = convert_to(a._value, a._type, common)
    y = convert_to(b._value, b._type, common)
    if common.kind is NumericKind.FLOAT:
        if name == "div":
            if y == 0.0:
                raise CheckedOverflowError("div", (x, y), "divide-by-zero")
            result = common.cast(x / y)
        else:
            result = common.cast(_BASIC_OPS[name](x, y))
        if not math.isfinite(result) and math.isfinite(x) and math.isfinite(y):
            raise CheckedOverflowError(name, (x, y))
    else:
        if name == "div":
            if y == 0:
                raise CheckedOverflowError("div", (x, y), "divide-by-zero")
            result = _trunc_div(x, y)
        else:
            result = _BASIC_OPS[name](x, y)
        if result < common.min or result > common.max:
            raise CheckedOverflowError(name, (x, y))
    return _wrap(common, result)


def _lt(a: Number, b: Number) -> bool:
    ka, kb = a._type.kind, b._type.kind
    if ka is NumericKind.SIGNED_INT and kb is NumericKind.UNSIGNED_INT and a._value < 0:
        return True
    if ka is NumericKind.UNSIGNED_INT and kb is NumericKind.SIGNED_INT and b._value < 0:
        return False
    common = _COMMON[(a._type.name, b._type.name)]
    return common.cast(a._value) < common.cast(b._value)


def _eq(a: Number, b: Number) -> bool:
    ka, kb = a._type.kind, b._type.kind
    if ka is NumericKind.SIGNED_INT and kb is NumericKind.UNSIGNED_INT and a._value < 0:
        return False
    if ka is NumericKind.UNSIGNED_INT and kb is NumericKind.SIGNED_INT and b._value < 0:
        return False
    common = _COMMON[(a._type.name, b._type.name)]
    return common.cast(a._value) == common.cast(b._value)


def compare_lt(x, y) -> bool:
    """Mathematically correct less-than across any integer signedness mix.

    Accepts Numbers or bare numeric values.  A negative signed operand
    compares below any unsigned operand before any conversion happens,
    which is exactly where the host rules go wrong.
    """
    a = _as_number(x)
    b = _as_number(y)
    if a is None or b is None:
        raise ConstraintError("compare_lt needs numeric operands")
    return _lt(a, b)
