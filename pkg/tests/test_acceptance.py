"""Acceptance suite: one test per exit criterion, at its stated tolerance.

Each test prints a PASS line when it completes, so a verbose run reads as a
per-criterion report.  Random batteries use fixed seeds.
"""

import math
import os
import random
import struct
import time
from collections import Counter
from array import array

import pytest

from checked import (
    F32,
    F64,
    I8,
    I16,
    I32,
    I64,
    SF16,
    U8,
    U16,
    U32,
    U64,
    NARROWING_MATRIX,
    Buffer,
    ConstraintError,
    LinkedList,
    Number,
    SortPath,
    Span,
    compare_lt,
    greater,
    less,
    narrow_checker,
    sort,
    sort_forward,
    sort_random_access,
    supported_types,
    will_narrow,
)
from checked.cli import run_bench
from checked.demos import DEMO_NAMES, run_demo
from checked.reflectlayout import _RECORDS, register_record

import oracle

ALL_TYPES = supported_types()
SMALL_INT_TYPES = [I8, U8, I16, U16]
WIDE_TYPES = [I32, U32, I64, U64, F32, F64, SF16]
ON_64_BIT = struct.calcsize("P") == 8


def _report(line: str) -> None:
    print(f"ACCEPTANCE {line}")


# --- criterion: narrowing soundness ------------------------------------------

def _random_member(rng: random.Random, t):
    if t.min is not None:
        return rng.randint(t.min, t.max)
    while True:
        if t is F64:
            value = struct.unpack("<d", rng.getrandbits(64).to_bytes(8, "little"))[0]
        elif t is F32:
            value = struct.unpack("<f", rng.getrandbits(32).to_bytes(4, "little"))[0]
        else:
            bits = rng.getrandbits(16) << 16
            value = struct.unpack("<f", bits.to_bytes(4, "little"))[0]
        if math.isfinite(value):
            return value


def _boundary_members(t):
    if t.min is not None:
        candidates = {0, 1, -1, t.min, t.max, t.min + 1, t.max - 1}
        for k in (7, 8, 15, 16, 23, 24, 31, 32, 52, 53, 63, 64):
            for base in (2**k, -(2**k)):
                candidates.update({base, base - 1, base + 1})
        return sorted(v for v in candidates if t.min <= v <= t.max)
    digits, _, max_finite = oracle.FLOAT_SPECS[t.name]
    candidates = {0.0, 1.0, -1.0, 0.5, -0.5, float(max_finite), -float(max_finite)}
    for k in (1, 7, 8, 23, 24, 52, 53, 63):
        candidates.update({2.0**k, -(2.0**k)})
    candidates.update({float(2**digits - 1), float(2**digits), float(2**digits + 2)})
    return sorted(v for v in candidates if oracle.representable(v, t.name))


def test_narrowing_soundness_exhaustive_and_randomized():
    started = time.perf_counter()
    mismatches = 0
    checked_count = 0
    for src in SMALL_INT_TYPES:
        for value in range(src.min, src.max + 1):
            for dst in ALL_TYPES:
                expected = not oracle.representable(value, dst.name)
                if will_narrow(value, src, dst) is not expected:
                    mismatches += 1
                checked_count += 1
    exhaustive_elapsed = time.perf_counter() - started
    assert mismatches == 0
    assert exhaustive_elapsed < 60.0

    rng = random.Random(0xC0FFEE)
    for _ in range(1_000_000):
        src = rng.choice(WIDE_TYPES)
        dst = rng.choice(ALL_TYPES)
        value = _random_member(rng, src)
        expected = not oracle.representable(value, dst.name)
        assert will_narrow(value, src, dst) is expected, (value, src.name, dst.name)
        checked_count += 1

    for src in WIDE_TYPES:
        for value in _boundary_members(src):
            assert oracle.representable(value, src.name)
            for dst in ALL_TYPES:
                expected = not oracle.representable(value, dst.name)
                assert will_narrow(value, src, dst) is expected, (value, src.name, dst.name)
                checked_count += 1

    _report(
        f"PASS narrowing soundness: {checked_count} conversions agree with the "
        f"exact oracle, exhaustive part in {exhaustive_elapsed:.1f}s"
    )


# --- criterion: worked-example tables ----------------------------------------

def test_demo_expectation_tables_all_pass():
    total = 0
    for name in DEMO_NAMES:
        results = run_demo(name)
        assert results, name
        for result in results:
            assert result.ok, (name, result.label, result.expected, result.actual)
        total += len(results)
    _report(f"PASS worked-example tables: {total} recorded outcomes reproduced exactly")


# --- criterion: mixed-sign comparison ----------------------------------------

def _u16_boundaries():
    return [0, 1, 2, 3, 255, 256, 32766, 32767, 32768, 32769, 65534, 65535]


def _i16_boundaries():
    return [-32768, -32767, -2, -1, 0, 1, 2, 255, 256, 32766, 32767]


def test_mixed_sign_comparison_agrees_with_exact_order():
    assert compare_lt(Number(-1, I32), Number(2, U32)) is True

    comparisons = 0
    # Full cross products at 8 bits, every signedness mix.
    for ta, tb in ((I8, U8), (U8, I8), (I8, I8), (U8, U8)):
        lhs = [Number(v, ta) for v in range(ta.min, ta.max + 1)]
        rhs = [Number(v, tb) for v in range(tb.min, tb.max + 1)]
        for x in lhs:
            xv = x.value
            for y in rhs:
                if compare_lt(x, y) is not (xv < y.value):
                    raise AssertionError((ta.name, xv, tb.name, y.value))
                comparisons += 1

    # Exhaustive per-axis sweeps at 16 bits: every value of each type against
    # a boundary set of the other, in both directions.
    u16_boundary = [Number(v, U16) for v in _u16_boundaries()]
    for xv in range(I16.min, I16.max + 1):
        x = Number(xv, I16)
        for y in u16_boundary:
            assert compare_lt(x, y) is (xv < y.value)
            assert compare_lt(y, x) is (y.value < xv)
            comparisons += 2
    i16_boundary = [Number(v, I16) for v in _i16_boundaries()]
    for yv in range(U16.min, U16.max + 1):
        y = Number(yv, U16)
        for x in i16_boundary:
            assert compare_lt(x, y) is (x.value < yv)
            assert compare_lt(y, x) is (yv < x.value)
            comparisons += 2

    # A million random 64-bit mixed-sign pairs.
    rng = random.Random(0xBEEF)
    for i in range(1_000_000):
        xv = rng.randint(I64.min, I64.max)
        yv = rng.randint(U64.min, U64.max)
        if i % 2:
            assert compare_lt(Number(xv, I64), Number(yv, U64)) is (xv < yv)
        else:
            assert compare_lt(Number(yv, U64), Number(xv, I64)) is (yv < xv)
        comparisons += 1

    _report(f"PASS mixed-sign comparison: {comparisons} comparisons, zero mismatches")


@pytest.mark.skipif(
    os.environ.get("CHECKED_FULL_16BIT_GRID") != "1",
    reason="full 65536x65536 grid is ~4.3e9 calls (hours in CPython); "
    "set CHECKED_FULL_16BIT_GRID=1 to run it",
)
def test_mixed_sign_comparison_full_16bit_cross_product():
    lhs = [Number(v, I16) for v in range(I16.min, I16.max + 1)]
    rhs = [Number(v, U16) for v in range(U16.min, U16.max + 1)]
    for x in lhs:
        xv = x.value
        for y in rhs:
            assert compare_lt(x, y) is (xv < y.value)
            assert compare_lt(y, x) is (y.value < xv)


# --- criterion: sort properties ----------------------------------------------

def _make_values(rng: random.Random, n: int, shape: int):
    if shape == 0:
        return [rng.randint(0, 10) for _ in range(n)]  # duplicate heavy
    if shape == 1:
        return [rng.randint(-(2**31), 2**31) for _ in range(n)]
    if shape == 2:
        return sorted(rng.randint(-99, 99) for _ in range(n))
    return sorted((rng.randint(-99, 99) for _ in range(n)), reverse=True)


def _pred_for(index: int):
    if index % 16 == 15:
        return lambda a, b: abs(a) < abs(b)
    if index % 8 == 7:
        return greater
    return less


def test_sort_properties_over_random_ranges():
    rng = random.Random(0x5EED)
    contiguous_reports = 0
    contiguous_random_access = 0
    total = 0

    for index in range(6000):
        n = rng.randint(0, 1000)
        values = _make_values(rng, n, index % 4)
        pred = _pred_for(index)
        kind = index % 12
        if kind < 10:
            work = list(values)
            target = work
            report = sort(work, pred)
        elif kind == 10:
            backing = [0] * (n + 20)
            span = Span(backing, 10, 10 + n)
            for i, v in enumerate(values):
                span[i] = v
            target = span
            report = sort(span, pred)
        else:
            work = array("q", values)
            target = work
            report = sort(work, pred)
        contiguous_reports += 1
        if report.chosen_path is SortPath.RANDOM_ACCESS:
            contiguous_random_access += 1
        assert report.element_count == n
        result = list(target)
        assert Counter(result) == Counter(values)
        assert all(not pred(result[i + 1], result[i]) for i in range(len(result) - 1))
        if index % 50 == 0:
            duplicate = list(values)
            sort_forward(duplicate, pred)
            assert duplicate == result
        total += 1

    for index in range(4000):
        n = rng.randint(0, 300)
        values = _make_values(rng, n, index % 4)
        pred = _pred_for(index)
        linked = LinkedList(values)
        report = sort(linked, pred)
        assert report.chosen_path is SortPath.FORWARD_COPY
        assert report.element_count == n
        result = list(linked)
        assert Counter(result) == Counter(values)
        assert all(not pred(result[i + 1], result[i]) for i in range(len(result) - 1))
        total += 1

    assert total == 10_000
    assert contiguous_random_access == contiguous_reports
    _report(
        f"PASS sort properties: {total} ranges sorted and permutation-checked, "
        f"contiguous inputs took the random-access path in "
        f"{contiguous_random_access}/{contiguous_reports} cases"
    )


# --- criterion: constraint rejection before any value work --------------------

def test_rejection_suite_fires_before_anything_is_touched():
    unorderable = [3j, 1j, 2j]
    with pytest.raises(ConstraintError):
        sort_random_access(unorderable)
    with pytest.raises(ConstraintError):
        sort(unorderable)
    assert unorderable == [3j, 1j, 2j]

    allocations = []

    class Probe:
        def __init__(self):
            allocations.append(1)

    with pytest.raises(ConstraintError):
        Buffer(Probe, 100)
    with pytest.raises(ConstraintError):
        Buffer(int, 10000)
    assert allocations == []
    assert len(Buffer(int, 2048)) == 2048
    assert len(Buffer(int, 1024)) == 1024

    for non_contiguous in (
        (x for x in range(4)),
        LinkedList([1, 2]),
        {1, 2},
        {"k": 1},
        (1, 2),
    ):
        with pytest.raises(ConstraintError):
            Span(non_contiguous)

    with pytest.raises(ConstraintError):
        sort_random_access(LinkedList([2, 1]))
    with pytest.raises(ConstraintError):
        sort((2, 1))

    _report("PASS rejection suite: unbuildable combinations fail up front")


# --- criterion: zero-overhead evidence ----------------------------------------

def test_zero_overhead_of_the_impossible_narrowing_path():
    # The classification is a table fixed before any value exists.
    assert type(NARROWING_MATRIX).__name__ == "mappingproxy"
    for t in ALL_TYPES:
        assert NARROWING_MATRIX[(t.name, t.name)] is False
        assert narrow_checker(t, t) is None

    class Untouchable:
        def _no(self, *_):
            raise AssertionError("inspected")

        __lt__ = __gt__ = __le__ = __ge__ = __eq__ = __ne__ = _no

    assert will_narrow(Untouchable(), I32, I32) is False

    best_ratio = math.inf
    for _ in range(3):
        record = run_bench("convert-same", 10_000_000)
        assert record.iters == 10_000_000
        best_ratio = min(best_ratio, record.ns_per_op / record.baseline_ns_per_op)
    assert best_ratio <= 1.5, f"checked/raw ratio {best_ratio:.3f}"
    _report(
        f"PASS zero overhead: same-type conversion at {best_ratio:.2f}x the raw "
        "assignment baseline over 1e7 iterations; classification is an "
        "import-time constant"
    )


# --- criterion: layout oracle --------------------------------------------------

def test_layout_descriptors_match_the_host_exactly():
    probes = dict(_RECORDS)
    extra = register_record(
        "AcceptProbe", [("lead", "u8"), ("wide", "f64"), ("trail", "u16")]
    )
    probes[extra.name] = extra
    assert len(probes) >= 5 and "X" in probes

    fields_checked = 0
    for record in probes.values():
        expected_rows, expected_size = oracle.ctypes_layout(record.fields)
        assert [(d.name, d.offset, d.size) for d in record.layout] == expected_rows
        assert record.size == expected_size
        names = [d.name for d in record.layout]
        assert names == [f for f, _ in record.fields]
        fields_checked += len(record.fields)

    if ON_64_BIT:
        x = _RECORDS["X"].layout
        assert [(d.offset, d.size) for d in x] == [(0, 1), (4, 4), (8, 24)]

    _report(
        f"PASS layout oracle: {fields_checked} fields across {len(probes)} records "
        "match the host's offsets and sizes exactly"
    )


# --- criterion: formatter conservation -----------------------------------------

def test_formatter_conservation_over_random_pairs():
    from checked import FormatError, FormatErrorKind, format_render

    rng = random.Random(0xF0F0)
    pieces = ["{}", "{", "}", "a", "xy", "{{", "}}", "{q", " ", "0"]
    checked_pairs = 0
    for _ in range(10_000):
        fmt = "".join(rng.choice(pieces) for _ in range(rng.randint(0, 10)))
        slots = oracle.placeholder_count(fmt)
        arg_count = max(0, slots + rng.choice((-2, -1, 0, 0, 0, 0, 1, 2)))
        args = list(range(arg_count))
        if arg_count == slots:
            assert format_render(fmt, *args) == oracle.substitute(fmt, args)
        else:
            with pytest.raises(FormatError) as info:
                format_render(fmt, *args)
            if arg_count < slots:
                assert info.value.kind is FormatErrorKind.ARGUMENT_MISSING
            else:
                assert info.value.kind is FormatErrorKind.TOO_MANY_ARGUMENTS
        checked_pairs += 1

    for _ in range(500):
        literal = "".join(
            rng.choice("abc}123 !") for _ in range(rng.randint(0, 30))
        )
        assert format_render(literal) == literal

    _report(
        f"PASS formatter conservation: {checked_pairs} random format/argument "
        "pairs behave per the placeholder count, literals round-trip byte-exact"
    )
