from array import array

import pytest
from hypothesis import given, strategies as st

from checked import (
    U32,
    ConstraintError,
    LinkedList,
    NarrowError,
    Number,
    RangeError,
    Span,
    is_spanable,
    register_spanable,
)


def hundred():
    return list(range(100))


class TestCheck:
    def test_in_range(self):
        assert Span(hundred()).check(10) == 10

    def test_length_is_excluded(self):
        with pytest.raises(RangeError):
            Span(hundred()).check(100)

    def test_far_out(self):
        with pytest.raises(RangeError) as info:
            Span(hundred()).check(200)
        assert info.value.attempted == 200 and info.value.length == 100


class TestConstruction:
    def test_whole_range(self):
        assert len(Span(hundred())) == 100

    def test_empty_range(self):
        assert len(Span([])) == 0

    def test_array_storage(self):
        a = array("d", [0.5] * 10)
        s = Span(a)
        assert len(s) == 10 and s[3] == 0.5

    def test_prefix(self):
        assert len(Span(hundred(), 50)) == 50

    def test_prefix_full_count_is_allowed(self):
        assert len(Span(hundred(), 100)) == 100

    def test_prefix_beyond_size(self):
        with pytest.raises(RangeError):
            Span(hundred(), 200)

    def test_negative_count_fails_before_range_logic(self):
        with pytest.raises(NarrowError):
            Span(hundred(), -500)

    def test_subrange(self):
        s = Span(hundred(), 10, 20)
        assert len(s) == 10 and s[0] == 10 and s[9] == 19

    def test_empty_subrange(self):
        assert len(Span(hundred(), 7, 7)) == 0

    def test_reversed_bounds(self):
        with pytest.raises(RangeError):
            Span(hundred(), 20, 10)

    def test_high_beyond_size(self):
        with pytest.raises(RangeError):
            Span(hundred(), 0, 101)

    def test_negative_bound(self):
        with pytest.raises(NarrowError):
            Span(hundred(), -1, 5)

    def test_span_of_span_flattens(self):
        outer = Span(hundred(), 10, 90)
        inner = Span(outer, 5, 15)
        assert list(inner) == list(range(15, 25))

    def test_non_contiguous_rejected(self):
        for bad in (LinkedList([1, 2]), (x for x in range(3)), {"a": 1}, "abc", (1, 2)):
            with pytest.raises(ConstraintError):
                Span(bad)

    def test_registration_extends_the_spanable_set(self):
        class Chunk:
            def __init__(self):
                self._data = [1, 2, 3]

            def __len__(self):
                return len(self._data)

            def __getitem__(self, i):
                return self._data[i]

            def __setitem__(self, i, v):
                self._data[i] = v

        with pytest.raises(ConstraintError):
            Span(Chunk())
        register_spanable(Chunk)
        assert is_spanable(Chunk())
        assert list(Span(Chunk())) == [1, 2, 3]


class TestUnchecked:
    def test_takes_the_callers_count(self):
        assert len(Span.unchecked(hundred(), 10)) == 10

    def test_zero(self):
        assert list(Span.unchecked(hundred(), 0)) == []

    def test_indexing_still_checks_the_claimed_length(self):
        s = Span.unchecked(hundred(), 10)
        assert s[9] == 9
        with pytest.raises(RangeError):
            s[10]

    def test_negative_count_still_fails(self):
        with pytest.raises(NarrowError):
            Span.unchecked(hundred(), -1)


class TestIndexing:
    def test_read(self):
        assert Span(hundred())[10] == 10

    def test_negative_index_narrows(self):
        with pytest.raises(NarrowError):
            Span(hundred())[-10]

    def test_last_valid(self):
        assert Span(hundred())[99] == 99

    def test_beyond_length(self):
        with pytest.raises(RangeError):
            Span(hundred())[200]

    def test_number_index(self):
        assert Span(hundred())[Number(3, U32)] == 3

    def test_float_index_must_be_integral(self):
        assert Span(hundred())[7.0] == 7
        with pytest.raises(NarrowError):
            Span(hundred())[7.5]

    def test_bool_index_rejected(self):
        with pytest.raises(ConstraintError):
            Span(hundred())[True]

    def test_write_through(self):
        data = hundred()
        s = Span(data, 10, 20)
        s[0] = -1
        assert data[10] == -1

    def test_indexing_by_another_spans_element(self):
        sa = Span(hundred())
        sv = Span([0.0, 1.0, 2.0, 3.0])
        assert sa[sv[2]] == 2
        with pytest.raises(NarrowError):
            sa[Span([0.5] * 4)[2]]


class TestIteration:
    def test_order(self):
        assert list(Span([1, 2, 3])) == [1, 2, 3]

    def test_empty(self):
        assert list(Span([])) == []

    def test_fold_matches_source(self):
        data = [float(i) for i in range(10)]
        assert sum(Span(data)) == sum(data)


class TestProperties:
    @given(
        st.lists(st.integers(), max_size=50),
        st.one_of(
            st.integers(min_value=-100, max_value=100),
            st.floats(allow_nan=False, allow_infinity=False, min_value=-100, max_value=100),
        ),
    )
    def test_no_out_of_bounds_access(self, data, index):
        s = Span(data)
        try:
            value = s[index]
        except NarrowError:
            assert isinstance(index, float) and not float(index).is_integer() or index < 0
        except RangeError:
            assert index >= len(data)
        else:
            assert value == data[int(index)]

    @given(st.data())
    def test_subrange_composition(self, data):
        base = data.draw(st.lists(st.integers(), min_size=1, max_size=40))
        low = data.draw(st.integers(min_value=0, max_value=len(base)))
        high = data.draw(st.integers(min_value=low, max_value=len(base)))
        sub = Span(base, low, high)
        whole = Span(base)
        for i in range(len(sub)):
            assert sub[i] == whole[low + i]

    @given(st.data())
    def test_prefix_indexable_exactly_below_count(self, data):
        base = data.draw(st.lists(st.integers(), max_size=40))
        count = data.draw(st.integers(min_value=0, max_value=len(base)))
        s = Span(base, count)
        for i in range(count):
            assert s[i] == base[i]
        with pytest.raises(RangeError):
            s[count]
