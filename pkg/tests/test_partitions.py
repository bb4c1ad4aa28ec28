import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rrbij.partitions import (
    INF,
    Label,
    LabeledPartition,
    NonPositiveResult,
    OutOfRange,
    PartitionError,
    RepeatedParts,
    add_i_shape,
    first_odd_zero_sequence,
    insert_tl_shape,
    remove_i_shape,
    remove_tl_shape,
    stat_sol,
    stat_sol2,
    stat_zero_sequences,
    tl_shape_size,
)


@pytest.mark.parametrize("p, want", [((1, 3, 7, 13, 15, 17), 2), ((), 0), ((1, 3, 5), 1)])
def test_sol2(p, want):
    assert stat_sol2(p) == want


@pytest.mark.parametrize("p, want", [((1, 2, 3), 1), ((1, 2, 4, 5), 0), ((), 0)])
def test_sol(p, want):
    assert stat_sol(p) == want


def test_statistics_need_distinct_parts():
    with pytest.raises(RepeatedParts):
        stat_sol2((1, 1))


def test_zero_sequences():
    runs = stat_zero_sequences((1, 1, 2, 2, 2, 4, 7, 7, 7, 7))
    assert runs == [(1, 1), (2, 2, 2), (4,), (7, 7, 7, 7)]
    assert stat_zero_sequences(()) == []
    assert stat_zero_sequences((0, 0, 0)) == [(0, 0, 0)]


def test_first_odd_zero_sequence():
    assert first_odd_zero_sequence((0, 0, 1, 1, 1, 4)) == (1, 3)
    assert first_odd_zero_sequence((2, 2)) == (INF, INF)


def test_tl_shape_size():
    assert tl_shape_size((1, 3, 7, 9, 11), 1, 2) == 9
    assert tl_shape_size((2, 3, 3, 5), 2, 2) == 7
    assert tl_shape_size((4, 8), 2, 2) == 8
    with pytest.raises(OutOfRange):
        tl_shape_size((1, 2), 3, 1)


def test_remove_and_insert_tl_shape():
    assert remove_tl_shape((1, 3, 7, 9, 11), 1, 2) == ((1, 5, 7, 9), 9)
    assert remove_tl_shape((5,), 1, 2) == ((), 5)
    with pytest.raises(NonPositiveResult):
        remove_tl_shape((1, 2), 1, 2)
    assert insert_tl_shape((1, 5, 7, 9), 9, 2) == (1, 3, 7, 9, 11)
    assert insert_tl_shape((), 5, 2) == (5,)
    assert insert_tl_shape((2, 5), 3, 1) == (1, 3, 6)


def test_i_shape():
    assert remove_i_shape((3, 3, 5, 9, 9, 15), 1, 2) == ((1, 1, 3, 7, 7, 13), 6)
    assert remove_i_shape((2, 4), 2) == ((2, 3), 1)
    assert remove_i_shape((1, 3), 1) == ((2,), 2)
    assert add_i_shape((2,), 2) == (1, 3)
    assert add_i_shape((1, 1, 3, 7, 7, 13), 6, 2) == (3, 3, 5, 9, 9, 15)


def test_labeled_partition():
    lp = LabeledPartition((1, 3), (Label.X, Label.NONE))
    assert lp.weight == 4
    assert lp.marker_degrees == (1, 0)
    with pytest.raises(PartitionError):
        LabeledPartition((3, 1), (Label.NONE, Label.NONE))
    with pytest.raises(PartitionError):
        LabeledPartition((1,), ())


strict_parts = st.lists(st.integers(1, 40), max_size=7, unique=True).map(sorted).map(tuple)


@settings(max_examples=150, deadline=None)
@given(strict_parts, st.integers(1, 3), st.data())
def test_tl_shape_roundtrip(p, t, data):
    assume(p)
    k = data.draw(st.integers(1, len(p)))
    try:
        rest, size = remove_tl_shape(p, k, t)
    except NonPositiveResult:
        return
    # reinsertion recovers p whenever the removed part was the unique slot
    if all(b - a > t for a, b in zip(p, p[1:])):
        assert insert_tl_shape(rest, size, t) == p


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 20), min_size=1, max_size=7).map(sorted).map(tuple), st.data())
def test_i_shape_roundtrip(p, data):
    k = data.draw(st.integers(1, len(p)))
    # only a single vanishing bottom part can be revived
    assume(p[k - 1] > 1 or (k == 1 and p.count(1) == 1))
    rest, size = remove_i_shape(p, k)
    assert add_i_shape(rest, size) == p
