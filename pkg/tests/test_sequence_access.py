import random
import struct

import pytest
from hypothesis import given, strategies as st

from budgetlis.sequence_access import (
    UNBOUNDED,
    AccessStats,
    Direction,
    Element,
    IndexRange,
    ParseError,
    ValueWindow,
    open_array,
    open_file,
    scan,
    stats,
)

from conftest import SIGMA1

F, B = Direction.FORWARD, Direction.BACKWARD


def visited(source, direction=F, window=UNBOUNDED, rng=None):
    out = []
    scan(source, direction, window, rng, out.append)
    return out


@pytest.mark.parametrize("values, n", [([], 0), (SIGMA1, 9), ([5, 5, 5], 3)])
def test_open_array_lengths(values, n):
    src = open_array(values)
    assert src.length == n
    assert src.stats == AccessStats()
    assert src.cursor == 0


def test_open_array_rejects_values_beyond_int64():
    with pytest.raises(ValueError):
        open_array([1 << 63])
    open_array([-(1 << 63), (1 << 63) - 1])


def test_scan_identity_filter():
    got = visited(open_array(SIGMA1))
    assert got == [Element(v, p) for p, v in enumerate(SIGMA1)]


def test_scan_upper_filter():
    got = visited(open_array(SIGMA1), F, ValueWindow(None, 4))
    assert got == [(2, 0), (1, 5), (3, 8)]


def test_scan_backward_lower_filter_on_range():
    got = visited(open_array(SIGMA1), B, ValueWindow(4, None), IndexRange(3, 8))
    assert got == [(6, 7), (7, 6), (5, 4), (9, 3)]


def test_stats_examples():
    src = open_array(SIGMA1)
    assert stats(src) == AccessStats()
    delta = scan(src, F, UNBOUNDED, None, lambda e: None)
    assert (src.stats.reads, src.stats.forward_passes) == (9, 1)
    assert delta == src.stats
    scan(src, B, UNBOUNDED, None, lambda e: None)
    assert src.stats.reversals == 1
    assert src.stats.backward_passes == 1
    # stats() does not reset
    assert stats(src).reads == 18


def test_filtered_scan_charges_whole_range():
    src = open_array(SIGMA1)
    delta = scan(src, F, ValueWindow(100, None), IndexRange(2, 6), lambda e: None)
    assert delta.reads == 5 and delta.forward_passes == 1


def test_empty_range_charges_nothing():
    src = open_array(SIGMA1)
    assert visited(src, F, UNBOUNDED, IndexRange(4, 3)) == []
    assert src.stats == AccessStats()


def test_range_outside_source():
    with pytest.raises(IndexError):
        visited(open_array([1, 2]), F, UNBOUNDED, IndexRange(0, 2))


def test_window_validation_and_intersection():
    with pytest.raises(ValueError):
        ValueWindow(3, 3)
    assert ValueWindow(1, 9).intersect(ValueWindow(None, 5)) == ValueWindow(1, 5)
    assert ValueWindow(1, 3).intersect(ValueWindow(2, None)) is None
    assert 4 in ValueWindow(3, 5) and 3 not in ValueWindow(3, 5)


values_st = st.lists(st.integers(-20, 20), max_size=30)
bound_st = st.one_of(st.none(), st.integers(-25, 25))


@st.composite
def view_st(draw):
    values = draw(values_st)
    n = len(values)
    first = draw(st.integers(0, n))
    last = draw(st.integers(first - 1, n - 1))
    lo, hi = draw(bound_st), draw(bound_st)
    if lo is not None and hi is not None and lo >= hi:
        lo, hi = hi - 1, lo + 1
    return values, ValueWindow(lo, hi), IndexRange(first, last)


@given(view_st(), bound_st, bound_st)
def test_filter_composition(view, lo2, hi2):
    values, w, rng = view
    if lo2 is not None and hi2 is not None and lo2 >= hi2:
        lo2, hi2 = hi2 - 1, lo2 + 1
    w2 = ValueWindow(lo2, hi2)
    composed = [e for e in visited(open_array(values), F, w, rng) if e.value in w2]
    both = w.intersect(w2)
    direct = visited(open_array(values), F, both, rng) if both else []
    assert composed == direct


@given(view_st())
def test_direction_symmetry_and_conservation(view):
    values, w, rng = view
    src = open_array(values)
    fwd = visited(src, F, w, rng)
    before = src.stats.reads
    bwd = visited(src, B, w, rng)
    assert bwd == fwd[::-1]
    assert src.stats.reads - before == len(rng)
    assert all(values[e.position] == e.value for e in fwd)


@given(st.integers(1, 40), st.lists(st.tuples(st.booleans(), st.integers(0, 39), st.integers(0, 39)),
                                    max_size=12))
def test_seek_cost_invariants_on_arbitrary_traces(n, trace):
    src = open_array(range(n))
    for fwd, a, b in trace:
        a, b = sorted((a % n, b % n))
        visited(src, F if fwd else B, UNBOUNDED, IndexRange(a, b))
    s = src.stats
    assert s.seek_cost >= s.reads - s.reversals - 1
    assert s.reads >= max(s.forward_passes, s.backward_passes)


@given(st.integers(1, 30), st.lists(st.booleans(), max_size=10))
def test_multipass_seek_cost_bound(n, dirs):
    src = open_array(range(n))
    for fwd in dirs:
        visited(src, F if fwd else B)
    s = src.stats
    assert s.seek_cost <= s.reads + s.reversals * n


# file sources ---------------------------------------------------------------

def test_text_file_small(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("2\n8\n4\n")
    with open_file(p, "text") as src:
        assert src.length == 3
        assert [e.value for e in visited(src)] == [2, 8, 4]


def test_text_file_empty(tmp_path):
    p = tmp_path / "e.txt"
    p.write_text("")
    with open_file(p) as src:
        assert src.length == 0
        assert visited(src) == []


def test_text_file_parse_error_reports_token(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("abc\n")
    with pytest.raises(ParseError) as info:
        open_file(p)
    assert info.value.token == 1 and info.value.line == 1


def test_text_file_parse_error_line(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 2\n3\n  4x 5\n")
    with pytest.raises(ParseError) as info:
        open_file(p)
    assert info.value.token == 4 and info.value.line == 3 and info.value.offset == 8


def test_text_file_out_of_range(tmp_path):
    p = tmp_path / "big.txt"
    p.write_text(str(1 << 63))
    with pytest.raises(ParseError):
        open_file(p)


def test_binary_file(tmp_path):
    p = tmp_path / "a.bin"
    p.write_bytes(struct.pack("<9q", *SIGMA1))
    with open_file(p, "binary") as src:
        assert [e.value for e in visited(src)] == SIGMA1
        assert [e.value for e in visited(src, B)] == SIGMA1[::-1]


def test_binary_file_bad_size(tmp_path):
    p = tmp_path / "a.bin"
    p.write_bytes(b"\x00" * 12)
    with pytest.raises(ParseError):
        open_file(p, "binary")


def test_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        open_file(tmp_path / "x", "csv")


def test_large_files_match_array_across_chunks(tmp_path):
    rnd = random.Random(3)
    values = [rnd.randint(-10**12, 10**12) for _ in range(12000)]
    tp = tmp_path / "big.txt"
    # mixed separators so tokens straddle chunk boundaries at odd offsets
    tp.write_text("".join(f"{v}{' ' if i % 3 else chr(10)}{chr(9) * (i % 2)}"
                          for i, v in enumerate(values)))
    bp = tmp_path / "big.bin"
    bp.write_bytes(struct.pack(f"<{len(values)}q", *values))
    rng = IndexRange(1000, 11500)
    w = ValueWindow(-10**11, None)
    ref = open_array(values)
    expect_f = visited(ref, F, w, rng)
    expect_b = visited(ref, B, w, rng)
    visited(ref, F, w, rng)
    for path, fmt in ((tp, "text"), (bp, "binary")):
        with open_file(path, fmt) as src:
            assert src.length == len(values)
            assert visited(src, F, w, rng) == expect_f
            assert visited(src, B, w, rng) == expect_b
            assert visited(src, F, w, rng) == expect_f
            assert src.stats == ref.stats
