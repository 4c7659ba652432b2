from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from budgetlis.oracle import (
    dp_ending_table,
    dp_lis_extract,
    dp_lis_length,
    dp_starting_table,
    is_increasing_subsequence,
)

from conftest import SIGMA1


def brute_lis(values):
    """Largest k for which some k-subset of positions is strictly increasing."""
    for k in range(len(values), 0, -1):
        for idx in combinations(range(len(values)), k):
            if all(values[a] < values[b] for a, b in zip(idx, idx[1:])):
                return k
    return 0


@pytest.mark.parametrize("values, expected", [(SIGMA1, 4), ([], 0), ([4, 4, 4], 1)])
def test_dp_lis_length_examples(values, expected):
    assert dp_lis_length(values) == expected


@pytest.mark.parametrize("values, expected", [
    (SIGMA1, [1, 2, 2, 3, 3, 1, 4, 4, 2]),
    ([1, 2, 3], [1, 2, 3]),
    ([3, 2, 1], [1, 1, 1]),
])
def test_dp_ending_table_examples(values, expected):
    assert dp_ending_table(values) == expected


def test_dp_lis_extract_examples():
    got = dp_lis_extract(SIGMA1)
    assert len(got) == 4 and is_increasing_subsequence(SIGMA1, got)
    assert dp_lis_extract([]) == []
    assert dp_lis_extract([9]) == [(9, 0)]


small_lists = st.lists(st.integers(-4, 4), max_size=9)


@given(small_lists)
def test_dp_length_matches_enumeration(values):
    assert dp_lis_length(values) == brute_lis(values)


@given(small_lists)
def test_table_max_is_length_and_extract_is_valid(values):
    assert max(dp_ending_table(values), default=0) == dp_lis_length(values)
    picked = dp_lis_extract(values)
    assert len(picked) == dp_lis_length(values)
    assert is_increasing_subsequence(values, picked)


@given(small_lists)
def test_starting_table_is_ending_table_of_mirror(values):
    mirror = [-v for v in reversed(values)]
    assert dp_starting_table(values) == list(reversed(dp_ending_table(mirror)))


def test_is_increasing_subsequence_rejects():
    assert not is_increasing_subsequence([1, 2], [(2, 1), (1, 0)])
    assert not is_increasing_subsequence([1, 1], [(1, 0), (1, 1)])
    assert not is_increasing_subsequence([1, 2], [(5, 0)])
