"""Quadratic dynamic-programming ground truth.

Deliberately shares nothing with the pile-based algorithms.
"""

from __future__ import annotations

from typing import Sequence


def dp_ending_table(values: Sequence[int]) -> list[int]:
    """Length of the longest strictly increasing subsequence ending at each index."""
    table: list[int] = []
    for i, v in enumerate(values):
        best = 0
        for h in range(i):
            if values[h] < v and table[h] > best:
                best = table[h]
        table.append(best + 1)
    return table


def dp_starting_table(values: Sequence[int]) -> list[int]:
    """Length of the longest strictly increasing subsequence starting at each index."""
    n = len(values)
    table = [0] * n
    for i in range(n - 1, -1, -1):
        best = 0
        for h in range(i + 1, n):
            if values[h] > values[i] and table[h] > best:
                best = table[h]
        table[i] = best + 1
    return table


def dp_lis_length(values: Sequence[int]) -> int:
    return max(dp_ending_table(values), default=0)


def dp_lis_extract(values: Sequence[int]) -> list[tuple[int, int]]:
    """One longest increasing subsequence as ``(value, position)`` pairs."""
    table = dp_ending_table(values)
    if not table:
        return []
    need = max(table)
    i = table.index(need)
    out = []
    bound = None
    # walk backwards picking any predecessor with the right length and smaller value
    for h in range(i, -1, -1):
        if table[h] == need and (bound is None or values[h] < bound):
            out.append((values[h], h))
            bound = values[h]
            need -= 1
            if need == 0:
                break
    out.reverse()
    return out


def is_increasing_subsequence(values: Sequence[int], picked: Sequence[tuple[int, int]]) -> bool:
    """Check that ``picked`` (value, position) pairs are a strictly increasing subsequence."""
    for k, (v, p) in enumerate(picked):
        if not 0 <= p < len(values) or values[p] != v:
            return False
        if k and not (picked[k - 1][1] < p and picked[k - 1][0] < v):
            return False
    return True
