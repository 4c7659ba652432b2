"""LIS of a permutation of 1..n with an n-bit used/unused table."""

from __future__ import annotations

import math
from typing import Callable, Optional

from .budget import BudgetMeter
from .sequence_access import Element, SequenceSource


class NotAPermutation(ValueError):
    pass


class FlagTable:
    """Exactly ``n`` boolean flags packed into a bytearray."""

    __slots__ = ("n", "_bits")

    def __init__(self, n: int) -> None:
        self.n = n
        self._bits = bytearray((n + 7) // 8)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> bool:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return bool(self._bits[i >> 3] & (1 << (i & 7)))

    def set(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(i)
        self._bits[i >> 3] |= 1 << (i & 7)

    def count(self) -> int:
        return sum(bin(b).count("1") for b in self._bits)


# scalars alive during the main loop: l, t, marked count, cursor value
PERM_LOOP_WORDS = 4


def validate_permutation(source: SequenceSource, meter: Optional[BudgetMeter] = None) -> bool:
    """One pass: are the values exactly {1..n}, each once?"""
    n = source.length
    meter = meter or BudgetMeter()
    seen = FlagTable(n)
    meter.allocate_bits(n)
    try:
        with meter.hold(1):
            for v, _ in source.iter_view():
                if not 1 <= v <= n or seen[v - 1]:
                    return False
                seen.set(v - 1)
        return True
    finally:
        meter.release_bits(n)


def perm_lis_length(source: SequenceSource, meter: Optional[BudgetMeter] = None, *,
                    check: bool = True,
                    on_mark: Optional[Callable[[int, Element], None]] = None) -> int:
    """lis of a permutation: each pass greedily peels the next pile.

    The pass marks the left-to-right minima among unused values, which is
    exactly pile ``l`` of Patience Sorting.  ``on_mark(l, element)`` reports
    those markings.  With ``check`` a validation pass runs first.
    """
    n = source.length
    meter = meter or BudgetMeter()
    if check and not validate_permutation(source, meter):
        raise NotAPermutation("input is not a permutation of 1..n")
    used = FlagTable(n)
    meter.allocate_bits(n)
    meter.allocate(PERM_LOOP_WORDS)
    try:
        piles = 0
        marked = 0
        while marked < n:
            piles += 1
            t = math.inf
            progress = False
            for v, p in source.iter_view():
                if not 1 <= v <= n:
                    raise NotAPermutation(f"value {v} at position {p} outside 1..{n}")
                if v < t and not used[v - 1]:
                    used.set(v - 1)
                    t = v
                    marked += 1
                    progress = True
                    if on_mark:
                        on_mark(piles, Element(v, p))
            if not progress:
                raise NotAPermutation("a pass marked nothing; input repeats values")
        return piles
    finally:
        meter.release(PERM_LOOP_WORDS)
        meter.release_bits(n)
