"""Patience Sorting and its reversed, extracting and top-only variants."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Callable, Optional

from .budget import ELEMENT_WORDS, BudgetMeter
from .sequence_access import (
    UNBOUNDED,
    Direction,
    Element,
    IndexRange,
    SequenceSource,
    ValueWindow,
)


@dataclass
class Pile:
    """Pile number ``index`` (1-based); ``elements[-1]`` is the top."""

    index: int
    elements: list[Element] = field(default_factory=list)

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.elements]

    @property
    def positions(self) -> list[int]:
        return [e.position for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def top(self) -> Element:
        return self.elements[-1]


@dataclass
class PileFamily:
    direction: Direction
    piles: list[Pile]

    def __len__(self) -> int:
        return len(self.piles)

    def __getitem__(self, index: int) -> Pile:
        """1-based lookup, matching the pile numbering."""
        if index < 1:
            raise IndexError(index)
        return self.piles[index - 1]

    def pile_of(self) -> dict[int, int]:
        """Map position -> pile index."""
        return {e.position: p.index for p in self.piles for e in p.elements}


@dataclass(frozen=True)
class BackPointer:
    source: Element
    target: Optional[Element]


@dataclass
class LisResult:
    length: int
    subsequence: Optional[list[Element]] = None

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.subsequence or ()]

    @property
    def positions(self) -> list[int]:
        return [e.position for e in self.subsequence or ()]


def _run(source: SequenceSource, direction: Direction, window: ValueWindow,
         rng: Optional[IndexRange], meter: Optional[BudgetMeter],
         links: Optional[dict[int, Optional[Element]]] = None) -> PileFamily:
    # Reversed runs compare negated values, so both directions share one placement rule.
    sign = 1 if direction is Direction.FORWARD else -1
    tops: list[int] = []
    piles: list[Pile] = []
    per_element = ELEMENT_WORDS + (1 if links is not None else 0)
    for v, p in source.iter_view(direction, window, rng):
        key = sign * v
        h = bisect_left(tops, key)
        if h == len(tops):
            tops.append(key)
            piles.append(Pile(h + 1))
            if meter:
                meter.allocate(1)
        else:
            tops[h] = key
        if links is not None:
            links[p] = piles[h - 1].elements[-1] if h else None
        piles[h].elements.append(Element(v, p))
        if meter:
            meter.allocate(per_element)
    return PileFamily(direction, piles)


def ps_piles(source: SequenceSource, window: ValueWindow = UNBOUNDED,
             rng: Optional[IndexRange] = None, meter: Optional[BudgetMeter] = None) -> PileFamily:
    """Final piles of Patience Sorting (left to right, ``x <= top`` placement)."""
    return _run(source, Direction.FORWARD, window, rng, meter)


def rps_piles(source: SequenceSource, window: ValueWindow = UNBOUNDED,
              rng: Optional[IndexRange] = None, meter: Optional[BudgetMeter] = None) -> PileFamily:
    """Final piles of Reversed Patience Sorting (right to left, ``x >= top`` placement)."""
    return _run(source, Direction.BACKWARD, window, rng, meter)


def ps_extract(source: SequenceSource, window: ValueWindow = UNBOUNDED,
               rng: Optional[IndexRange] = None, meter: Optional[BudgetMeter] = None) -> LisResult:
    """A longest increasing subsequence by following back pointers.

    The walk starts at the top of the last pile.
    """
    links: dict[int, Optional[Element]] = {}
    family = _run(source, Direction.FORWARD, window, rng, meter, links)
    if not family.piles:
        return LisResult(0, [])
    out = []
    cur: Optional[Element] = family.piles[-1].top
    while cur is not None:
        out.append(cur)
        cur = links[cur.position]
    out.reverse()
    return LisResult(len(out), out)


def back_pointers(source: SequenceSource) -> list[BackPointer]:
    links: dict[int, Optional[Element]] = {}
    family = _run(source, Direction.FORWARD, UNBOUNDED, None, None, links)
    return [BackPointer(e, links[e.position]) for p in family.piles for e in p.elements]


def _topmost(source: SequenceSource, window: ValueWindow, rng: IndexRange,
             meter: BudgetMeter) -> tuple[Optional[Element], int]:
    tops: list[int] = []
    last: Optional[tuple[int, int]] = None
    with meter.hold(ELEMENT_WORDS):
        try:
            for v, p in source.iter_view(Direction.FORWARD, window, rng):
                h = bisect_left(tops, v)
                if h == len(tops):
                    tops.append(v)
                    meter.allocate(1)
                else:
                    tops[h] = v
                if h == len(tops) - 1:
                    last = (v, p)
        finally:
            meter.release(len(tops))
    return (Element(*last) if last else None), len(tops)


def bounded_topmost_run(source: SequenceSource, window: ValueWindow = UNBOUNDED,
                        rng: Optional[IndexRange] = None,
                        meter: Optional[BudgetMeter] = None) -> Optional[Element]:
    """Patience Sorting keeping only pile tops; returns the top of the final pile."""
    if rng is None:
        rng = source.full_range()
    return _topmost(source, window, rng, meter or BudgetMeter())[0]


def base_case_lis(source: SequenceSource, window: ValueWindow = UNBOUNDED,
                  rng: Optional[IndexRange] = None, meter: Optional[BudgetMeter] = None,
                  emit: Optional[Callable[[Element], None]] = None) -> LisResult:
    """LIS of the view by repeated top-only runs, O(lis) words.

    Each run yields the last element of an LIS of what remains; the next run
    is restricted to smaller values at earlier positions.  Only positions are
    buffered; a final forward pass re-reads the values in order.  When
    ``emit`` is given the elements are streamed to it instead of collected.
    """
    if rng is None:
        rng = source.full_range()
    meter = meter or BudgetMeter()
    picked: list[int] = []
    upper = window.upper
    last = rng.last
    try:
        while last >= rng.first:
            if upper is not None and window.lower is not None and upper - window.lower < 2:
                break
            e, piles = _topmost(source, ValueWindow(window.lower, upper),
                                IndexRange(rng.first, last), meter)
            if e is None:
                break
            picked.append(e.position)
            meter.allocate(1)
            if piles == 1:
                break
            upper, last = e.value, e.position - 1

        out: Optional[list[Element]] = None if emit else []
        if picked:
            k = len(picked) - 1
            span = IndexRange(picked[-1], picked[0])
            for v, p in source.iter_view(Direction.FORWARD, window, span):
                if k >= 0 and p == picked[k]:
                    k -= 1
                    if emit:
                        emit(Element(v, p))
                    else:
                        out.append(Element(v, p))
        return LisResult(len(picked), out)
    finally:
        meter.release(len(picked))
