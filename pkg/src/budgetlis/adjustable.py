"""Memory-adjustable pile computations.

All passes here simulate Patience Sorting on a filtered view while keeping
only a window of piles ``i+1..j`` alive.  Piles before ``i`` are skipped with
the help of an explicitly stored *anchor* pile ``P_i``; piles after ``j`` are
skipped by comparing against the current top of ``P_j``.  Reversed runs scan
right to left and compare negated values, so one simulation serves both
directions.
"""

from __future__ import annotations

import logging
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Callable, Optional

from .budget import ELEMENT_WORDS, Budget, BudgetMeter
from .patience import Pile
from .sequence_access import (
    UNBOUNDED,
    Direction,
    Element,
    IndexRange,
    SequenceSource,
    ValueWindow,
)

log = logging.getLogger(__name__)

# r, l, i, j, next anchor position, anchor top, current key, view counter
PASS_SCALARS = 8


class IntegrityError(RuntimeError):
    """An anchor pile does not match the view it is used on."""


class InvariantViolation(RuntimeError):
    """A guarantee that should hold by construction failed."""


@dataclass
class AnchorPile:
    """Explicitly stored pile ``P_index`` (or ``Q_index`` when reversed).

    ``index == 0`` is the dummy pile holding a single infinite sentinel.
    """

    index: int
    elements: list[Element]
    direction: Direction = Direction.FORWARD

    @classmethod
    def dummy(cls, direction: Direction = Direction.FORWARD) -> "AnchorPile":
        return cls(0, [], direction)

    @property
    def is_dummy(self) -> bool:
        return self.index == 0

    @property
    def words(self) -> int:
        return ELEMENT_WORDS * len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def as_pile(self) -> Pile:
        return Pile(self.index, list(self.elements))


@dataclass
class PileSizeReport:
    base_index: int
    sizes: list[int]
    lis_found: Optional[int] = None
    view_length: int = 0

    def size(self, k: int) -> int:
        """``|P_k|`` for ``base_index < k <= base_index + len(sizes)``."""
        return self.sizes[k - self.base_index - 1]

    @property
    def last_index(self) -> int:
        return self.base_index + len(self.sizes)


def _simulate(source: SequenceSource, window: ValueWindow, rng: Optional[IndexRange],
              anchor: AnchorPile, j: int, meter: BudgetMeter, *,
              count: bool = True,
              on_push: Optional[Callable[[Element], None]] = None) -> PileSizeReport:
    i = anchor.index
    if j <= i:
        raise ValueError(f"pile index {j} must exceed anchor index {i}")
    width = j - i
    sign = 1 if anchor.direction is Direction.FORWARD else -1
    stored = anchor.elements
    n_stored = len(stored)
    # Before P_i(1) arrives nothing can belong to a later pile.
    a_top = -math.inf if anchor.is_dummy else math.inf
    r = 0
    next_pos = stored[0].position if n_stored else -1
    tops: list[int] = []
    counts: list[int] = []
    seen = 0
    arrays = width * (2 if count else 1)
    meter.allocate(arrays + PASS_SCALARS)
    try:
        for v, p in source.iter_view(anchor.direction, window, rng):
            seen += 1
            if p == next_pos:
                r += 1
                a_top = sign * v
                next_pos = stored[r].position if r < n_stored else -1
                continue
            key = sign * v
            if key < a_top:
                continue
            if tops and key > tops[-1]:
                if len(tops) == width:
                    continue
                h = len(tops)
                tops.append(key)
                if count:
                    counts.append(1)
            elif not tops:
                h = 0
                tops.append(key)
                if count:
                    counts.append(1)
            else:
                h = bisect_left(tops, key)
                tops[h] = key
                if count:
                    counts[h] += 1
            if h == width - 1 and on_push is not None:
                on_push(Element(v, p))
    finally:
        meter.release(arrays + PASS_SCALARS)
    if r != n_stored:
        raise IntegrityError(
            f"anchor pile {i} element {r + 1} (position {stored[r].position}) never arrived")
    built = len(tops)
    lis_found = i + built if built < width else None
    return PileSizeReport(i, counts, lis_found, seen)


def pile_sizes_from(source: SequenceSource, window: ValueWindow, rng: Optional[IndexRange],
                    anchor: AnchorPile, j: int,
                    meter: Optional[BudgetMeter] = None) -> PileSizeReport:
    """Sizes of piles ``anchor.index+1 .. min(j, lis)`` in one pass.

    ``lis_found`` is set when fewer than ``j`` piles exist.
    """
    return _simulate(source, window, rng, anchor, j, meter or BudgetMeter())


def compute_pile(source: SequenceSource, window: ValueWindow, rng: Optional[IndexRange],
                 anchor: AnchorPile, j: int,
                 meter: Optional[BudgetMeter] = None) -> AnchorPile:
    """Materialise pile ``j`` explicitly.  The caller owns (and releases) its words."""
    meter = meter or BudgetMeter()
    pile: list[Element] = []

    def keep(e: Element) -> None:
        pile.append(e)
        meter.allocate(ELEMENT_WORDS)

    try:
        report = _simulate(source, window, rng, anchor, j, meter, count=False, on_push=keep)
    except BaseException:
        meter.release(ELEMENT_WORDS * len(pile))
        raise
    if report.lis_found is not None:
        meter.release(ELEMENT_WORDS * len(pile))
        raise IndexError(f"pile {j} does not exist; lis of the view is {report.lis_found}")
    return AnchorPile(j, pile, anchor.direction)


def enumerate_pile(source: SequenceSource, window: ValueWindow, rng: Optional[IndexRange],
                   anchor: AnchorPile, j: int, visitor: Callable[[Element], None],
                   meter: Optional[BudgetMeter] = None) -> None:
    """Stream pile ``j`` to ``visitor`` in push order without storing it."""
    report = _simulate(source, window, rng, anchor, j, meter or BudgetMeter(),
                       count=False, on_push=visitor)
    if report.lis_found is not None:
        raise IndexError(f"pile {j} does not exist; lis of the view is {report.lis_found}")


@dataclass
class Iteration:
    anchor_index: int
    sizes: list[int]
    chosen: Optional[int] = None


@dataclass
class LengthRun:
    lis: int
    view_length: int
    iterations: int
    s: int
    trace: list[Iteration] = field(default_factory=list)


def choose_anchor(report: PileSizeReport, s: int, lo: int, hi: int, *,
                  in_regime: bool) -> int:
    """Largest ``k`` in ``lo..hi`` with ``|P_k| <= s``.

    Outside the regime ``s >= sqrt(n)`` such a pile may not exist; the
    smallest pile (latest on ties) is taken instead and may exceed ``s``.
    """
    for k in range(hi, lo - 1, -1):
        if report.size(k) <= s:
            return k
    if in_regime:
        raise InvariantViolation(
            f"no pile of size <= {s} among {lo}..{hi} although s >= sqrt(n)")
    return min(range(hi, lo - 1, -1), key=report.size)


def advance(source: SequenceSource, window: ValueWindow, rng: Optional[IndexRange],
            anchor: AnchorPile, j: int, meter: BudgetMeter) -> AnchorPile:
    """Replace ``anchor`` by pile ``j`` and move the meter charge over."""
    new = compute_pile(source, window, rng, anchor, j, meter)
    meter.release(anchor.words)
    return new


def adjustable_run(source: SequenceSource, window: ValueWindow = UNBOUNDED,
                   rng: Optional[IndexRange] = None, budget: Budget = Budget(2),
                   meter: Optional[BudgetMeter] = None, *,
                   direction: Direction = Direction.FORWARD,
                   trace: bool = False) -> LengthRun:
    """lis of the view with ``O(s)`` words and ``O(n/s)`` passes."""
    meter = meter or BudgetMeter()
    if rng is None:
        rng = source.full_range()
    s = budget.clamp(max(len(rng), 0))
    anchor = AnchorPile.dummy(direction)
    iterations = 0
    history: list[Iteration] = []
    warned = False
    try:
        while True:
            iterations += 1
            i = anchor.index
            report = pile_sizes_from(source, window, rng, anchor, i + 2 * s, meter)
            step = Iteration(i, report.sizes)
            if trace:
                history.append(step)
            if report.lis_found is not None:
                return LengthRun(report.lis_found, report.view_length, iterations, s, history)
            in_regime = s * s >= report.view_length
            if not in_regime and not warned:
                log.debug("budget s=%d is below sqrt(%d); pass bound does not apply",
                            s, report.view_length)
                warned = True
            j = choose_anchor(report, s, i + 1, i + 2 * s, in_regime=in_regime)
            if in_regime and j < i + s + 1:
                raise InvariantViolation(f"anchor {j} short of {i + s + 1}")
            step.chosen = j
            anchor = advance(source, window, rng, anchor, j, meter)
    finally:
        meter.release(anchor.words)


def adjustable_length(source: SequenceSource, window: ValueWindow = UNBOUNDED,
                      rng: Optional[IndexRange] = None, budget: Budget = Budget(2),
                      meter: Optional[BudgetMeter] = None, *,
                      direction: Direction = Direction.FORWARD) -> int:
    return adjustable_run(source, window, rng, budget, meter, direction=direction).lis
