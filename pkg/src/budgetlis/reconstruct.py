"""Finding an actual LIS within the word budget by near-mid splitting."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Optional

from .adjustable import (
    AnchorPile,
    InvariantViolation,
    adjustable_run,
    advance,
    choose_anchor,
    compute_pile,
    enumerate_pile,
    pile_sizes_from,
)
from .budget import Budget, BudgetMeter
from .patience import LisResult, base_case_lis
from .sequence_access import (
    UNBOUNDED,
    Direction,
    Element,
    IndexRange,
    SequenceSource,
    ValueWindow,
)

# window bounds, range bounds, pivot value and position
FRAME_WORDS = 6


@dataclass(frozen=True)
class View:
    window: ValueWindow
    rng: IndexRange


@dataclass(frozen=True)
class NearMid:
    rank: int
    element: Element
    lis_value: int


@dataclass
class ReconstructionStats:
    max_depth: int = 0
    near_mid_calls: int = 0
    base_cases: int = 0


def _forward_pile_at_or_after(source: SequenceSource, view: View, lis: int, first: int,
                              s: int, in_regime: bool, meter: BudgetMeter) -> AnchorPile:
    """Smallest pile ``P_k`` with ``k >= first`` and ``|P_k| <= s``, stored."""
    anchor = AnchorPile.dummy(Direction.FORWARD)
    try:
        while True:
            i = anchor.index
            hi = min(i + 2 * s, lis)
            report = pile_sizes_from(source, view.window, view.rng, anchor, hi, meter)
            lo = max(first, i + 1)
            k = next((k for k in range(lo, hi + 1) if report.size(k) <= s), None)
            if k is None and (hi == lis or lo <= i + 1):
                # nothing small enough remains reachable; store an oversized pile
                k = lo
            if k is not None:
                pile = compute_pile(source, view.window, view.rng, anchor, k, meter)
                return pile
            j = choose_anchor(report, s, i + 1, min(hi, first - 1), in_regime=False)
            anchor = advance(source, view.window, view.rng, anchor, j, meter)
    finally:
        meter.release(anchor.words)


def _reversed_anchor_below(source: SequenceSource, view: View, target: int, s: int,
                           in_regime: bool, meter: BudgetMeter) -> AnchorPile:
    """A stored reversed pile ``Q_i`` with ``i < target <= i + 2s``."""
    anchor = AnchorPile.dummy(Direction.BACKWARD)
    try:
        while anchor.index + 2 * s < target:
            i = anchor.index
            report = pile_sizes_from(source, view.window, view.rng, anchor, i + 2 * s, meter)
            j = choose_anchor(report, s, i + 1, i + 2 * s, in_regime=in_regime)
            anchor = advance(source, view.window, view.rng, anchor, j, meter)
    except BaseException:
        meter.release(anchor.words)
        raise
    return anchor


def near_mid(source: SequenceSource, window: ValueWindow = UNBOUNDED,
             rng: Optional[IndexRange] = None, budget: Budget = Budget(2),
             meter: Optional[BudgetMeter] = None, *,
             lis: Optional[int] = None, view_length: Optional[int] = None) -> NearMid:
    """An element of some LIS of the view whose rank is close to ``lis / 2``.

    Stores the smallest forward pile ``P_k`` with ``k >= ceil(lis/2)`` and
    ``|P_k| <= s``, then streams the reversed pile ``Q_{lis-k+1}``; the first
    streamed element that also lies in ``P_k`` is returned.
    """
    meter = meter or BudgetMeter()
    if rng is None:
        rng = source.full_range()
    view = View(window, rng)
    s = budget.clamp(len(rng))
    if lis is None or view_length is None:
        run = adjustable_run(source, window, rng, budget, meter)
        lis, view_length = run.lis, run.view_length
    if lis < 1:
        raise ValueError("near_mid needs a non-empty view")
    in_regime = s * s >= view_length
    first = (lis + 1) // 2
    pk = _forward_pile_at_or_after(source, view, lis, first, s, in_regime, meter)
    try:
        positions = [e.position for e in pk.elements]  # increasing: push order is scan order
        found: list[Element] = []

        def check(e: Element) -> None:
            if not found:
                h = bisect_left(positions, e.position)
                if h < len(positions) and positions[h] == e.position:
                    found.append(e)

        target = lis - pk.index + 1
        q_anchor = _reversed_anchor_below(source, view, target, s, in_regime, meter)
        try:
            with meter.hold(1):
                enumerate_pile(source, window, rng, q_anchor, target, check, meter)
        finally:
            meter.release(q_anchor.words)
        if not found:
            raise InvariantViolation(f"P_{pk.index} and Q_{target} share no element")
        return NearMid(pk.index, found[0], lis)
    finally:
        meter.release(pk.words)


def split(window: ValueWindow, rng: IndexRange, pivot: Element) -> tuple[View, View]:
    """Views left and right of ``pivot`` that an LIS through it can use."""
    left = View(ValueWindow(window.lower, pivot.value) if _admits(window.lower, pivot.value)
                else _EMPTY_WINDOW, IndexRange(rng.first, pivot.position - 1))
    right = View(ValueWindow(pivot.value, window.upper) if _admits(pivot.value, window.upper)
                 else _EMPTY_WINDOW, IndexRange(pivot.position + 1, rng.last))
    return left, right


def _admits(lo: Optional[int], hi: Optional[int]) -> bool:
    return lo is None or hi is None or hi - lo >= 2


# (0, 1) holds no integer
_EMPTY_WINDOW = ValueWindow(0, 1)


def _is_empty(view: View) -> bool:
    return view.rng.empty or view.window is _EMPTY_WINDOW


def recursive_lis(source: SequenceSource, window: ValueWindow, rng: IndexRange,
                  budget: Budget, meter: BudgetMeter, emit: Callable[[Element], None],
                  stats: Optional[ReconstructionStats] = None, depth: int = 1) -> None:
    """Emit an LIS of the view in increasing position order."""
    stats = stats if stats is not None else ReconstructionStats()
    if rng.empty:
        return
    stats.max_depth = max(stats.max_depth, depth)
    with meter.hold(FRAME_WORDS):
        run = adjustable_run(source, window, rng, budget, meter)
        lis, n_view = run.lis, run.view_length
        if lis == 0:
            return
        if lis <= 2 or lis * budget.s <= 3 * n_view:
            stats.base_cases += 1
            base_case_lis(source, window, rng, meter, emit=emit)
            return
        stats.near_mid_calls += 1
        mid = near_mid(source, window, rng, budget, meter, lis=lis, view_length=n_view)
        left, right = split(window, rng, mid.element)
        if not _is_empty(left):
            recursive_lis(source, left.window, left.rng, budget, meter, emit, stats, depth + 1)
        emit(mid.element)
        if not _is_empty(right):
            recursive_lis(source, right.window, right.rng, budget, meter, emit, stats, depth + 1)


def find_lis(source: SequenceSource, budget: Optional[Budget] = None,
             meter: Optional[BudgetMeter] = None,
             stats: Optional[ReconstructionStats] = None) -> LisResult:
    """An LIS of the whole source; the collected list is output, not working space."""
    if budget is None:
        budget = Budget.default_for(source.length)
    out: list[Element] = []
    recursive_lis(source, UNBOUNDED, source.full_range(), budget, meter or BudgetMeter(),
                  out.append, stats)
    return LisResult(len(out), out)
