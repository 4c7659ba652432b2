"""Longest increasing subsequences in O(s) words of working memory."""

from .adjustable import (
    AnchorPile,
    IntegrityError,
    InvariantViolation,
    adjustable_length,
    adjustable_run,
    compute_pile,
    enumerate_pile,
    pile_sizes_from,
)
from .budget import Budget, BudgetMeter
from .patience import (
    LisResult,
    Pile,
    PileFamily,
    base_case_lis,
    bounded_topmost_run,
    ps_extract,
    ps_piles,
    rps_piles,
)
from .permutation import NotAPermutation, perm_lis_length, validate_permutation
from .reconstruct import find_lis, near_mid, recursive_lis, split
from .sequence_access import (
    AccessStats,
    Direction,
    Element,
    IndexRange,
    ParseError,
    SequenceSource,
    ValueWindow,
    open_array,
    open_file,
    scan,
    stats,
)

__version__ = "0.1.0"
