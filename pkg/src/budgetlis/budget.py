"""Word budget and the meter that enforces it.

A *word* holds one value or one position (O(log n) bits).  A stored
:class:`~budgetlis.sequence_access.Element` therefore costs two words.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator

ELEMENT_WORDS = 2


@dataclass(frozen=True)
class Budget:
    s: int

    def __post_init__(self) -> None:
        if self.s < 2:
            raise ValueError(f"budget s must be at least 2, got {self.s}")

    @classmethod
    def default_for(cls, n: int) -> "Budget":
        # ceil(sqrt(n)) without floating point
        return cls(max(2, math.isqrt(n - 1) + 1) if n > 1 else 2)

    def clamp(self, n: int) -> int:
        """Effective budget for an input of ``n`` elements."""
        return max(2, min(self.s, n))

    def in_regime(self, n: int) -> bool:
        """Whether ``s >= sqrt(n)``, where the pass and space guarantees hold."""
        return self.s * self.s >= n


class BudgetMeter:
    """Live and peak count of words (and flag bits) held by algorithm state."""

    def __init__(self) -> None:
        self.current_words = 0
        self.peak_words = 0
        self.current_bits = 0
        self.peak_bits = 0

    def allocate(self, words: int) -> None:
        self.current_words += words
        if self.current_words > self.peak_words:
            self.peak_words = self.current_words

    def release(self, words: int) -> None:
        if words > self.current_words:
            raise RuntimeError(f"releasing {words} words with only {self.current_words} live")
        self.current_words -= words

    def allocate_bits(self, bits: int) -> None:
        self.current_bits += bits
        self.peak_bits = max(self.peak_bits, self.current_bits)

    def release_bits(self, bits: int) -> None:
        self.current_bits -= bits

    @contextmanager
    def hold(self, words: int) -> Iterator[None]:
        self.allocate(words)
        try:
            yield
        finally:
            self.release(words)

    def __repr__(self) -> str:
        return f"BudgetMeter(current={self.current_words}, peak={self.peak_words})"
