"""Seeded input generators for tests and benchmarks."""

from __future__ import annotations

import random
from typing import Sequence

KINDS = ("random-permutation", "random-multiset", "hard-instance", "increasing", "blocks")


def random_permutation(n: int, seed: int = 0) -> list[int]:
    values = list(range(1, n + 1))
    random.Random(seed).shuffle(values)
    return values


def random_multiset(n: int, seed: int = 0) -> list[int]:
    """``n`` values drawn from ``1..max(1, n//4)``, so repetitions are common."""
    rnd = random.Random(seed)
    top = max(1, n // 4)
    return [rnd.randint(1, top) for _ in range(n)]


def hard_instance(pi_prime: Sequence[int]) -> list[int]:
    """Embed a permutation of ``1..2m`` into one of ``1..4m`` with lis one larger.

    Layout: first half of ``pi_prime``, then ``4m, 4m-1, ..., 2m+2``, then the
    second half, then ``2m+1``.
    """
    if len(pi_prime) % 2:
        raise ValueError("the embedded permutation must have even length")
    m = len(pi_prime) // 2
    return [*pi_prime[:m], *range(4 * m, 2 * m + 1, -1), *pi_prime[m:], 2 * m + 1]


def random_hard_instance(n: int, seed: int = 0) -> list[int]:
    """Hard instance of length ``4n`` around a seeded permutation of ``1..2n``."""
    return hard_instance(random_permutation(2 * n, seed))


def increasing(n: int) -> list[int]:
    return list(range(1, n + 1))


def blocks(n: int, runs: int = 10) -> list[int]:
    """``runs`` decreasing blocks with increasing value ranges: lis == min(runs, n)."""
    out = []
    size, extra = divmod(n, runs)
    base = 0
    for b in range(runs):
        m = size + (1 if b < extra else 0)
        out.extend(range(base + m, base, -1))
        base += m
    return out


def generate(kind: str, n: int, seed: int = 0) -> list[int]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if kind == "random-permutation":
        return random_permutation(n, seed)
    if kind == "random-multiset":
        return random_multiset(n, seed)
    if kind == "hard-instance":
        return random_hard_instance(n, seed)
    if kind == "increasing":
        return increasing(n)
    if kind == "blocks":
        return blocks(n)
    raise ValueError(f"unknown kind {kind!r}")
