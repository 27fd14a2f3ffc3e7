"""Small combinatorial generators shared by the algebra modules."""

from __future__ import annotations

import math
from typing import Iterator


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers with the given total.

    Yielded in lexicographic order, so callers iterate deterministically.
    """
    if parts < 0:
        raise ValueError("parts must be non-negative")
    if parts == 0:
        if total == 0:
            yield ()
        return

    def rec(remaining: int, slots: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield prefix + (remaining,)
            return
        for v in range(remaining + 1):
            yield from rec(remaining - v, slots - 1, prefix + (v,))

    yield from rec(total, parts, ())


def positive_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` positive integers with the given total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    for comp in compositions(total - parts, parts):
        yield tuple(v + 1 for v in comp)


def partitions(total: int) -> Iterator[dict[int, int]]:
    """Partitions of `total` as multiplicity maps {part: count}, parts >= 1."""
    def rec(remaining: int, max_part: int) -> Iterator[list[tuple[int, int]]]:
        if remaining == 0:
            yield []
            return
        for part in range(min(remaining, max_part), 0, -1):
            for count in range(remaining // part, 0, -1):
                for rest in rec(remaining - part * count, part - 1):
                    yield [(part, count)] + rest

    for items in rec(total, total):
        yield dict(items)
