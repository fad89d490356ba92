"""Exhaustive enumeration of ASMs and permutation matrices.

ASMs are generated through their corner-sum matrices: a corner-sum
matrix is built row by row, each row being a lattice path that rises by
0 or 1 at each column, stays within 0/1 of the previous row, and ends at
the row index.  Every completed matrix corresponds to exactly one ASM,
so no post-filtering is needed; dead prefixes are abandoned as soon as a
row cannot be extended.

The counts grow fast (1, 2, 7, 42, 429, 7436, 218348, ...), so the
entry points guard against accidentally huge sizes; pass
``size_limit=None`` to lift the guard deliberately.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterator

from .core import Asm, Permutation, from_corner_sum

ASM_SIZE_LIMIT = 7
PERMUTATION_SIZE_LIMIT = 9

#: Number of n x n ASMs for n = 1..7, for quick sanity checks.
KNOWN_ASM_COUNTS = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429, 6: 7436, 7: 218348}


class SizeLimitExceededError(ValueError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(
            f"n={n} exceeds the guard ({limit}); pass size_limit=None to override"
        )


def _check_limit(n: int, size_limit: int | None) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if size_limit is not None and n > size_limit:
        raise SizeLimitExceededError(n, size_limit)


def _next_rows(prev: tuple[int, ...], i: int, n: int) -> Iterator[tuple[int, ...]]:
    """All valid corner-sum rows i given row i-1 (row 0 is all zeros)."""
    # Row entries must rise by 0/1 left to right, sit at prev[j] or
    # prev[j]+1, and reach i in the last column.
    row = [0] * n

    def extend(j: int, last: int) -> Iterator[tuple[int, ...]]:
        if j == n:
            if last == i:
                yield tuple(row)
            return
        for v in (last, last + 1):
            if v - prev[j] in (0, 1):
                # Even rising by 1 at every remaining column must reach i.
                if v + (n - 1 - j) >= i:
                    row[j] = v
                    yield from extend(j + 1, v)

    yield from extend(0, 0)


def iter_asms(n: int, *, size_limit: int | None = ASM_SIZE_LIMIT) -> Iterator[Asm]:
    """Yield all n x n ASMs; order is not specified, use enumerate_asms
    for the canonical order."""
    _check_limit(n, size_limit)
    zero = tuple([0] * n)

    def walk(rows: list[tuple[int, ...]], i: int) -> Iterator[Asm]:
        if i > n:
            yield from_corner_sum(rows)
            return
        for row in _next_rows(rows[-1] if rows else zero, i, n):
            rows.append(row)
            yield from walk(rows, i + 1)
            rows.pop()

    yield from walk([], 1)


def enumerate_asms(n: int, *, size_limit: int | None = ASM_SIZE_LIMIT) -> list[Asm]:
    """All n x n ASMs in canonical order.

    Canonical order is lexicographic on the row-major entry sequence
    with the natural entry order -1 < 0 < 1.
    """
    out = list(iter_asms(n, size_limit=size_limit))
    out.sort(key=lambda a: a.entries)
    return out


def count_asms(n: int, *, size_limit: int | None = ASM_SIZE_LIMIT) -> int:
    return sum(1 for _ in iter_asms(n, size_limit=size_limit))


def enumerate_permutations(
    n: int, *, size_limit: int | None = PERMUTATION_SIZE_LIMIT
) -> list[Permutation]:
    """All permutations of [n] in lexicographic one-line order."""
    _check_limit(n, size_limit)
    return [Permutation(p) for p in _permutations(range(1, n + 1))]
