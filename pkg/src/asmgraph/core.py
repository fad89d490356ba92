"""Alternating sign matrices and their corner-sum encoding.

An alternating sign matrix (ASM) is a square matrix with entries in
{-1, 0, 1} such that along every row and every column the partial sums
are 0 or 1 and the full sums are 1.  Permutation matrices are exactly
the ASMs with no -1 entry; an ASM that does contain a -1 is called
*proper*.

The corner-sum matrix of an n x n ASM A is

    A~(i, j) = sum of A(p, q) over p <= i, q <= j,

with the convention A~(0, j) = A~(i, 0) = 0.  The map A -> A~ is a
bijection onto the set of n x n nonnegative integer matrices X with
X(i, n) = X(n, i) = i whose adjacent row and column differences all lie
in {0, 1}; the inverse is

    A(i, j) = X(i, j) + X(i-1, j-1) - X(i, j-1) - X(i-1, j).

All public indices here are 1-based, matching the mathematical
convention; storage is 0-based tuples internally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class AsmError(ValueError):
    """Base class for domain errors raised by this package."""


class NonSquareError(AsmError):
    """Input matrix is empty or not square."""


class EntryOutOfRangeError(AsmError):
    """Matrix entry outside {-1, 0, 1}."""

    def __init__(self, i: int, j: int, value: int):
        self.position = (i, j)
        self.value = value
        super().__init__(f"entry {value} at ({i},{j}) not in {{-1, 0, 1}}")


class PrefixSumViolationError(AsmError):
    """A row or column partial sum left {0, 1}."""

    def __init__(self, axis: str, i: int, j: int, value: int):
        self.axis = axis
        self.position = (i, j)
        self.value = value
        super().__init__(f"{axis} prefix sum {value} at ({i},{j}) not in {{0, 1}}")


class TotalSumViolationError(AsmError):
    """A full row or column sum differs from 1."""

    def __init__(self, axis: str, index: int, value: int):
        self.axis = axis
        self.index = index
        self.value = value
        super().__init__(f"{axis} {index} sums to {value}, expected 1")


class InvalidCornerSumError(AsmError):
    """Matrix fails the corner-sum characterisation."""


class NotAPermutationError(AsmError):
    """ASM contains a -1, so it is not a permutation matrix."""


Rows = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Asm:
    """An alternating sign matrix.  Construct via :func:`validate_asm`.

    >>> a = validate_asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
    >>> a.n
    3
    >>> a.entry(2, 2)
    -1
    >>> a.is_permutation()
    False
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        return self.entries[i - 1][j - 1]

    def is_permutation(self) -> bool:
        return all(x >= 0 for row in self.entries for x in row)

    def is_proper(self) -> bool:
        """True when the matrix contains at least one -1."""
        return not self.is_permutation()

    def __str__(self) -> str:
        return format_asm_text(self)


@dataclass(frozen=True)
class CornerSum:
    """Corner-sum matrix of an ASM, with 1-based accessor and 0 boundary.

    >>> c = corner_sum(validate_asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]]))
    >>> c.value(1, 1), c.value(0, 3), c.value(3, 3)
    (0, 0, 3)
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def value(self, i: int, j: int) -> int:
        """A~(i, j); rows/columns 0 give the boundary value 0."""
        if i == 0 or j == 0:
            return 0
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation, 1-based images.

    >>> w = Permutation((4, 3, 1, 2))
    >>> w(1), w.inverse()(4)
    (4, 1)
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise NotAPermutationError(
                f"{self.images} is not a rearrangement of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return format_permutation(self)


def _as_rows(rows: Rows) -> list[list[int]]:
    return [[int(x) for x in row] for row in rows]


def validate_asm(rows: Rows | Asm) -> Asm:
    """Check the ASM axioms and wrap the matrix in an :class:`Asm`.

    The four axiom families (entry range, row/column partial sums in
    {0, 1}, full sums equal to 1) are checked in a fixed deterministic
    order so rejections always name the same first violation: cells are
    scanned row-major; at each cell the entry range is checked, then the
    column partial sum, then the row partial sum; full row sums are
    checked as each row completes and full column sums at the end.

    >>> validate_asm([[0, 1], [-1, 1]])
    Traceback (most recent call last):
        ...
    asmgraph.core.PrefixSumViolationError: column prefix sum -1 at (2,1) not in {0, 1}
    """
    if isinstance(rows, Asm):
        return rows
    mat = _as_rows(rows)
    n = len(mat)
    if n == 0 or any(len(row) != n for row in mat):
        raise NonSquareError("matrix must be square and nonempty")
    col_sums = [0] * n
    for i, row in enumerate(mat, start=1):
        row_sum = 0
        for j, x in enumerate(row, start=1):
            if x not in (-1, 0, 1):
                raise EntryOutOfRangeError(i, j, x)
            col_sums[j - 1] += x
            if col_sums[j - 1] not in (0, 1):
                raise PrefixSumViolationError("column", i, j, col_sums[j - 1])
            row_sum += x
            if row_sum not in (0, 1):
                raise PrefixSumViolationError("row", i, j, row_sum)
        if row_sum != 1:
            raise TotalSumViolationError("row", i, row_sum)
    for j, s in enumerate(col_sums, start=1):
        if s != 1:
            raise TotalSumViolationError("column", j, s)
    return Asm(tuple(tuple(row) for row in mat))


@lru_cache(maxsize=None)
def corner_sum(a: Asm) -> CornerSum:
    """Corner-sum matrix A~ of an ASM."""
    n = a.n
    out = []
    running = [0] * n
    for i in range(n):
        acc = 0
        row = []
        for j in range(n):
            running[j] += a.entries[i][j]
            acc += running[j]
            row.append(acc)
        out.append(tuple(row))
    return CornerSum(tuple(out))


def is_corner_sum(rows: Rows | CornerSum) -> bool:
    """Does an integer matrix satisfy the corner-sum characterisation?"""
    try:
        _check_corner_sum(rows)
    except AsmError:
        return False
    return True


def _check_corner_sum(rows: Rows | CornerSum) -> CornerSum:
    if isinstance(rows, CornerSum):
        mat = [list(r) for r in rows.entries]
    else:
        mat = _as_rows(rows)
    n = len(mat)
    if n == 0 or any(len(row) != n for row in mat):
        raise NonSquareError("matrix must be square and nonempty")
    c = CornerSum(tuple(tuple(row) for row in mat))
    for i in range(1, n + 1):
        if c.value(i, n) != i:
            raise InvalidCornerSumError(f"row {i} must end at {i}, got {c.value(i, n)}")
        if c.value(n, i) != i:
            raise InvalidCornerSumError(
                f"column {i} must end at {i}, got {c.value(n, i)}"
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if c.value(i, j) - c.value(i, j - 1) not in (0, 1):
                raise InvalidCornerSumError(f"row step at ({i},{j}) not in {{0, 1}}")
            if c.value(i, j) - c.value(i - 1, j) not in (0, 1):
                raise InvalidCornerSumError(f"column step at ({i},{j}) not in {{0, 1}}")
    return c


def from_corner_sum(rows: Rows | CornerSum) -> Asm:
    """Invert the corner-sum map.

    Accepts either a :class:`CornerSum` or a raw integer matrix, checks
    the characterisation (boundary values i, adjacent differences in
    {0, 1}), and returns the unique ASM with that corner-sum matrix.
    """
    c = _check_corner_sum(rows)
    n = c.n
    out = []
    for i in range(1, n + 1):
        row = [
            c.value(i, j) + c.value(i - 1, j - 1) - c.value(i, j - 1) - c.value(i - 1, j)
            for j in range(1, n + 1)
        ]
        out.append(tuple(row))
    return Asm(tuple(out))


def permutation_to_asm(w: Permutation | Sequence[int]) -> Asm:
    """Permutation matrix of w: a 1 in row i, column w(i).

    >>> permutation_to_asm((2, 1)).entries
    ((0, 1), (1, 0))
    """
    if not isinstance(w, Permutation):
        w = Permutation(tuple(int(x) for x in w))
    n = w.n
    rows = []
    for i in range(1, n + 1):
        row = [0] * n
        row[w(i) - 1] = 1
        rows.append(tuple(row))
    return Asm(tuple(rows))


def asm_to_permutation(a: Asm) -> Permutation:
    """Inverse of :func:`permutation_to_asm`; rejects proper ASMs."""
    if a.is_proper():
        raise NotAPermutationError("matrix contains a -1 entry")
    images = []
    for row in a.entries:
        images.append(row.index(1) + 1)
    return Permutation(tuple(images))


def inversions(w: Permutation) -> list[tuple[int, int]]:
    """Inversion pairs (i, j): i < j with w(i) > w(j), lex order.

    >>> inversions(Permutation((2, 1, 4, 3)))
    [(1, 2), (3, 4)]
    """
    n = w.n
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if w(i) > w(j)
    ]


def inversion_count(w: Permutation) -> int:
    return len(inversions(w))


def sign(w: Permutation) -> int:
    """(-1) to the inversion count."""
    return -1 if inversion_count(w) % 2 else 1


# ---------------------------------------------------------------------------
# text and JSON formats
# ---------------------------------------------------------------------------

def format_asm_text(a: Asm) -> str:
    """Text format: first line n, then the n rows, space-separated."""
    lines = [str(a.n)]
    lines.extend(" ".join(str(x) for x in row) for row in a.entries)
    return "\n".join(lines) + "\n"


def parse_asm_text(text: str) -> Asm:
    """Parse the text format produced by :func:`format_asm_text`."""
    tokens = text.split()
    if not tokens:
        raise AsmError("empty input")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise AsmError(f"non-integer token in matrix text: {exc}") from None
    n = values[0]
    if n <= 0 or len(values) != 1 + n * n:
        raise AsmError(f"expected {n}*{n} entries after the size line")
    body = values[1:]
    rows = [body[i * n : (i + 1) * n] for i in range(n)]
    return validate_asm(rows)


def asm_to_json_dict(a: Asm) -> dict:
    return {"n": a.n, "entries": [list(row) for row in a.entries]}


def asm_from_json_dict(d: dict) -> Asm:
    if d.get("n") != len(d.get("entries", [])):
        raise AsmError("JSON field 'n' disagrees with the entry rows")
    return validate_asm(d["entries"])


def asm_to_json(a: Asm) -> str:
    return json.dumps(asm_to_json_dict(a), sort_keys=True)


def asm_from_json(text: str) -> Asm:
    return asm_from_json_dict(json.loads(text))


def format_permutation(w: Permutation) -> str:
    """One-line notation; digits run together for n < 10.

    >>> format_permutation(Permutation((4, 3, 1, 2)))
    '4312'
    """
    if w.n < 10:
        return "".join(str(x) for x in w.images)
    return ",".join(str(x) for x in w.images)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, either '4312' or comma-separated '4,3,1,2'."""
    text = text.strip()
    if "," in text:
        images = tuple(int(t) for t in text.split(","))
    elif text.isdigit():
        images = tuple(int(ch) for ch in text)
    else:
        raise AsmError(f"cannot parse permutation from {text!r}")
    return Permutation(images)


def asms_equal(a: Asm, b: Asm) -> bool:
    return a.entries == b.entries


def identity_asm(n: int) -> Asm:
    """The identity permutation matrix, the unique minimum of the order."""
    return permutation_to_asm(tuple(range(1, n + 1)))


def reverse_asm(n: int) -> Asm:
    """Matrix of the longest permutation n, n-1, ..., 1, the unique maximum."""
    return permutation_to_asm(tuple(range(n, 0, -1)))


def _iter_asm_rows(a: Asm) -> Iterable[tuple[int, ...]]:
    return iter(a.entries)
