"""Total nonnegativity: exact tests, samplers, and the order separation.

A rational matrix is totally nonnegative (TNN) when every minor is
nonnegative.  For ASMs A and B, the monomial difference x^A - x^B is
nonnegative on all TNN matrices (wherever defined) precisely when
A <= B in the ASM order; when A <= B fails, a single 2-block matrix

    m(i, j) = 2 if i <= k and j <= l else 1

built from the first corner-sum violation (k, l) already separates the
pair, since every minor of that matrix is 0, 1 or 2 while the monomial
difference evaluates to 2^{A~(k,l)} - 2^{B~(k,l)} < 0.

The q-weighted variant: m is *locally TNN at q0* when the matrix
(q0^{(i-j)^2/2} m(i,j)) is TNN.  Everything here stays in exact
rational arithmetic, so q0 is restricted to perfect squares of
rationals, making q0^{1/2} exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import Asm, AsmError
from .lattice import SizeMismatchError, asm_leq, beta, corner_sum
from .symbolic import UndefinedEvaluationError, asm_monomial

TNN_SIZE_LIMIT = 8


class ComparableError(AsmError):
    """a <= b holds, so no TNN counterexample exists."""


class IrrationalSqrtError(AsmError):
    """q0 is not a perfect square of a rational, sqrt(q0) is not exact."""


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of exact rationals with 1-based accessor."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def rational_matrix(rows: Sequence[Sequence]) -> RationalMatrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise AsmError("matrix must be square")
    return RationalMatrix(out)


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            factor = m[r][col] / p
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return sign * result


def iter_minor_values(m: RationalMatrix) -> Iterable[Fraction]:
    """All minors of all sizes, exact, in a deterministic order."""
    n = m.n
    for k in range(1, n + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                yield det([[m.rows[r][c] for c in cols] for r in rows])


def is_tnn(m: RationalMatrix, *, size_limit: int | None = TNN_SIZE_LIMIT) -> bool:
    """Exact check that every minor is >= 0."""
    if size_limit is not None and m.n > size_limit:
        raise AsmError(
            f"n={m.n} exceeds the all-minors guard ({size_limit}); "
            "pass size_limit=None to override"
        )
    return all(v >= 0 for v in iter_minor_values(m))


def rational_sqrt(x) -> Fraction:
    """Exact square root of a nonnegative rational, or raise."""
    x = Fraction(x)
    if x < 0:
        raise IrrationalSqrtError(f"{x} is negative")
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise IrrationalSqrtError(f"{x} is not a perfect rational square")
    return Fraction(rn, rd)


def q_weighted(m: RationalMatrix, q0) -> RationalMatrix:
    """The matrix (q0^{(i-j)^2/2} m(i,j)); needs sqrt(q0) rational."""
    s = rational_sqrt(q0)
    return rational_matrix(
        [
            [m.entry(i, j) * s ** ((i - j) ** 2) for j in range(1, m.n + 1)]
            for i in range(1, m.n + 1)
        ]
    )


def q_unweighted(m: RationalMatrix, q0) -> RationalMatrix:
    """Inverse of :func:`q_weighted`; q0 must be a positive perfect square."""
    s = rational_sqrt(q0)
    if s == 0:
        raise AsmError("q0 must be positive")
    return rational_matrix(
        [
            [m.entry(i, j) / s ** ((i - j) ** 2) for j in range(1, m.n + 1)]
            for i in range(1, m.n + 1)
        ]
    )


def is_locally_tnn_at(
    m: RationalMatrix, q0, *, size_limit: int | None = TNN_SIZE_LIMIT
) -> bool:
    return is_tnn(q_weighted(m, q0), size_limit=size_limit)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def _longest_word(n: int) -> list[int]:
    """A reduced word for the longest permutation: (1)(2 1)(3 2 1)..."""
    word = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return word


def bidiagonal_product(
    diag: Sequence[Fraction],
    lower_params: Sequence[Fraction],
    upper_params: Sequence[Fraction],
) -> RationalMatrix:
    """L * D * U from elementary bidiagonal factors, TNN by construction.

    The lower word multiplies factors I + t e_{i+1,i} along a fixed
    reduced word of the longest permutation (so n(n-1)/2 parameters);
    the upper word mirrors it.  Nonnegative parameters and diagonal give
    a TNN matrix; strictly positive ones give a totally positive matrix
    and in particular all entries positive.
    """
    n = len(diag)
    word = _longest_word(n)
    if len(lower_params) != len(word) or len(upper_params) != len(word):
        raise AsmError(f"need {len(word)} lower and upper parameters for n={n}")
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Fraction(1)
    # Right-multiply by lower factors: column i += t * column i+1.
    for idx, t in zip(word, lower_params):
        t = Fraction(t)
        for r in range(n):
            m[r][idx - 1] += t * m[r][idx]
    for i in range(n):
        d = Fraction(diag[i])
        for r in range(n):
            m[r][i] *= d
    # Right-multiply by upper factors: column i+1 += t * column i.
    for idx, t in zip(reversed(word), upper_params):
        t = Fraction(t)
        for r in range(n):
            m[r][idx] += t * m[r][idx - 1]
    return rational_matrix(m)


def random_tnn(
    n: int, seed: int, *, param_bound: int = 4, allow_zero: bool = False
) -> RationalMatrix:
    """Random TNN matrix from a positive bidiagonal factorization.

    With ``allow_zero`` False (the default) all factorization parameters
    are strictly positive, so the sample is totally positive and every
    entry is a positive rational.
    """
    rng = random.Random(seed)
    count = n * (n - 1) // 2

    def draw() -> Fraction:
        if allow_zero and rng.random() < 0.25:
            return Fraction(0)
        return Fraction(rng.randint(1, param_bound), rng.randint(1, param_bound))

    diag = [Fraction(rng.randint(1, param_bound), rng.randint(1, param_bound)) for _ in range(n)]
    lower = [draw() for _ in range(count)]
    upper = [draw() for _ in range(count)]
    return bidiagonal_product(diag, lower, upper)


# ---------------------------------------------------------------------------
# evaluating monomial differences
# ---------------------------------------------------------------------------

def evaluate_difference(a: Asm, b: Asm, m: RationalMatrix) -> Fraction:
    """Exact value of x^a - x^b at m.

    Raises UndefinedEvaluationError when a zero entry of m meets a
    negative exponent.
    """
    if a.n != b.n or a.n != m.n:
        raise SizeMismatchError(f"sizes differ: {a.n}, {b.n}, {m.n}")
    return asm_monomial(a).evaluate(m.rows) - asm_monomial(b).evaluate(m.rows)


def counterexample_matrix(a: Asm, b: Asm) -> tuple[RationalMatrix, tuple[int, int]]:
    """A TNN matrix on which x^a - x^b is negative, with its witness cell.

    Scans corner sums row-major for the first cell (k, l) where
    A~(a) < A~(b) and returns the 2-block matrix for it.  Every minor of
    that matrix is 0, 1 or 2, and the difference evaluates to
    2^{A~(a)(k,l)} - 2^{A~(b)(k,l)} < 0.  Raises ComparableError when
    a <= b, in which case no TNN counterexample exists.
    """
    n = a.n if a.n == b.n else None
    if n is None:
        raise SizeMismatchError(f"sizes differ: {a.n} vs {b.n}")
    if asm_leq(a, b):
        raise ComparableError("a <= b; the difference is nonnegative on TNN matrices")
    ca, cb = corner_sum(a), corner_sum(b)
    witness = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if ca.value(i, j) < cb.value(i, j):
                witness = (i, j)
                break
        if witness:
            break
    k, l = witness
    rows = [
        [Fraction(2) if i <= k and j <= l else Fraction(1) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return rational_matrix(rows), witness


# ---------------------------------------------------------------------------
# q-grid scanning
# ---------------------------------------------------------------------------

DEFAULT_Q_GRID = (Fraction(1, 4), Fraction(1), Fraction(4))


@dataclass(frozen=True)
class QPointResult:
    q0: Fraction
    samples: int
    violations: tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class QtnnScanReport:
    a: Asm
    b: Asm
    comparable: bool
    results: tuple[QPointResult, ...]

    @property
    def has_violations(self) -> bool:
        return any(r.violations for r in self.results)


def qtnn_scan(
    a: Asm,
    b: Asm,
    *,
    q_grid: Sequence = DEFAULT_Q_GRID,
    samples: int = 20,
    seed: int = 0,
) -> QtnnScanReport:
    """Search for sign violations of x^a - x^b on locally-TNN samples.

    For each q0 in the grid (perfect rational squares), draws matrices
    that are locally TNN at q0 and evaluates the difference at their
    q-weighted images.  When a <= b no violation can occur; when the
    pair is incomparable the deterministic 2-block counterexample is
    prepended as sample 0 at every grid point, so a violation is always
    exhibited.  Each sample also cross-checks the q-weighting identity
    value(weighted) = q0^{beta(a)} x^a(m) - q0^{beta(b)} x^b(m).
    """
    comparable = asm_leq(a, b)
    extra = []
    if not comparable:
        extra.append(counterexample_matrix(a, b)[0])
    results = []
    for gi, q0 in enumerate(q_grid):
        q0 = Fraction(q0)
        violations = []
        for idx in range(samples + len(extra)):
            if idx < len(extra):
                weighted = extra[idx]
            else:
                weighted = random_tnn(a.n, seed=seed * 1000003 + gi * 1009 + idx)
            local = q_unweighted(weighted, q0)
            value = evaluate_difference(a, b, weighted)
            check = q0 ** beta(a) * asm_monomial(a).evaluate(local.rows) - q0 ** beta(
                b
            ) * asm_monomial(b).evaluate(local.rows)
            if value != check:
                raise AsmError("q-weighting identity failed; implementation bug")
            if value < 0:
                violations.append((idx, value))
        results.append(QPointResult(q0, samples + len(extra), tuple(violations)))
    return QtnnScanReport(a, b, comparable, tuple(results))
