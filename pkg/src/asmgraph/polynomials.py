"""The signed bigrassmannian polynomial B_n(q), four ways.

    B_n(q) = sum over w in S_n of sign(w) q^{beta(w)}
           = prod_{k=1}^{n-1} (1 - q^k)^{n-k},

with beta(w) = (1/2) sum (i - w(i))^2.  The product evaluation comes
from a q-analogue of Dodgson condensation applied to the matrix
(q^{(i-j)^2/2})_{i,j}, whose determinant is exactly B_n(q); the same
recurrence gives

    B_n = B_{n-1}^2 (1 - q^{n-1}) / B_{n-2}.

This module computes B_n by definition, by product, by symbolic
q-determinant, and by the recursion, plus the numeric Dodgson identity
and its q-analogue on arbitrary rational matrices:

    |A| |A'| = |A del row 1 col 1| |A del row n col n|
             - |A del row 1 col n| |A del row n col 1|,

where A' is the interior (rows and columns 1 and n deleted); in the
q-weighted version the second product picks up the factor q^{n-1}.
All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .core import AsmError, sign
from .enumeration import enumerate_permutations
from .lattice import beta_permutation
from .symbolic import HalfExpPoly, NonExactDivisionError
from .tnn import RationalMatrix, det

QDET_SIZE_LIMIT = 10
PERMANENT_SIZE_LIMIT = 8


class SingularInteriorError(AsmError):
    """The interior minor vanishes, so the condensation quotient is undefined."""


def bq_definition(n: int, *, size_limit: int | None = 9) -> HalfExpPoly:
    """B_n(q) straight from the signed sum over S_n."""
    total = HalfExpPoly.zero()
    for w in enumerate_permutations(n, size_limit=size_limit):
        total = total + HalfExpPoly.q_pow(beta_permutation(w), sign(w))
    return total


def bq_product(n: int) -> HalfExpPoly:
    """B_n(q) as the product of (1 - q^k)^(n-k) for k = 1..n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    result = HalfExpPoly.one()
    for k in range(1, n):
        factor = HalfExpPoly.one() - HalfExpPoly.q_pow(k)
        result = result * factor ** (n - k)
    return result


def sym_det(entries: Sequence[Sequence[HalfExpPoly]]) -> HalfExpPoly:
    """Determinant of a matrix of polynomials.

    Cofactor expansion along successive rows, memoized on the set of
    still-available columns (the row is determined by how many columns
    remain), so the work is O(2^n) polynomial operations rather than n!.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise AsmError("matrix must be square")
    memo: dict[frozenset[int], HalfExpPoly] = {frozenset(): HalfExpPoly.one()}

    def rec(cols: frozenset[int]) -> HalfExpPoly:
        if cols in memo:
            return memo[cols]
        row = n - len(cols)
        total = HalfExpPoly.zero()
        for pos, c in enumerate(sorted(cols)):
            e = entries[row][c]
            if e.is_zero():
                continue
            term = e * rec(cols - {c})
            total = total + (term if pos % 2 == 0 else -term)
        memo[cols] = total
        return total

    return rec(frozenset(range(n)))


def _q_weight_matrix(rows: Sequence[Sequence[int]]) -> list[list[HalfExpPoly]]:
    """Entries m_ij * q^{(i-j)^2/2}, indices counted inside the matrix."""
    n = len(rows)
    return [
        [HalfExpPoly.q_pow_twice((i - j) ** 2, rows[i][j]) for j in range(n)]
        for i in range(n)
    ]


def bq_qdet(n: int, *, size_limit: int | None = QDET_SIZE_LIMIT) -> HalfExpPoly:
    """B_n(q) as the symbolic determinant of (q^{(i-j)^2/2})."""
    if n < 1:
        raise ValueError("n must be positive")
    if size_limit is not None and n > size_limit:
        raise AsmError(f"n={n} exceeds the q-determinant guard ({size_limit})")
    return sym_det(_q_weight_matrix([[1] * n for _ in range(n)]))


def bq_recursion(n: int) -> HalfExpPoly:
    """B_n(q) by the three-term recursion, seeded from the definition.

    B_1 and B_2 come from the signed-sum definition; every division is
    exact polynomial division and raises NonExactDivisionError if a
    remainder ever appears (it cannot, but the check is real).
    """
    if n < 1:
        raise ValueError("n must be positive")
    values = [None, bq_definition(1), bq_definition(2)]
    for k in range(3, n + 1):
        numerator = values[k - 1] * values[k - 1] * (
            HalfExpPoly.one() - HalfExpPoly.q_pow(k - 1)
        )
        values.append(numerator.divexact(values[k - 2]))
    return values[n]


BQ_METHODS = {
    "def": bq_definition,
    "prod": bq_product,
    "qdet": bq_qdet,
    "rec": bq_recursion,
}


def unsigned_permanent_q(n: int, *, size_limit: int | None = PERMANENT_SIZE_LIMIT) -> HalfExpPoly:
    """sum over S_n of q^{beta(w)}, the permanent analogue of B_n."""
    total = HalfExpPoly.zero()
    for w in enumerate_permutations(n, size_limit=size_limit):
        total = total + HalfExpPoly.q_pow(beta_permutation(w))
    return total


# ---------------------------------------------------------------------------
# Dodgson condensation, numeric and q-weighted
# ---------------------------------------------------------------------------

def _delete(rows: Sequence[Sequence], drop_rows: tuple[int, ...], drop_cols: tuple[int, ...]):
    """Submatrix with the given 0-based rows and columns removed."""
    return [
        [x for c, x in enumerate(row) if c not in drop_cols]
        for r, row in enumerate(rows)
        if r not in drop_rows
    ]


def dodgson(m: RationalMatrix) -> Fraction:
    """det(m) by one condensation step, exact.

    (|no row/col 1| * |no row/col n| - |no row 1, col n| * |no row n, col 1|)
    divided by the interior determinant.  Raises SingularInteriorError
    when the interior minor is zero (the classical proviso).
    """
    n = m.n
    if n == 1:
        return m.entry(1, 1)
    rows = m.rows
    interior = det(_delete(rows, (0, n - 1), (0, n - 1)))
    if interior == 0:
        raise SingularInteriorError("interior minor is zero")
    top_left = det(_delete(rows, (0,), (0,)))
    bottom_right = det(_delete(rows, (n - 1,), (n - 1,)))
    top_right = det(_delete(rows, (0,), (n - 1,)))
    bottom_left = det(_delete(rows, (n - 1,), (0,)))
    return (top_left * bottom_right - top_right * bottom_left) / interior


@dataclass(frozen=True)
class QDodgsonReport:
    """Both sides of the q-condensation identity for one matrix.

    The identity is checked multiplicatively (no division, so no
    proviso).  Input entries are scaled by a common denominator first;
    both sides being homogeneous of degree 2n-2 in the entries, the
    check is equivalent and all coefficients stay integers.
    """

    n: int
    scale: int
    lhs: HalfExpPoly
    rhs: HalfExpPoly

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def q_dodgson_check(m: RationalMatrix) -> QDodgsonReport:
    """Verify |A_q| |A'_q| = |A^11_q| |A^nn_q| - q^{n-1} |A^1n_q| |A^n1_q|.

    Every submatrix is q-weighted with indices counted from 1 inside
    the submatrix itself.
    """
    n = m.n
    if n < 2:
        raise AsmError("condensation needs n >= 2")
    scale = lcm(*(x.denominator for row in m.rows for x in row))
    rows = [[int(x * scale) for x in row] for row in m.rows]

    def qdet_of(sub) -> HalfExpPoly:
        return sym_det(_q_weight_matrix(sub))

    lhs = qdet_of(rows) * qdet_of(_delete(rows, (0, n - 1), (0, n - 1)))
    rhs = qdet_of(_delete(rows, (0,), (0,))) * qdet_of(
        _delete(rows, (n - 1,), (n - 1,))
    ) - HalfExpPoly.q_pow(n - 1) * qdet_of(_delete(rows, (0,), (n - 1,))) * qdet_of(
        _delete(rows, (n - 1,), (0,))
    )
    return QDodgsonReport(n, scale, lhs, rhs)


def q_dodgson_divided(m: RationalMatrix) -> HalfExpPoly:
    """|A_q| recovered by dividing the condensation numerator.

    Exact polynomial division by the q-weighted interior determinant;
    raises SingularInteriorError when that determinant is the zero
    polynomial.  The result equals the direct symbolic q-determinant of
    the scaled matrix (see :class:`QDodgsonReport` on scaling).
    """
    n = m.n
    if n < 2:
        raise AsmError("condensation needs n >= 2")
    report = q_dodgson_check(m)
    scale = report.scale
    rows = [[int(x * scale) for x in row] for row in m.rows]
    interior = sym_det(_q_weight_matrix(_delete(rows, (0, n - 1), (0, n - 1))))
    if interior.is_zero():
        raise SingularInteriorError("interior q-determinant is the zero polynomial")
    return report.rhs.divexact(interior)
