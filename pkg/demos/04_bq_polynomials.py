"""
The signed generating function B_n(q) and Dodgson condensation
==============================================================

Summing sign(w) * q^beta(w) over all permutations of n gives a
polynomial with a closed product form, a q-determinant form, and a
two-term recursion.  This script evaluates all four and then turns to
the determinant identity that powers the q-determinant: Dodgson's
condensation and its q-analogue.
"""

from fractions import Fraction

from asmgraph import (
    BQ_METHODS,
    HalfExpPoly,
    bq_definition,
    dodgson,
    det,
    q_dodgson_check,
    q_dodgson_divided,
    rational_matrix,
    unsigned_permanent_q,
)

# Four independent evaluations of the same polynomial.
for n in range(1, 6):
    values = {name: str(fn(n)) for name, fn in BQ_METHODS.items()}
    assert len(set(values.values())) == 1
    print(f"B_{n}(q) = {values['def']}")
print()

# The coefficients are palindromic up to an overall sign, and the
# polynomial vanishes at q=1 for n >= 2 (the signs cancel exactly).
b4 = bq_definition(4)
coeffs = b4.coeffs_q()
top = b4.degree_twice // 2
assert all(coeffs.get(k, 0) == coeffs.get(top - k, 0) for k in range(top + 1))
assert b4.evaluate_q(Fraction(1)) == 0
print(f"B_4 is palindromic of degree {top} and vanishes at q=1")

# Dropping the signs gives the permanent analogue, which counts all
# permutations when q=1.
p4 = unsigned_permanent_q(4)
print(f"unsigned version at q=1: {p4.evaluate_q(Fraction(1))} (= 4!)")
print()

# Dodgson condensation: the determinant of a matrix equals a 2x2
# determinant of its corner minors divided by the interior minor.
m = rational_matrix([
    [2, 1, 0, -1],
    [3, Fraction(1, 2), 1, 0],
    [0, 1, 1, 2],
    [1, 0, Fraction(3, 4), 1],
])
print(f"condensation: {dodgson(m)} == direct determinant: {det(m.rows)}")

# The q-analogue replaces each entry by a q-weighted variable and picks
# up one extra factor of q^(n-1); both sides live in an exponent ring
# that allows half-integer powers, printed with q^(t/2).
report = q_dodgson_check(m)
print(f"q-identity holds at n={report.n} (denominator scale {report.scale}):")
print(f"  lhs = {report.lhs}")

# Dividing out the interior recovers the q-determinant itself.
small = rational_matrix([[1, 2, 0], [2, 1, 1], [0, 1, 1]])
quotient = q_dodgson_divided(small)
assert isinstance(quotient, HalfExpPoly)
print(f"divided form for a 3x3: {quotient}")
