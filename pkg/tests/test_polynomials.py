"""Tests for B_n(q) and Dodgson condensation."""

import random
from fractions import Fraction
from math import lcm

import pytest

from asmgraph import (
    AsmError,
    HalfExpPoly,
    SingularInteriorError,
    SizeLimitExceededError,
    bq_definition,
    bq_product,
    bq_qdet,
    bq_recursion,
    dodgson,
    q_dodgson_check,
    q_dodgson_divided,
    random_tnn,
    rational_matrix,
    sym_det,
    unsigned_permanent_q,
)
from asmgraph.polynomials import BQ_METHODS, _q_weight_matrix
from asmgraph.tnn import det

F = Fraction

B3_STR = "1 - 2q + 2q^3 - q^4"
B4_STR = (
    "1 - 3q + q^2 + 4q^3 - 2q^4 - 2q^5 - 2q^6 + 4q^7 + q^8 - 3q^9 + q^10"
)


def _random_rational_rows(n, rng, lo=-9, hi=9):
    return [
        [F(rng.randint(lo, hi), rng.randint(1, 5)) for _ in range(n)]
        for _ in range(n)
    ]


class TestBq:
    def test_small_strings(self):
        assert str(bq_definition(1)) == "1"
        assert str(bq_definition(2)) == "1 - q"
        assert str(bq_definition(3)) == B3_STR
        assert str(bq_definition(4)) == B4_STR

    @pytest.mark.parametrize("n", range(1, 8))
    def test_four_methods_agree(self, n):
        reference = bq_definition(n)
        assert bq_product(n) == reference
        assert bq_qdet(n) == reference
        assert bq_recursion(n) == reference

    def test_method_table(self):
        assert set(BQ_METHODS) == {"def", "prod", "qdet", "rec"}
        assert all(BQ_METHODS[k](3) == bq_definition(3) for k in BQ_METHODS)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_degree_and_values(self, n):
        p = bq_product(n)
        assert p.has_integer_exponents()
        assert p.degree_twice == 2 * (n * (n * n - 1) // 6)
        assert p.evaluate_q(F(0)) == 1
        assert p.evaluate_q(F(1)) == 0

    @pytest.mark.parametrize("n", range(2, 7))
    def test_palindromic_up_to_sign(self, n):
        coeffs = bq_product(n).coeffs_q()
        d = n * (n * n - 1) // 6
        sgn = -1 if (n * (n - 1) // 2) % 2 else 1
        for k in range(d + 1):
            assert coeffs.get(k, 0) == sgn * coeffs.get(d - k, 0)

    def test_matches_s4_table(self, s4_sign_beta):
        signed = HalfExpPoly.zero()
        unsigned = HalfExpPoly.zero()
        for sgn, bta in s4_sign_beta.values():
            signed = signed + HalfExpPoly.q_pow(bta, sgn)
            unsigned = unsigned + HalfExpPoly.q_pow(bta)
        assert bq_definition(4) == signed
        assert unsigned_permanent_q(4) == unsigned

    def test_guards(self):
        with pytest.raises(ValueError):
            bq_product(0)
        with pytest.raises(ValueError):
            bq_qdet(0)
        with pytest.raises(ValueError):
            bq_recursion(0)
        with pytest.raises(SizeLimitExceededError):
            bq_definition(10)
        with pytest.raises(AsmError, match="guard"):
            bq_qdet(11)
        with pytest.raises(SizeLimitExceededError):
            unsigned_permanent_q(9)


class TestUnsignedPermanent:
    def test_small(self):
        assert str(unsigned_permanent_q(1)) == "1"
        assert str(unsigned_permanent_q(2)) == "1 + q"

    def test_n4_fixtures(self):
        p = unsigned_permanent_q(4)
        assert p.coefficient_q(0) == 1
        assert p.coefficient_q(3) == 4
        assert p.coefficient_q(10) == 1
        assert p.evaluate_q(F(1)) == 24


class TestSymDet:
    def test_empty_and_scalar(self):
        assert sym_det([]) == HalfExpPoly.one()
        assert sym_det([[HalfExpPoly.const(7)]]) == HalfExpPoly.const(7)

    def test_matches_numeric_det_on_constants(self):
        rng = random.Random(3)
        for n in (2, 3, 4):
            for _ in range(5):
                rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
                sd = sym_det([[HalfExpPoly.const(x) for x in row] for row in rows])
                assert sd == HalfExpPoly.const(int(det(rows)))

    def test_non_square(self):
        with pytest.raises(AsmError):
            sym_det([[HalfExpPoly.one()], [HalfExpPoly.one()]])


class TestDodgson:
    def test_tiny(self):
        assert dodgson(rational_matrix([[7]])) == 7
        assert dodgson(rational_matrix([[1, 2], [3, 4]])) == -2

    def test_matches_det_on_random_matrices(self):
        rng = random.Random(11)
        checked = 0
        for n in (2, 3, 4, 5):
            for _ in range(8):
                m = rational_matrix(_random_rational_rows(n, rng))
                try:
                    value = dodgson(m)
                except SingularInteriorError:
                    continue
                assert value == det(m.rows)
                checked += 1
        assert checked > 20

    def test_matches_det_on_tnn_samples(self):
        for seed in range(6):
            m = random_tnn(4, seed=seed)
            assert dodgson(m) == det(m.rows)

    def test_singular_interior(self):
        with pytest.raises(SingularInteriorError):
            dodgson(rational_matrix([[1, 2, 3], [4, 0, 5], [6, 7, 8]]))


class TestQDodgson:
    def test_2x2_hand_identity(self):
        # |A_q| = m11 m22 - q m12 m21 and the interior is empty, so the
        # check reduces to the definition of the 2x2 q-determinant.
        report = q_dodgson_check(rational_matrix([[1, 2], [3, 4]]))
        assert report.passed
        assert report.scale == 1
        assert report.lhs == HalfExpPoly({0: 4, 2: -6})

    def test_all_ones_is_bq(self):
        for n in (2, 3, 4, 5):
            m = rational_matrix([[1] * n for _ in range(n)])
            report = q_dodgson_check(m)
            assert report.passed
            assert q_dodgson_divided(m) == bq_product(n)

    def test_random_integer_matrices(self):
        rng = random.Random(23)
        for n in (2, 3, 4):
            for _ in range(6):
                rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
                m = rational_matrix(rows)
                report = q_dodgson_check(m)
                assert report.passed
                assert report.scale == 1
                assert report.lhs == sym_det(_q_weight_matrix(rows)) * sym_det(
                    _q_weight_matrix([row[1 : n - 1] for row in rows[1 : n - 1]])
                )

    def test_rational_entries_are_scaled(self):
        m = rational_matrix([[F(1, 2), 1, 2], [1, 3, F(1, 3)], [2, 1, 1]])
        report = q_dodgson_check(m)
        assert report.passed
        assert report.scale == 6

    def test_random_rational_matrices(self):
        rng = random.Random(5)
        for n in (2, 3, 4):
            for _ in range(4):
                m = rational_matrix(_random_rational_rows(n, rng, lo=-3, hi=3))
                assert q_dodgson_check(m).passed

    def test_divided_recovers_qdet(self):
        rng = random.Random(9)
        for _ in range(6):
            rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            m = rational_matrix(rows)
            try:
                divided = q_dodgson_divided(m)
            except SingularInteriorError:
                assert rows[1][1] == 0
                continue
            assert divided == sym_det(_q_weight_matrix(rows))

    def test_divided_value_at_one(self):
        m = rational_matrix([[F(1, 2), 1], [1, 3]])
        scale = lcm(*(x.denominator for row in m.rows for x in row))
        assert q_dodgson_divided(m).evaluate_q(F(1)) == scale**2 * det(m.rows)

    def test_divided_singular_interior(self):
        with pytest.raises(SingularInteriorError):
            q_dodgson_divided(rational_matrix([[1, 2, 3], [4, 0, 5], [6, 7, 8]]))

    def test_too_small(self):
        with pytest.raises(AsmError):
            q_dodgson_check(rational_matrix([[1]]))
        with pytest.raises(AsmError):
            q_dodgson_divided(rational_matrix([[1]]))
