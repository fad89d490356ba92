"""Tests for monomials, SFL certificates, and q^(1/2) polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asmgraph import (
    AsmError,
    HalfExpPoly,
    IncomparableError,
    LaurentMonomial,
    MinorRef,
    NonExactDivisionError,
    UndefinedEvaluationError,
    VerificationFailureError,
    asm_leq,
    asm_monomial,
    beta,
    certificate_from_json,
    certificate_to_json,
    combined_form,
    edge_between,
    edge_factorization,
    enumerate_asms,
    evaluate_certificate,
    evaluate_certificate_q,
    monomial,
    q_monomial,
    sfl_certificate,
    verify_certificate,
)
from asmgraph.symbolic import (
    MONOMIAL_ONE,
    CertStep,
    SflCertificate,
    certificate_to_json_dict,
    certificate_from_json_dict,
    step_str,
)

F = Fraction


class TestMonomials:
    def test_canonical_form(self):
        m = monomial({(1, 2): 1, (2, 1): 0, (1, 1): -1})
        assert m.powers == (((1, 1), -1), ((1, 2), 1))
        assert monomial({(1, 1): 1}) * monomial({(1, 1): -1}) == MONOMIAL_ONE

    def test_mul_div(self):
        a = monomial({(1, 1): 2, (1, 2): 1})
        b = monomial({(1, 1): 1, (2, 2): 3}, coeff=2)
        assert a * b == monomial({(1, 1): 3, (1, 2): 1, (2, 2): 3}, coeff=2)
        assert (a * b) / b == a

    def test_str(self):
        m = monomial({(1, 2): 1, (2, 1): 1, (2, 2): -1})
        assert str(m) == "x12 x21 x22^-1"
        assert str(MONOMIAL_ONE) == "1"
        assert str(monomial({(1, 1): 1}, coeff=3)) == "3 x11"
        assert str(monomial({(10, 2): 1})) == "x[10,2]"

    def test_almost_positive(self):
        assert monomial({(1, 1): -1, (2, 2): 5}).is_almost_positive()
        assert not monomial({(1, 1): -2}).is_almost_positive()
        assert not monomial({(1, 1): 1}, coeff=-1).is_almost_positive()

    def test_evaluate(self):
        m = monomial({(1, 1): 2, (1, 2): -1}, coeff=F(3, 2))
        assert m.evaluate([[F(2), F(3)], [F(1), F(1)]]) == F(3, 2) * 4 / 3

    def test_evaluate_zero_positive_power(self):
        assert monomial({(1, 1): 2}).evaluate([[F(0)]]) == 0

    def test_evaluate_zero_negative_power(self):
        with pytest.raises(UndefinedEvaluationError) as exc:
            monomial({(1, 1): -1}).evaluate([[F(0)]])
        assert exc.value.position == (1, 1)

    def test_asm_monomial_center(self, a3):
        m = asm_monomial(a3["X"])
        assert str(m) == "x12 x21 x22^-1 x23 x32"
        qm = q_monomial(a3["X"])
        assert qm.q_power == 2
        assert qm.monomial == m

    def test_asm_monomial_permutation(self, a3):
        assert str(asm_monomial(a3["123"])) == "x11 x22 x33"


class TestMinorRef:
    def test_validation(self):
        with pytest.raises(ValueError):
            MinorRef((2, 1), (1, 2))
        with pytest.raises(ValueError):
            MinorRef((1, 2), (1,))
        with pytest.raises(ValueError):
            MinorRef((), ())

    def test_shape_predicates(self):
        assert MinorRef((1, 2), (3, 4)).is_small()
        assert MinorRef((1, 2), (3, 4)).is_solid()
        assert not MinorRef((1, 3), (1, 2)).is_solid()
        assert not MinorRef((1, 2, 3), (1, 2, 3)).is_small()

    def test_evaluate(self):
        rows = [[F(1), F(2)], [F(3), F(4)]]
        assert MinorRef((1, 2), (1, 2)).evaluate(rows) == -2
        assert MinorRef((1,), (2,)).evaluate(rows) == 2
        rows3 = [[F(2), F(0), F(1)], [F(1), F(1), F(0)], [F(0), F(3), F(1)]]
        assert MinorRef((1, 2, 3), (1, 2, 3)).evaluate(rows3) == 2 * 1 - 0 + 1 * 3

    def test_evaluate_q(self):
        rows = [[F(1), F(2), F(0)], [F(3), F(4), F(0)], [F(5), F(6), F(0)]]
        q = F(1, 3)
        assert MinorRef((1, 2), (1, 2)).evaluate_q(rows, q) == 4 - q * 6
        # rows (1, 3), cols (1, 2): the rectangle has area 2.
        assert MinorRef((1, 3), (1, 2)).evaluate_q(rows, q) == 6 - q * q * 10
        with pytest.raises(ValueError):
            MinorRef((1,), (1,)).evaluate_q(rows, q)

    def test_str(self):
        assert str(MinorRef((3, 4), (2, 3))) == "|x32 x33; x42 x43|"


class TestEdgeFactorization:
    def test_center_cover(self, a3):
        e = edge_between(a3["213"], a3["X"])
        f = edge_factorization(e)
        assert str(f.prefix) == "x12 x21 x33"
        assert str(f.divisor) == "x22 x33"
        assert f.minor == MinorRef((2, 3), (2, 3))
        assert str(f.prefix / f.divisor) == "x12 x21 x22^-1"
        assert (f.prefix / f.divisor).is_almost_positive()

    def test_factorization_identity_numerically(self, a3):
        # x^source - x^target = prefix * minor / divisor at generic points.
        rows = [
            [F(2), F(3), F(5)],
            [F(7), F(11, 2), F(1, 3)],
            [F(4, 7), F(9), F(6)],
        ]
        for s, t in [("132", "X"), ("213", "X"), ("X", "231"), ("123", "321")]:
            e = edge_between(a3[s], a3[t])
            f = edge_factorization(e)
            lhs = asm_monomial(a3[s]).evaluate(rows) - asm_monomial(a3[t]).evaluate(rows)
            rhs = (
                f.prefix.evaluate(rows)
                * f.minor.evaluate(rows)
                / f.divisor.evaluate(rows)
            )
            assert lhs == rhs


class TestCertificates:
    def test_empty_certificate(self, a3):
        cert = sfl_certificate(a3["X"], a3["X"])
        assert cert.steps == ()
        assert str(cert) == "0"
        verify_certificate(cert)
        assert evaluate_certificate(cert, [[F(1)] * 3] * 3) == 0

    def test_incomparable(self, a3):
        with pytest.raises(IncomparableError):
            sfl_certificate(a3["231"], a3["312"])

    def test_step_count_is_beta_gap(self, a3):
        cert = sfl_certificate(a3["123"], a3["321"])
        assert len(cert.steps) == 4
        assert cert.beta_pair == (0, 4)
        report = verify_certificate(cert, samples=3, seed=11)
        assert report.steps == 4 and report.samples == 3

    def test_all_comparable_pairs_n3(self):
        asms = enumerate_asms(3)
        for a in asms:
            for b in asms:
                if asm_leq(a, b):
                    verify_certificate(sfl_certificate(a, b), samples=2, seed=5)

    def test_sample_pairs_n4(self):
        asms = enumerate_asms(4)
        lo, hi = asms[::6], asms[::7]
        checked = 0
        for a in lo:
            for b in hi:
                if asm_leq(a, b):
                    verify_certificate(sfl_certificate(a, b), samples=2, seed=1)
                    checked += 1
        assert checked > 10

    def test_str_joins_steps(self, a3):
        cert = sfl_certificate(a3["123"], a3["X"])
        assert str(cert) == " + ".join(step_str(s) for s in cert.steps)
        assert "|" in str(cert) and "/" in str(cert)

    def test_worked_5x5_chain_certificate(self, worked_5x5):
        a, b, c = worked_5x5
        cert = sfl_certificate(a, c)
        assert cert.beta_pair == (6, 8)
        assert [s.minor for s in cert.steps] == [
            MinorRef((3, 4), (2, 3)),
            MinorRef((2, 3), (1, 2)),
        ]
        verify_certificate(cert, samples=4, seed=3)

    def test_worked_5x5_combined_form(self, worked_5x5):
        a, _, c = worked_5x5
        cf = combined_form(sfl_certificate(a, c))
        assert str(cf.laurent_prefix) == (
            "x12 x22^-1 x23 x32^-1 x33^-1 x35 x43^-1 x44 x53"
        )
        assert [(str(m), str(mr)) for m, mr in cf.terms] == [
            ("x21 x32", "|x32 x33; x42 x43|"),
            ("x33 x42", "|x21 x22; x31 x32|"),
        ]

    def test_combined_form_properties(self, a3):
        # Residual monomials have nonnegative exponents and the combined
        # product still equals the monomial difference.
        import random

        for s, t in [("123", "321"), ("123", "X"), ("213", "231")]:
            cert = sfl_certificate(a3[s], a3[t])
            cf = combined_form(cert)
            assert cf.laurent_prefix.is_almost_positive()
            for m, _ in cf.terms:
                assert all(e >= 0 for _, e in m.powers)
            rng = random.Random(7)
            rows = [
                [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3)]
                for _ in range(3)
            ]
            total = sum(
                (
                    m.evaluate(rows) * mr.evaluate(rows)
                    for m, mr in cf.terms
                ),
                F(0),
            )
            lhs = asm_monomial(a3[s]).evaluate(rows) - asm_monomial(a3[t]).evaluate(rows)
            assert cf.laurent_prefix.evaluate(rows) * total == lhs

    def test_combined_form_empty(self, a3):
        cf = combined_form(sfl_certificate(a3["X"], a3["X"]))
        assert cf.laurent_prefix == MONOMIAL_ONE and cf.terms == ()


class TestVerificationFailures:
    def _cert(self, a3):
        return sfl_certificate(a3["123"], a3["321"])

    def test_wrong_beta_pair(self, a3):
        cert = self._cert(a3)
        bad = SflCertificate(cert.source, cert.target, (0, 5), cert.steps)
        with pytest.raises(VerificationFailureError, match="beta pair"):
            verify_certificate(bad)

    def test_missing_step(self, a3):
        cert = self._cert(a3)
        bad = SflCertificate(cert.source, cert.target, cert.beta_pair, cert.steps[:-1])
        with pytest.raises(VerificationFailureError, match="steps"):
            verify_certificate(bad)

    def test_wrong_minor_fails_numerically(self, a3):
        cert = self._cert(a3)
        s0 = cert.steps[0]
        other = MinorRef((1, 2), (1, 2))
        if s0.minor == other:
            other = MinorRef((2, 3), (2, 3))
        bad = SflCertificate(
            cert.source,
            cert.target,
            cert.beta_pair,
            (CertStep(s0.prefix, s0.divisor, other),) + cert.steps[1:],
        )
        with pytest.raises(VerificationFailureError) as exc:
            verify_certificate(bad)
        assert exc.value.point is not None

    def test_non_solid_minor_fails_structurally(self, worked_5x5):
        a, _, c = worked_5x5
        cert = sfl_certificate(a, c)
        s0 = cert.steps[0]
        bad_minor = MinorRef((s0.minor.rows[0], s0.minor.rows[1] + 1), s0.minor.cols)
        bad = SflCertificate(
            cert.source,
            cert.target,
            cert.beta_pair,
            (CertStep(s0.prefix, s0.divisor, bad_minor),) + cert.steps[1:],
        )
        with pytest.raises(VerificationFailureError, match="solid") as exc:
            verify_certificate(bad)
        assert exc.value.step == 0

    def test_bad_ratio_fails_structurally(self, a3):
        cert = self._cert(a3)
        s0 = cert.steps[0]
        bad_prefix = s0.prefix * monomial({next(iter(s0.divisor.pow_dict())): -2})
        bad = SflCertificate(
            cert.source,
            cert.target,
            cert.beta_pair,
            (CertStep(bad_prefix, s0.divisor, s0.minor),) + cert.steps[1:],
        )
        with pytest.raises(VerificationFailureError, match="almost positive"):
            verify_certificate(bad)


class TestQCertificates:
    @pytest.mark.parametrize("q", [F(1), F(1, 2), F(3), F(2, 5)])
    def test_q_telescoping_identity(self, a3, q):
        import random

        rng = random.Random(13)
        rows = [
            [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3)]
            for _ in range(3)
        ]
        for s, t in [("123", "321"), ("123", "X"), ("132", "231"), ("X", "312")]:
            cert = sfl_certificate(a3[s], a3[t])
            got = evaluate_certificate_q(cert, rows, q)
            want = q ** beta(a3[s]) * asm_monomial(a3[s]).evaluate(rows) - q ** beta(
                a3[t]
            ) * asm_monomial(a3[t]).evaluate(rows)
            assert got == want

    def test_q_one_reduces_to_plain(self, a3):
        rows = [[F(3), F(1), F(2)], [F(1), F(4), F(1)], [F(2), F(1), F(5)]]
        cert = sfl_certificate(a3["123"], a3["321"])
        assert evaluate_certificate_q(cert, rows, F(1)) == evaluate_certificate(
            cert, rows
        )


class TestCertificateJson:
    def test_round_trip(self, worked_5x5):
        a, _, c = worked_5x5
        cert = sfl_certificate(a, c)
        text = certificate_to_json(cert)
        back = certificate_from_json(text)
        assert back == cert
        assert certificate_to_json(back) == text

    def test_schema(self, a3):
        d = certificate_to_json_dict(sfl_certificate(a3["123"], a3["X"]))
        assert set(d) == {"endpoints", "beta", "steps"}
        assert d["beta"] == [0, 2]
        for s in d["steps"]:
            assert set(s) == {"prefix", "divisor", "minor"}
            assert set(s["minor"]) == {"rows", "cols"}
            assert all(isinstance(e, int) for e in s["prefix"].values())

    def test_bad_exponent_key(self, a3):
        d = certificate_to_json_dict(sfl_certificate(a3["123"], a3["X"]))
        d["steps"][0]["prefix"] = {"x12": 1}
        with pytest.raises(AsmError, match="exponent key"):
            certificate_from_json_dict(d)

    def test_nonunit_coefficient_rejected(self, a3):
        cert = sfl_certificate(a3["123"], a3["132"])
        s0 = cert.steps[0]
        scaled = SflCertificate(
            cert.source,
            cert.target,
            cert.beta_pair,
            (CertStep(LaurentMonomial(F(2), s0.prefix.powers), s0.divisor, s0.minor),),
        )
        with pytest.raises(AsmError, match="coefficient"):
            certificate_to_json(scaled)


def _polys(max_terms=5):
    return st.dictionaries(
        st.integers(min_value=0, max_value=12),
        st.integers(min_value=-5, max_value=5),
        max_size=max_terms,
    ).map(HalfExpPoly)


class TestHalfExpPoly:
    def test_constructors(self):
        assert HalfExpPoly.zero().is_zero()
        assert HalfExpPoly.one() == HalfExpPoly.const(1)
        assert HalfExpPoly.q_pow(3) == HalfExpPoly.q_pow_twice(6)
        assert HalfExpPoly({0: 0}).is_zero()
        with pytest.raises(AsmError):
            HalfExpPoly({0: 1.5})
        with pytest.raises(AsmError):
            HalfExpPoly({1.5: 1})

    def test_str(self):
        assert str(HalfExpPoly.zero()) == "0"
        assert str(HalfExpPoly({0: 1, 2: -2, 6: 2, 8: -1})) == "1 - 2q + 2q^3 - q^4"
        assert str(HalfExpPoly({1: 1})) == "q^(1/2)"
        assert str(HalfExpPoly({3: -2})) == "-2q^(3/2)"
        assert str(HalfExpPoly({2: 1})) == "q"
        assert str(HalfExpPoly({4: 5})) == "5q^2"

    def test_queries(self):
        p = HalfExpPoly({0: 1, 2: -3, 5: 2})
        assert p.degree_twice == 5
        assert p.coefficient_q(1) == -3
        assert not p.has_integer_exponents()
        with pytest.raises(AsmError):
            p.coeffs_q()
        even = HalfExpPoly({0: 1, 4: 7})
        assert even.coeffs_q() == {0: 1, 2: 7}
        with pytest.raises(ValueError):
            HalfExpPoly.zero().degree_twice

    def test_evaluate(self):
        p = HalfExpPoly({1: 1, 2: 2})  # q^(1/2) + 2q
        assert p.evaluate_sqrt(F(3)) == 3 + 18
        q_only = HalfExpPoly({2: 1, 4: 1})
        assert q_only.evaluate_q(F(1, 2)) == F(1, 2) + F(1, 4)
        with pytest.raises(AsmError):
            p.evaluate_q(F(2))

    def test_divexact(self):
        one_minus_q = HalfExpPoly({0: 1, 2: -1})
        geom = HalfExpPoly({0: 1, 2: 1, 4: 1})
        assert (one_minus_q * geom).divexact(one_minus_q) == geom
        with pytest.raises(NonExactDivisionError):
            HalfExpPoly({0: 1, 4: 1}).divexact(HalfExpPoly({0: 1, 2: 1}))
        with pytest.raises(NonExactDivisionError):
            HalfExpPoly({0: 1, 2: 1}).divexact(HalfExpPoly.const(2))
        with pytest.raises(ZeroDivisionError):
            HalfExpPoly.one().divexact(HalfExpPoly.zero())

    def test_pow(self):
        p = HalfExpPoly({0: 1, 2: 1})
        assert p**0 == HalfExpPoly.one()
        assert p**3 == p * p * p
        with pytest.raises(ValueError):
            p ** (-1)

    @settings(max_examples=60)
    @given(_polys(), _polys(), _polys())
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a
        assert a * HalfExpPoly.one() == a

    @settings(max_examples=40)
    @given(_polys(), _polys())
    def test_divexact_inverts_mul(self, a, b):
        if b.is_zero():
            return
        assert (a * b).divexact(b) == a

    @settings(max_examples=40)
    @given(_polys(), _polys(), st.integers(min_value=-3, max_value=3))
    def test_evaluation_is_ring_hom(self, a, b, s):
        s = F(s)
        assert (a * b).evaluate_sqrt(s) == a.evaluate_sqrt(s) * b.evaluate_sqrt(s)
        assert (a + b).evaluate_sqrt(s) == a.evaluate_sqrt(s) + b.evaluate_sqrt(s)
