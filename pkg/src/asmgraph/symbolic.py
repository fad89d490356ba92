"""Monomials, certificates, and exact polynomial arithmetic in q^(1/2).

To an ASM A we attach the Laurent monomial x^A = prod x_ij^{A(i,j)} in
the matrix variables x_ij, and its q-weighted version

    x_q^A = q^{beta(A)} x^A,

obtained by substituting q^{(i-j)^2 / 2} x_ij for x_ij.  The central
algebraic fact made executable here: A <= B in the ASM order exactly
when x^A - x^B admits a *subtraction-free Laurent* (SFL) certificate, a
telescoping sum over a saturated chain A = A_0 < ... < A_k = B of steps

    x^{A_t} - x^{A_{t+1}} = prefix_t * minor_t / divisor_t,

where prefix_t is the monomial x^{A_t} written on the step's rectangle,
divisor_t = x_{ik} x_{jl} is the product of two corner variables, and
minor_t is the 2x2 solid minor of the step's covering rectangle.  Each
prefix/divisor ratio is an almost positive Laurent monomial (exponents
>= -1), so the certificate witnesses total nonnegativity of the
difference; placing the sum over a common denominator gives the
subtraction-free form directly.

Polynomials in q^(1/2) (needed because (i - j)^2 / 2 may be a half
integer) are represented sparsely with doubled exponents: the key t
stands for q^(t/2) and coefficients are exact integers.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .core import Asm, AsmError, asm_from_json_dict, asm_to_json_dict
from .lattice import (
    Edge,
    IncomparableError,
    beta,
    beta_entry_weighted,
    covering_chain,
    edge_between,
)


class UndefinedEvaluationError(AsmError):
    """Evaluation hit 0^negative; the rational expression is undefined."""

    def __init__(self, position: tuple[int, int]):
        self.position = position
        super().__init__(f"zero entry at {position} raised to a negative power")


class VerificationFailureError(AsmError):
    """A certificate failed structural or numeric verification."""

    def __init__(self, message: str, *, step: int | None = None, point=None):
        self.step = step
        self.point = point
        super().__init__(message)


class NonExactDivisionError(AsmError):
    """Polynomial division left a remainder."""


Variable = tuple[int, int]


def _var_str(v: Variable) -> str:
    i, j = v
    if i <= 9 and j <= 9:
        return f"x{i}{j}"
    return f"x[{i},{j}]"


@dataclass(frozen=True)
class LaurentMonomial:
    """c * prod x_ij^e_ij with an exact rational coefficient.

    Exponent data is stored as a sorted tuple so instances are hashable;
    build instances with :func:`monomial`.
    """

    coeff: Fraction
    powers: tuple[tuple[Variable, int], ...]

    def pow_dict(self) -> dict[Variable, int]:
        return dict(self.powers)

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        exps = self.pow_dict()
        for v, e in other.powers:
            exps[v] = exps.get(v, 0) + e
        return monomial(exps, self.coeff * other.coeff)

    def __truediv__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        exps = self.pow_dict()
        for v, e in other.powers:
            exps[v] = exps.get(v, 0) - e
        return monomial(exps, self.coeff / other.coeff)

    def is_almost_positive(self) -> bool:
        """Positive coefficient and every exponent >= -1."""
        return self.coeff > 0 and all(e >= -1 for _, e in self.powers)

    def evaluate(self, rows: Sequence[Sequence[Fraction]]) -> Fraction:
        """Exact value at a matrix (plain nested sequence, 0-based)."""
        result = Fraction(self.coeff)
        for (i, j), e in self.powers:
            base = Fraction(rows[i - 1][j - 1])
            if base == 0:
                if e < 0:
                    raise UndefinedEvaluationError((i, j))
                result = Fraction(0)
                continue
            result *= base**e
        return result

    def __str__(self) -> str:
        parts = []
        if self.coeff != 1 or not self.powers:
            parts.append(str(self.coeff))
        for v, e in self.powers:
            parts.append(_var_str(v) if e == 1 else f"{_var_str(v)}^{e}")
        return " ".join(parts)


def monomial(powers: Mapping[Variable, int], coeff=1) -> LaurentMonomial:
    """Canonical LaurentMonomial: zero exponents dropped, variables sorted."""
    items = tuple(sorted((v, e) for v, e in powers.items() if e != 0))
    return LaurentMonomial(Fraction(coeff), items)


MONOMIAL_ONE = monomial({})


def asm_monomial(a: Asm) -> LaurentMonomial:
    """x^a: one factor x_ij^{a(i,j)} per nonzero entry."""
    return monomial(
        {
            (i, j): a.entry(i, j)
            for i in range(1, a.n + 1)
            for j in range(1, a.n + 1)
            if a.entry(i, j) != 0
        }
    )


class QMonomial(NamedTuple):
    monomial: LaurentMonomial
    q_power: int


def q_monomial(a: Asm) -> QMonomial:
    """x_q^a = q^{beta(a)} x^a; the q-power is cross-checked two ways."""
    p1, p2 = beta(a), beta_entry_weighted(a)
    if p1 != p2:
        raise AsmError(f"beta evaluators disagree: {p1} vs {p2}")
    return QMonomial(asm_monomial(a), p1)


# ---------------------------------------------------------------------------
# 2x2 minors and edge factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorRef:
    """A minor of the generic matrix, given by strictly increasing rows/cols."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("rows and cols must be nonempty, equal length")
        if list(self.rows) != sorted(set(self.rows)) or list(self.cols) != sorted(
            set(self.cols)
        ):
            raise ValueError("rows and cols must be strictly increasing")

    @property
    def size(self) -> int:
        return len(self.rows)

    def is_small(self) -> bool:
        return self.size <= 2

    def is_solid(self) -> bool:
        """Consecutive row and column indices."""
        return self.rows[-1] - self.rows[0] == self.size - 1 and (
            self.cols[-1] - self.cols[0] == self.size - 1
        )

    def evaluate(self, rows: Sequence[Sequence[Fraction]]) -> Fraction:
        sub = [
            [Fraction(rows[i - 1][j - 1]) for j in self.cols] for i in self.rows
        ]
        return _det_laplace(sub)

    def evaluate_q(self, rows: Sequence[Sequence[Fraction]], q: Fraction) -> Fraction:
        """q-deformed value of a 2x2 minor: x_ik x_jl - q^area x_il x_jk."""
        if self.size != 2:
            raise ValueError("q-deformation implemented for 2x2 minors")
        (i, j), (k, l) = self.rows, self.cols
        area = (j - i) * (l - k)

        def m(p, c):
            return Fraction(rows[p - 1][c - 1])

        return m(i, k) * m(j, l) - Fraction(q) ** area * m(i, l) * m(j, k)

    def __str__(self) -> str:
        body = "; ".join(
            " ".join(_var_str((i, j)) for j in self.cols) for i in self.rows
        )
        return f"|{body}|"


def _det_laplace(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_laplace(minor)
        total += term if j % 2 == 0 else -term
    return total


class EdgeFactorization(NamedTuple):
    """x^source - x^target = prefix * minor / divisor, exactly."""

    prefix: LaurentMonomial
    divisor: LaurentMonomial
    minor: MinorRef


def edge_factorization(e: Edge) -> EdgeFactorization:
    """Factor the monomial difference across one graph edge.

    The prefix is x^source itself (the unchanged positions times the
    source's corner powers); the divisor is the product of the two
    diagonal corner variables x_ik x_jl; the minor is the 2x2 minor on
    rows (i, j) and columns (k, l).  The identity

        x^source - x^target = prefix * minor / divisor

    holds because the target's corner exponents differ from the
    source's by (-1, +1, +1, -1).
    """
    r = e.rect
    prefix = asm_monomial(e.source)
    divisor = monomial({(r.i, r.k): 1, (r.j, r.l): 1})
    minor = MinorRef((r.i, r.j), (r.k, r.l))
    return EdgeFactorization(prefix, divisor, minor)


# ---------------------------------------------------------------------------
# SFL certificates
# ---------------------------------------------------------------------------

class CertStep(NamedTuple):
    prefix: LaurentMonomial
    divisor: LaurentMonomial
    minor: MinorRef


@dataclass(frozen=True)
class SflCertificate:
    """Telescoping subtraction-free witness that source <= target."""

    source: Asm
    target: Asm
    beta_pair: tuple[int, int]
    steps: tuple[CertStep, ...]

    def __str__(self) -> str:
        if not self.steps:
            return "0"
        return " + ".join(step_str(s) for s in self.steps)


def step_str(s: CertStep) -> str:
    return f"{s.prefix} * {s.minor} / ({s.divisor})"


def sfl_certificate(a: Asm, b: Asm) -> SflCertificate:
    """Build the SFL certificate for a <= b along the canonical chain.

    Raises IncomparableError when a <= b fails; a == b gives the empty
    certificate for the zero function.
    """
    chain = covering_chain(a, b)
    steps = []
    for lower, upper in zip(chain, chain[1:]):
        e = edge_between(lower, upper)
        steps.append(CertStep(*edge_factorization(e)))
    return SflCertificate(a, b, (beta(a), beta(b)), tuple(steps))


@dataclass(frozen=True)
class VerificationReport:
    steps: int
    samples: int
    seed: int


def _random_positive_rows(n: int, rng: random.Random) -> list[list[Fraction]]:
    return [
        [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]
        for _ in range(n)
    ]


def evaluate_certificate(
    cert: SflCertificate, rows: Sequence[Sequence[Fraction]]
) -> Fraction:
    """Exact value of the certificate sum at a matrix."""
    total = Fraction(0)
    for s in cert.steps:
        total += s.prefix.evaluate(rows) * s.minor.evaluate(rows) / s.divisor.evaluate(rows)
    return total


def evaluate_certificate_q(
    cert: SflCertificate, rows: Sequence[Sequence[Fraction]], q: Fraction
) -> Fraction:
    """Value of the q-weighted certificate sum.

    Step t acquires the factor q^{beta(source) + t} and its minor is
    q-deformed; the sum equals q^{beta(a)} x^a - q^{beta(b)} x^b, so all
    q-powers are nonnegative and the whole thing is a polynomial in q.
    """
    q = Fraction(q)
    base = cert.beta_pair[0]
    total = Fraction(0)
    for t, s in enumerate(cert.steps):
        total += (
            q ** (base + t)
            * s.prefix.evaluate(rows)
            * s.minor.evaluate_q(rows, q)
            / s.divisor.evaluate(rows)
        )
    return total


def verify_certificate(
    cert: SflCertificate, *, samples: int = 5, seed: int = 0
) -> VerificationReport:
    """Check a certificate structurally and numerically.

    Structural: the step count equals the beta gap, every minor is a
    small solid minor, and every prefix/divisor ratio is an almost
    positive Laurent monomial.  Numeric: at ``samples`` random positive
    rational matrices the telescoping sum equals x^source - x^target
    exactly.  Raises VerificationFailureError on the first failure.
    """
    b0, b1 = cert.beta_pair
    if (b0, b1) != (beta(cert.source), beta(cert.target)):
        raise VerificationFailureError("stored beta pair is wrong")
    if len(cert.steps) != b1 - b0:
        raise VerificationFailureError(
            f"{len(cert.steps)} steps for a beta gap of {b1 - b0}"
        )
    for t, s in enumerate(cert.steps):
        if not (s.minor.is_small() and s.minor.is_solid()):
            raise VerificationFailureError(f"minor {s.minor} not small solid", step=t)
        if not (s.prefix / s.divisor).is_almost_positive():
            raise VerificationFailureError(
                f"step ratio {s.prefix / s.divisor} not almost positive", step=t
            )
    rng = random.Random(seed)
    n = cert.source.n
    diff_mono = asm_monomial(cert.source), asm_monomial(cert.target)
    for _ in range(samples):
        rows = _random_positive_rows(n, rng)
        expected = diff_mono[0].evaluate(rows) - diff_mono[1].evaluate(rows)
        got = evaluate_certificate(cert, rows)
        if got != expected:
            raise VerificationFailureError(
                f"certificate sum {got} != direct difference {expected}",
                point=rows,
            )
    return VerificationReport(len(cert.steps), samples, seed)


# ---------------------------------------------------------------------------
# common-denominator (fully subtraction-free) form
# ---------------------------------------------------------------------------

class CombinedForm(NamedTuple):
    """x^a - x^b = laurent_prefix * sum(mono_t * minor_t).

    The prefix is an almost positive Laurent monomial; every residual
    mono_t has nonnegative exponents, so the sum is a subtraction-free
    polynomial in matrix entries and small solid minors with no
    constant term.
    """

    laurent_prefix: LaurentMonomial
    terms: tuple[tuple[LaurentMonomial, MinorRef], ...]


def combined_form(cert: SflCertificate) -> CombinedForm:
    if not cert.steps:
        return CombinedForm(MONOMIAL_ONE, ())
    ratios = [s.prefix / s.divisor for s in cert.steps]
    variables = {v for r in ratios for v, _ in r.powers}
    support = {
        v: min(r.pow_dict().get(v, 0) for r in ratios) for v in variables
    }
    prefix = monomial(support)
    terms = tuple((r / prefix, s.minor) for r, s in zip(ratios, cert.steps))
    return CombinedForm(prefix, terms)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------

def _powers_to_json(m: LaurentMonomial) -> dict[str, int]:
    if m.coeff != 1:
        raise AsmError(f"only coefficient-1 monomials serialize: {m}")
    return {f"({i},{j})": e for (i, j), e in m.powers}


_KEY_RE = re.compile(r"^\((\d+),(\d+)\)$")


def _powers_from_json(d: Mapping[str, int]) -> LaurentMonomial:
    powers = {}
    for key, e in d.items():
        match = _KEY_RE.match(key)
        if not match:
            raise AsmError(f"bad exponent key {key!r}")
        powers[(int(match.group(1)), int(match.group(2)))] = int(e)
    return monomial(powers)


def certificate_to_json_dict(cert: SflCertificate) -> dict:
    return {
        "endpoints": [asm_to_json_dict(cert.source), asm_to_json_dict(cert.target)],
        "beta": list(cert.beta_pair),
        "steps": [
            {
                "prefix": _powers_to_json(s.prefix),
                "divisor": _powers_to_json(s.divisor),
                "minor": {"rows": list(s.minor.rows), "cols": list(s.minor.cols)},
            }
            for s in cert.steps
        ],
    }


def certificate_from_json_dict(d: Mapping) -> SflCertificate:
    source = asm_from_json_dict(d["endpoints"][0])
    target = asm_from_json_dict(d["endpoints"][1])
    steps = tuple(
        CertStep(
            _powers_from_json(s["prefix"]),
            _powers_from_json(s["divisor"]),
            MinorRef(tuple(s["minor"]["rows"]), tuple(s["minor"]["cols"])),
        )
        for s in d["steps"]
    )
    return SflCertificate(source, target, tuple(d["beta"]), steps)


def certificate_to_json(cert: SflCertificate) -> str:
    return json.dumps(certificate_to_json_dict(cert), sort_keys=True)


def certificate_from_json(text: str) -> SflCertificate:
    return certificate_from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# polynomials in q^(1/2): sparse, doubled integer exponents
# ---------------------------------------------------------------------------

class HalfExpPoly:
    """Integer-coefficient polynomial in q^(1/2).

    Terms map doubled exponents to coefficients: {t: c} stands for
    c * q^(t/2).  Doubling keeps every exponent an exact int; zero
    coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for t, c in (terms or {}).items():
            if int(t) != t or int(c) != c:
                raise AsmError(f"need integer exponent/coefficient, got {t}: {c}")
            if c != 0:
                clean[int(t)] = int(c)
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "HalfExpPoly":
        return cls({})

    @classmethod
    def const(cls, c: int) -> "HalfExpPoly":
        return cls({0: c})

    @classmethod
    def one(cls) -> "HalfExpPoly":
        return cls.const(1)

    @classmethod
    def q_pow_twice(cls, twice: int, coeff: int = 1) -> "HalfExpPoly":
        """coeff * q^(twice/2)."""
        return cls({twice: coeff})

    @classmethod
    def q_pow(cls, k: int, coeff: int = 1) -> "HalfExpPoly":
        """coeff * q^k for integer k."""
        return cls({2 * k: coeff})

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "HalfExpPoly") -> "HalfExpPoly":
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return HalfExpPoly(out)

    def __sub__(self, other: "HalfExpPoly") -> "HalfExpPoly":
        return self + (-other)

    def __neg__(self) -> "HalfExpPoly":
        return HalfExpPoly({t: -c for t, c in self.terms.items()})

    def __mul__(self, other: "HalfExpPoly") -> "HalfExpPoly":
        out: dict[int, int] = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = t1 + t2
                out[t] = out.get(t, 0) + c1 * c2
        return HalfExpPoly(out)

    def __pow__(self, k: int) -> "HalfExpPoly":
        if k < 0:
            raise ValueError("negative power")
        result = HalfExpPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfExpPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree_twice(self) -> int:
        """Doubled degree; the zero polynomial has no degree."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return max(self.terms)

    def coefficient_q(self, k: int) -> int:
        """Coefficient of q^k (integer k)."""
        return self.terms.get(2 * k, 0)

    def has_integer_exponents(self) -> bool:
        return all(t % 2 == 0 for t in self.terms)

    def coeffs_q(self) -> dict[int, int]:
        """As {integer exponent: coefficient}; requires integer exponents."""
        if not self.has_integer_exponents():
            raise AsmError("polynomial has genuine half-integer exponents")
        return {t // 2: c for t, c in sorted(self.terms.items())}

    # -- evaluation and division ----------------------------------------
    def evaluate_sqrt(self, s: Fraction) -> Fraction:
        """Exact value with q^(1/2) = s, i.e. at q = s^2."""
        s = Fraction(s)
        return sum((c * s**t for t, c in self.terms.items()), Fraction(0))

    def evaluate_q(self, q: Fraction) -> Fraction:
        """Exact value at q; requires integer exponents."""
        q = Fraction(q)
        return sum((c * q**k for k, c in self.coeffs_q().items()), Fraction(0))

    def divexact(self, divisor: "HalfExpPoly") -> "HalfExpPoly":
        """Exact division; raises NonExactDivisionError on a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = {t: Fraction(c) for t, c in self.terms.items()}
        div = dict(divisor.terms)
        dlead = max(div)
        quot: dict[int, Fraction] = {}
        while rem:
            rlead = max(rem)
            if rlead < dlead:
                raise NonExactDivisionError("remainder of lower degree than divisor")
            qt = rlead - dlead
            qc = rem[rlead] / div[dlead]
            quot[qt] = quot.get(qt, Fraction(0)) + qc
            for t, c in div.items():
                key = qt + t
                new = rem.get(key, Fraction(0)) - qc * c
                if new == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = new
        out = {}
        for t, c in quot.items():
            if c.denominator != 1:
                raise NonExactDivisionError(f"non-integer quotient coefficient {c}")
            if c != 0:
                out[t] = int(c)
        return HalfExpPoly(out)

    # -- display ----------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            c = self.terms[t]
            mag = abs(c)
            if t == 0:
                body = str(mag)
            else:
                power = "q" if t == 2 else (f"q^{t // 2}" if t % 2 == 0 else f"q^({t}/2)")
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HalfExpPoly({self.terms!r})"
