"""End-to-end verification checks over the whole package.

Each check re-derives one headline fact from scratch and compares it
with frozen reference data that was computed by independent oracles
(entrywise enumeration, pairwise corner-sum differencing, brute-force
order search).  The checks are deliberately redundant with the unit
tests: they exercise the public API the way a user would, in one pass,
and report timings.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import (
    Permutation,
    identity_asm,
    permutation_to_asm,
    reverse_asm,
    sign,
    validate_asm,
)
from .enumeration import enumerate_asms, enumerate_permutations
from .lattice import (
    IncomparableError,
    asm_leq,
    beta,
    beta_bigrassmannian_count,
    beta_entry_weighted,
    beta_permutation,
    build_graph,
    classify_edge,
    covered_by,
    edges_from,
    essential_points,
    fulton_essential_set,
)
from .polynomials import (
    SingularInteriorError,
    bq_definition,
    bq_product,
    bq_qdet,
    bq_recursion,
    dodgson,
    q_dodgson_check,
)
from .symbolic import evaluate_certificate, sfl_certificate, verify_certificate
from .tnn import (
    ComparableError,
    counterexample_matrix,
    det,
    evaluate_difference,
    is_tnn,
    random_tnn,
    rational_matrix,
)

# ---------------------------------------------------------------------------
# frozen reference data (hand-checked and confirmed by independent oracles)
# ---------------------------------------------------------------------------

#: The seven 3x3 ASMs by name; X is the unique one with a -1.
_A3_MATRICES = {
    "123": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "132": ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    "213": ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    "X": ((0, 1, 0), (1, -1, 1), (0, 1, 0)),
    "231": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    "312": ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    "321": ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
}

#: The 13 directed edges of the 3x3 ASM graph.
_A3_EDGES = {
    ("123", "132"), ("123", "213"), ("123", "321"),
    ("132", "X"), ("213", "X"),
    ("132", "231"), ("132", "312"), ("213", "231"), ("213", "312"),
    ("X", "231"), ("X", "312"),
    ("231", "321"), ("312", "321"),
}

#: (sign, beta) for every permutation of S_4.
_S4_SIGN_BETA = {
    "1234": (1, 0), "1243": (-1, 1), "1324": (-1, 1), "1342": (1, 3),
    "1423": (1, 3), "1432": (-1, 4), "2134": (-1, 1), "2143": (1, 2),
    "2314": (1, 3), "2341": (-1, 6), "2413": (-1, 5), "2431": (1, 7),
    "3124": (1, 3), "3142": (-1, 5), "3214": (-1, 4), "3241": (1, 7),
    "3412": (1, 8), "3421": (-1, 9), "4123": (-1, 6), "4132": (1, 7),
    "4213": (1, 7), "4231": (-1, 9), "4312": (-1, 9), "4321": (1, 10),
}

#: B_3 and B_4 coefficient tables, exponent -> coefficient.
_B3_COEFFS = {0: 1, 1: -2, 3: 2, 4: -1}
_B4_COEFFS = {0: 1, 1: -3, 2: 1, 3: 4, 4: -2, 5: -2, 6: -2, 7: 4, 8: 1, 9: -3, 10: 1}

#: Edge-type census of the full 5x5 ASM graph (3134 edges).  Type 16
#: does not occur at this size; its corner pattern needs two -1 entries
#: in each of two adjacent rows, which takes a 6x6 matrix.
A5_TYPE_CENSUS = {
    1: 1212, 2: 382, 3: 382, 4: 39, 5: 382, 6: 75, 7: 75, 8: 4,
    9: 382, 10: 75, 11: 75, 12: 4, 13: 39, 14: 4, 15: 4,
}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    passed: bool
    details: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.seconds:.2f}s): {self.details}"


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, details = fn()
    return CheckResult(name, passed, details, time.perf_counter() - start)


def _collect(problems: list[str], summary: str) -> tuple[bool, str]:
    if problems:
        shown = "; ".join(problems[:3])
        more = f" (+{len(problems) - 3} more)" if len(problems) > 3 else ""
        return False, shown + more
    return True, summary


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

def check_a3_reconstruction() -> CheckResult:
    """The seven 3x3 ASMs and their 13-edge graph, matched exactly."""

    def body() -> tuple[bool, str]:
        problems = []
        asms = enumerate_asms(3)
        if {a.entries for a in asms} != set(_A3_MATRICES.values()):
            problems.append("3x3 enumeration differs from the reference set")
        g = build_graph(3)
        names = {entries: name for name, entries in _A3_MATRICES.items()}
        edges = {
            (names[g.nodes[e.src].entries], names[g.nodes[e.dst].entries])
            for e in g.edges
        }
        if edges != _A3_EDGES:
            problems.append(f"edge set mismatch: {sorted(edges ^ _A3_EDGES)}")
        out_min = [e for e in g.edges if g.nodes[e.src] == identity_asm(3)]
        in_max = [e for e in g.edges if g.nodes[e.dst] == reverse_asm(3)]
        if len(out_min) != 3 or len(in_max) != 3:
            problems.append("extremes should have 3 outgoing/incoming edges")
        long = [e for e in out_min if g.nodes[e.dst] == reverse_asm(3)]
        if len(long) != 1 or long[0].rect.area != 4:
            problems.append("missing the area-4 edge between the extremes")
        return _collect(problems, "7 nodes, 13 edges, extremes of degree 3")

    return _run("A3 reconstruction", body)


def check_beta_table() -> CheckResult:
    """sign and beta over S_4, all three beta evaluators agreeing."""

    def body() -> tuple[bool, str]:
        problems = []
        for word, (expect_sign, expect_beta) in _S4_SIGN_BETA.items():
            w = Permutation(tuple(int(c) for c in word))
            a = permutation_to_asm(w)
            values = {
                "sign": sign(w) == expect_sign,
                "perm": beta_permutation(w) == expect_beta,
                "corner": beta(a) == expect_beta,
                "entry": beta_entry_weighted(a) == expect_beta,
                "count": beta_bigrassmannian_count(a) == expect_beta,
            }
            bad = [k for k, ok in values.items() if not ok]
            if bad:
                problems.append(f"{word}: {','.join(bad)} disagree")
        return _collect(problems, "24 permutations, 3 evaluators, all equal")

    return _run("beta table S4", body)


def check_bq_four_ways() -> CheckResult:
    """B_n by definition, product, q-determinant, and recursion, n <= 6."""

    def body() -> tuple[bool, str]:
        problems = []
        for n in range(1, 7):
            reference = bq_definition(n)
            for label, value in (
                ("prod", bq_product(n)),
                ("qdet", bq_qdet(n)),
                ("rec", bq_recursion(n)),
            ):
                if value != reference:
                    problems.append(f"n={n}: {label} differs from definition")
        if bq_definition(3).coeffs_q() != _B3_COEFFS:
            problems.append("B_3 coefficients differ from the frozen reference")
        if bq_definition(4).coeffs_q() != _B4_COEFFS:
            problems.append("B_4 coefficients differ from the frozen reference")
        return _collect(problems, "n=1..6 agree; B_3, B_4 coefficient-exact")

    return _run("Bq four ways", body)


def check_order_oracle(seed: int = 0) -> CheckResult:
    """leq, certificates, and counterexamples agree on all of A_4 x A_4.

    For each comparable pair the certificate is verified and evaluated
    at 5 seeded TNN sample matrices, where it must equal the direct
    monomial difference and be nonnegative; for each incomparable pair
    the 2-block counterexample must be TNN and evaluate negative.
    """

    def body() -> tuple[bool, str]:
        problems = []
        asms = enumerate_asms(4)
        comparable_pairs = 0
        incomparable_pairs = 0
        for pi, a in enumerate(asms):
            for pj, b in enumerate(asms):
                comparable = asm_leq(a, b)
                try:
                    cert = sfl_certificate(a, b)
                except IncomparableError:
                    cert = None
                try:
                    cm, _witness = counterexample_matrix(a, b)
                except ComparableError:
                    cm = None
                if (cert is not None) != comparable or (cm is None) != comparable:
                    problems.append(f"pair ({pi},{pj}): the three oracles disagree")
                    continue
                if comparable:
                    comparable_pairs += 1
                    verify_certificate(cert, samples=1, seed=seed + pi)
                    for k in range(5):
                        m = random_tnn(4, seed=seed + pi * 1303 + pj * 31 + k)
                        value = evaluate_certificate(cert, m.rows)
                        direct = evaluate_difference(a, b, m)
                        if value != direct or value < 0:
                            problems.append(
                                f"pair ({pi},{pj}) sample {k}: value {value}"
                            )
                else:
                    incomparable_pairs += 1
                    if not is_tnn(cm):
                        problems.append(f"pair ({pi},{pj}): counterexample not TNN")
                    elif evaluate_difference(a, b, cm) >= 0:
                        problems.append(f"pair ({pi},{pj}): difference not negative")
        return _collect(
            problems,
            f"{comparable_pairs} comparable and {incomparable_pairs} "
            "incomparable pairs, all certified or separated",
        )

    return _run("order oracle A4", body)


def check_graded_lattice() -> CheckResult:
    """Coverings, beta grading, and edge typing on A_4; type census on A_5."""

    def body() -> tuple[bool, str]:
        problems = []
        asms = enumerate_asms(4)
        m = len(asms)
        strict = [
            [asm_leq(asms[i], asms[j]) and i != j for j in range(m)]
            for i in range(m)
        ]
        covers_by_order = set()
        for i in range(m):
            for j in range(m):
                if not strict[i][j]:
                    continue
                if not any(strict[i][k] and strict[k][j] for k in range(m)):
                    covers_by_order.add((i, j))
        index = {a: i for i, a in enumerate(asms)}
        covers_by_points = {
            (index[lower], j)
            for j, upper in enumerate(asms)
            for lower in covered_by(upper)
        }
        if covers_by_order != covers_by_points:
            problems.append("covering relations differ from essential points")
        for i, j in covers_by_order:
            if beta(asms[j]) - beta(asms[i]) != 1:
                problems.append(f"cover ({i},{j}) does not step beta by 1")
        g = build_graph(4)
        for e in g.edges:
            src, dst = g.nodes[e.src], g.nodes[e.dst]
            if beta(dst) - beta(src) != e.rect.area:
                problems.append(f"edge {e}: beta jump is not the area")
            corners = tuple(
                src.entry(p, q) - dst.entry(p, q) for (p, q) in e.rect.corners()
            )
            if corners != (1, -1, -1, 1):
                problems.append(f"edge {e}: corner difference {corners}")
            if classify_edge(src, dst, e.rect) != e.edge_type:
                problems.append(f"edge {e}: reclassification disagrees")
        census: dict[int, int] = {}
        for a in enumerate_asms(5):
            for e in edges_from(a):
                census[e.edge_type] = census.get(e.edge_type, 0) + 1
        if census != A5_TYPE_CENSUS:
            problems.append(f"A5 type census differs: {census}")
        present = sorted(census)
        absent = sorted(set(range(1, 17)) - set(census))
        return _collect(
            problems,
            f"84 covers match essential points; {g.num_edges} A4 edges typed; "
            f"A5 types present {present}, absent {absent}",
        )

    return _run("graded lattice A4/A5", body)


def check_dodgson(seed: int = 0) -> CheckResult:
    """Condensation against a determinant oracle, and its q-analogue."""

    def body() -> tuple[bool, str]:
        problems = []
        rng = random.Random(seed)

        def draw(n: int):
            return rational_matrix(
                [
                    [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
                    for _ in range(n)
                ]
            )

        skipped = 0
        for n in (3, 4, 5):
            done = 0
            while done < 100:
                matrix = draw(n)
                try:
                    value = dodgson(matrix)
                except SingularInteriorError:
                    skipped += 1
                    continue
                if value != det(matrix.rows):
                    problems.append(f"n={n}: condensation != determinant")
                done += 1
        q_checked = 0
        for n in (2, 3, 4):
            for _ in range(100):
                report = q_dodgson_check(draw(n))
                if not report.passed:
                    problems.append(f"n={n}: q-identity failed")
                q_checked += 1
        return _collect(
            problems,
            f"300 numeric (skipped {skipped} singular interiors), "
            f"{q_checked} symbolic q-identities, zero tolerance",
        )

    return _run("dodgson and q-dodgson", body)


def check_fulton() -> CheckResult:
    """Fulton's essential set equals the 1x1 essential rectangles on S_5."""

    def body() -> tuple[bool, str]:
        problems = []
        for w in enumerate_permutations(5):
            if fulton_essential_set(w) != set(essential_points(permutation_to_asm(w))):
                problems.append(f"mismatch at {w}")
        return _collect(problems, "120 permutations, both definitions equal")

    return _run("fulton S5", body)


def check_sampling_scope() -> CheckResult:
    """The constructive sides carry the universally quantified claims.

    Statements over all TNN matrices or all q > 0 cannot be decided by
    sampling; the guarantees rest on certificates (comparable pairs) and
    explicit counterexamples (incomparable pairs), with sampling only as
    a falsification layer.  This check re-runs both constructive sides
    over every ordered pair of 3x3 ASMs.
    """

    def body() -> tuple[bool, str]:
        problems = []
        asms = enumerate_asms(3)
        for a in asms:
            for b in asms:
                if asm_leq(a, b):
                    verify_certificate(sfl_certificate(a, b), samples=2, seed=1)
                else:
                    cm, _ = counterexample_matrix(a, b)
                    if not is_tnn(cm) or evaluate_difference(a, b, cm) >= 0:
                        problems.append("counterexample failed")
        return _collect(
            problems,
            "universal claims carried by certificates/counterexamples; "
            "sampling is falsification only",
        )

    return _run("sampling scope note", body)


def run_all(seed: int = 0) -> tuple[CheckResult, ...]:
    """Run every check in order and return the results."""
    return (
        check_a3_reconstruction(),
        check_beta_table(),
        check_bq_four_ways(),
        check_order_oracle(seed=seed),
        check_graded_lattice(),
        check_dodgson(seed=seed),
        check_fulton(),
        check_sampling_scope(),
    )


ALL_CHECKS = {
    "a3": check_a3_reconstruction,
    "beta": check_beta_table,
    "bq": check_bq_four_ways,
    "order": check_order_oracle,
    "lattice": check_graded_lattice,
    "dodgson": check_dodgson,
    "fulton": check_fulton,
    "scope": check_sampling_scope,
}
