"""Command line interface.

Subcommands map one-to-one onto the library's capabilities:

    enumerate   stream or count all n x n ASMs
    graph       build the full edge graph, optionally as DOT
    leq         test the lattice order between two matrices
    beta        the rank statistic of one matrix
    chain       a saturated covering chain between two matrices
    certify     subtraction-free certificate, or a TNN counterexample
    scan        sample q-weighted locally-TNN matrices for violations
    bq          the signed generating function B_n(q), four ways
    dodgson     randomized checks of the condensation identities
    verify-all  run the package's end-to-end verification checks

Matrix arguments accept a file path (text or JSON format) or a
permutation literal such as ``4312``.  Exit codes: 0 success (and the
order holds where one is queried), 2 usage error, 3 the relation fails
or the pair is incomparable, 1 anything else that goes wrong.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .core import (
    Asm,
    AsmError,
    asm_from_json,
    asm_to_json_dict,
    format_asm_text,
    parse_asm_text,
    parse_permutation,
    permutation_to_asm,
)
from .enumeration import SizeLimitExceededError, count_asms, iter_asms
from .lattice import (
    IncomparableError,
    asm_leq,
    beta_checked,
    build_graph,
    covering_chain,
    export_dot,
)
from .polynomials import BQ_METHODS, SingularInteriorError, dodgson, q_dodgson_check
from .symbolic import certificate_to_json_dict, sfl_certificate, verify_certificate
from .tnn import (
    DEFAULT_Q_GRID,
    counterexample_matrix,
    det,
    evaluate_difference,
    qtnn_scan,
    rational_matrix,
)
from .verify import ALL_CHECKS, run_all


def _load_asm(spec: str) -> Asm:
    """Read a matrix from a file path or a permutation literal."""
    path = Path(spec)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            return asm_from_json(text)
        return parse_asm_text(text)
    try:
        return permutation_to_asm(parse_permutation(spec))
    except AsmError as exc:
        raise AsmError(
            f"{spec!r} is neither a readable file nor a permutation: {exc}"
        ) from exc


def _size_kw(args: argparse.Namespace) -> dict:
    if args.limit_override is None:
        return {}
    value = args.limit_override
    return {"size_limit": None if value <= 0 else value}


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> int:
    kw = _size_kw(args)
    if args.count_only:
        print(count_asms(args.n, **kw))
        return 0
    if args.json:
        print(json.dumps([asm_to_json_dict(a) for a in iter_asms(args.n, **kw)]))
        return 0
    for a in iter_asms(args.n, **kw):
        sys.stdout.write(format_asm_text(a) + "\n")
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    g = build_graph(args.n, **_size_kw(args))
    if args.json:
        payload = {
            "n": g.n,
            "nodes": [asm_to_json_dict(a) for a in g.nodes],
            "edges": [
                {
                    "src": e.src,
                    "dst": e.dst,
                    "type": e.edge_type,
                    "rect": [e.rect.i, e.rect.j, e.rect.k, e.rect.l],
                }
                for e in g.edges
            ],
        }
        print(json.dumps(payload))
        return 0
    dot = export_dot(g)
    if args.dot:
        Path(args.dot).write_text(dot, encoding="utf-8")
        print(f"{len(g.nodes)} nodes, {g.num_edges} edges -> {args.dot}")
    else:
        sys.stdout.write(dot)
    return 0


def cmd_leq(args: argparse.Namespace) -> int:
    holds = asm_leq(_load_asm(args.a), _load_asm(args.b))
    if args.json:
        print(json.dumps({"leq": holds}))
    else:
        print("true" if holds else "false")
    return 0 if holds else 3


def cmd_beta(args: argparse.Namespace) -> int:
    a = _load_asm(args.matrix)
    value = beta_checked(a)
    if args.json:
        print(json.dumps({"n": a.n, "beta": value}))
    else:
        print(value)
    return 0


def cmd_chain(args: argparse.Namespace) -> int:
    a, b = _load_asm(args.a), _load_asm(args.b)
    try:
        chain = covering_chain(a, b)
    except IncomparableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(
            json.dumps(
                {"length": len(chain), "chain": [asm_to_json_dict(x) for x in chain]}
            )
        )
    else:
        for x in chain:
            sys.stdout.write(format_asm_text(x) + "\n")
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    a, b = _load_asm(args.a), _load_asm(args.b)
    try:
        cert = sfl_certificate(a, b)
    except IncomparableError:
        matrix, witness = counterexample_matrix(a, b)
        value = evaluate_difference(a, b, matrix)
        if args.json:
            payload = {
                "result": "counterexample",
                "matrix": [[str(v) for v in row] for row in matrix.rows],
                "witness": list(witness),
                "value": str(value),
            }
            print(json.dumps(payload))
        else:
            print("COUNTEREXAMPLE")
            print(matrix)
            print(f"witness cell: {witness}")
            print(f"difference value: {value}")
        return 3
    verify_certificate(cert, seed=args.seed)
    doc = certificate_to_json_dict(cert)
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps(doc))
    else:
        print("CERTIFICATE")
        print(f"beta: {cert.beta_pair[0]} -> {cert.beta_pair[1]}")
        print(cert)
        if args.out:
            print(f"json -> {args.out}")
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    a, b = _load_asm(args.a), _load_asm(args.b)
    grid = (
        tuple(Fraction(tok) for tok in args.grid.split(","))
        if args.grid
        else DEFAULT_Q_GRID
    )
    report = qtnn_scan(a, b, q_grid=grid, samples=args.samples, seed=args.seed)
    if args.json:
        payload = {
            "comparable": report.comparable,
            "violations": report.has_violations,
            "points": [
                {
                    "q0": str(p.q0),
                    "samples": p.samples,
                    "violations": len(p.violations),
                }
                for p in report.results
            ],
        }
        print(json.dumps(payload))
    else:
        for p in report.results:
            print(f"q0={p.q0}: samples={p.samples} violations={len(p.violations)}")
        print(f"comparable: {'true' if report.comparable else 'false'}")
    return 0 if report.comparable else 3


def _call_bq(name: str, n: int, size_kw: dict):
    fn = BQ_METHODS[name]
    if size_kw and name in ("def", "qdet"):
        return fn(n, **size_kw)
    return fn(n)


def cmd_bq(args: argparse.Namespace) -> int:
    kw = _size_kw(args)
    names = list(BQ_METHODS) if args.method == "all" else [args.method]
    polys = {name: _call_bq(name, args.n, kw) for name in names}
    if len({str(p) for p in polys.values()}) != 1:
        print("error: the methods disagree", file=sys.stderr)
        return 1
    if args.json:
        poly = polys[names[0]]
        coeffs = {str(k): v for k, v in sorted(poly.coeffs_q().items())}
        print(json.dumps({"n": args.n, "coeffs": coeffs}))
    elif args.method == "all":
        for name in names:
            print(f"{name}: {polys[name]}")
    else:
        print(polys[args.method])
    return 0


def cmd_dodgson_verify(args: argparse.Namespace) -> int:
    if args.n < 2:
        print("error: condensation needs n >= 2", file=sys.stderr)
        return 2
    rng = random.Random(args.seed)
    numeric_ok = skipped = q_ok = failures = 0
    for _ in range(args.trials):
        m = rational_matrix(
            [
                [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(args.n)]
                for _ in range(args.n)
            ]
        )
        try:
            if dodgson(m) == det(m.rows):
                numeric_ok += 1
            else:
                failures += 1
        except SingularInteriorError:
            skipped += 1
        if q_dodgson_check(m).passed:
            q_ok += 1
        else:
            failures += 1
    summary = {
        "n": args.n,
        "trials": args.trials,
        "numeric_ok": numeric_ok,
        "singular_skipped": skipped,
        "q_ok": q_ok,
        "failures": failures,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(" ".join(f"{k}={v}" for k, v in summary.items()))
    return 0 if failures == 0 else 1


def cmd_verify_all(args: argparse.Namespace) -> int:
    if args.only:
        names = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = [s for s in names if s not in ALL_CHECKS]
        if unknown:
            known = ", ".join(ALL_CHECKS)
            print(f"error: unknown checks {unknown}; choose from {known}", file=sys.stderr)
            return 2
        results = [ALL_CHECKS[name]() for name in names]
    else:
        results = list(run_all(seed=args.seed))
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "details": r.details,
                        "seconds": round(r.seconds, 3),
                    }
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _common(seed_required: bool = False) -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--json", action="store_true", help="emit JSON instead of text")
    c.add_argument(
        "--seed",
        type=int,
        required=seed_required,
        default=None if seed_required else 0,
        help="seed for any randomized step" + (" (required)" if seed_required else ""),
    )
    c.add_argument(
        "--limit-override",
        type=int,
        default=None,
        metavar="N",
        help="replace the built-in size guard (0 removes it entirely)",
    )
    return c


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmgraph",
        description="alternating sign matrices: lattice, certificates, polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "enumerate", parents=[_common()], help="stream or count all n x n ASMs"
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--count-only", action="store_true", help="print only the count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "graph", parents=[_common()], help="the full n x n edge graph, DOT by default"
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--dot", metavar="PATH", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("leq", parents=[_common()], help="is A below B in the order?")
    p.add_argument("a", help="matrix file or permutation literal")
    p.add_argument("b", help="matrix file or permutation literal")
    p.set_defaults(func=cmd_leq)

    p = sub.add_parser("beta", parents=[_common()], help="the rank statistic of A")
    p.add_argument("matrix", help="matrix file or permutation literal")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser(
        "chain", parents=[_common()], help="a saturated covering chain from A to B"
    )
    p.add_argument("a", help="matrix file or permutation literal")
    p.add_argument("b", help="matrix file or permutation literal")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser(
        "certify",
        parents=[_common()],
        help="subtraction-free certificate for A <= B, or a counterexample",
    )
    p.add_argument("a", help="matrix file or permutation literal")
    p.add_argument("b", help="matrix file or permutation literal")
    p.add_argument("--out", metavar="PATH", help="also write the certificate JSON here")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser(
        "scan",
        parents=[_common(seed_required=True)],
        help="sample q-weighted locally-TNN matrices for sign violations",
    )
    p.add_argument("a", help="matrix file or permutation literal")
    p.add_argument("b", help="matrix file or permutation literal")
    p.add_argument(
        "--grid",
        metavar="Q0,...",
        help="comma-separated rational grid, default 1/4,1,4",
    )
    p.add_argument("--samples", type=int, default=20, help="samples per grid point")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser(
        "bq", parents=[_common()], help="the signed generating function B_n(q)"
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument(
        "--method",
        choices=sorted(BQ_METHODS) + ["all"],
        default="def",
        help="which evaluation to use",
    )
    p.set_defaults(func=cmd_bq)

    p = sub.add_parser("dodgson", help="randomized condensation checks")
    dsub = p.add_subparsers(dest="dodgson_command", required=True)
    pv = dsub.add_parser(
        "verify",
        parents=[_common(seed_required=True)],
        help="check the identity and its q-analogue on random matrices",
    )
    pv.add_argument("--n", type=int, required=True, help="matrix size")
    pv.add_argument("--trials", type=int, default=100, help="matrices to draw")
    pv.set_defaults(func=cmd_dodgson_verify)

    p = sub.add_parser(
        "verify-all", parents=[_common()], help="run the end-to-end checks"
    )
    p.add_argument(
        "--only",
        metavar="NAME,...",
        help="run a subset: " + ", ".join(ALL_CHECKS),
    )
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (AsmError, SizeLimitExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
