"""The ASM order, essential rectangles, and the ASM graph.

ASMs of size n are partially ordered by reverse entrywise comparison of
corner-sum matrices: A <= B iff A~(i, j) >= B~(i, j) everywhere.  On
permutation matrices this is the (strong) Bruhat order, and the full
poset is the smallest lattice containing it; the identity matrix is the
unique minimum and the reverse identity the unique maximum.

The order is graded by the bigrassmannian statistic

    beta(A) = sum_{i,j} min(i, j) - sum_{i,j} A~(i, j)
            = (1/2) sum_{i,j} (i - j)^2 A(i, j)
            = #{bigrassmannian permutations B with B <= A},

computed here by all three formulas as mutual cross-checks.

A rectangle R = rows [i, j) x columns [k, l) is *essential* for A when
the corner-sum matrix can be increased by 1 on exactly the cells of R
and stay a corner-sum matrix, and *dual essential* when it can be
decreased likewise.  Adding moves down the order, subtracting moves up.
The directed ASM graph has an edge A -> B whenever B is obtained from A
by one such subtraction; its edges fall into sixteen types according to
the four entries of the target at the rectangle's corner positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .core import (
    Asm,
    AsmError,
    CornerSum,
    Permutation,
    corner_sum,
    from_corner_sum,
    permutation_to_asm,
)
from .enumeration import enumerate_asms, enumerate_permutations


class SizeMismatchError(AsmError):
    """Operands have different sizes."""


class NotAnEdgeError(AsmError):
    """The given pair/rectangle is not an edge of the ASM graph."""


class IncomparableError(AsmError):
    """The two ASMs are not related in the order."""


@dataclass(frozen=True, order=True)
class Rect:
    """Rectangle R with corner rows i < j and corner columns k < l.

    Membership cells are (p, q) with i <= p < j and k <= q < l; the four
    corner *positions* (i,k), (i,l), (j,k), (j,l) generally lie outside
    the membership cells.
    """

    i: int
    j: int
    k: int
    l: int

    def __post_init__(self):
        if not (1 <= self.i < self.j and 1 <= self.k < self.l):
            raise ValueError(f"need i < j and k < l, got {self}")

    @property
    def area(self) -> int:
        return (self.j - self.i) * (self.l - self.k)

    def is_point(self) -> bool:
        """1x1 rectangles; these give the covering relations."""
        return self.j == self.i + 1 and self.l == self.k + 1

    def cells(self) -> Iterable[tuple[int, int]]:
        for p in range(self.i, self.j):
            for q in range(self.k, self.l):
                yield (p, q)

    def corners(self) -> tuple[tuple[int, int], ...]:
        return ((self.i, self.k), (self.i, self.l), (self.j, self.k), (self.j, self.l))


def _same_size(a: Asm, b: Asm) -> int:
    if a.n != b.n:
        raise SizeMismatchError(f"sizes differ: {a.n} vs {b.n}")
    return a.n


def is_essential(a: Asm, r: Rect) -> bool:
    """Can the corner sums be raised by 1 on the cells of r?"""
    if r.j > a.n or r.l > a.n:
        return False
    c = corner_sum(a)
    for p in range(r.i, r.j):
        if c.value(p, r.k) != c.value(p, r.k - 1):
            return False
        if c.value(p, r.l) != c.value(p, r.l - 1) + 1:
            return False
    for q in range(r.k, r.l):
        if c.value(r.i, q) != c.value(r.i - 1, q):
            return False
        if c.value(r.j, q) != c.value(r.j - 1, q) + 1:
            return False
    return True


def is_dual_essential(a: Asm, r: Rect) -> bool:
    """Can the corner sums be lowered by 1 on the cells of r?"""
    if r.j > a.n or r.l > a.n:
        return False
    c = corner_sum(a)
    for p in range(r.i, r.j):
        if c.value(p, r.k) != c.value(p, r.k - 1) + 1:
            return False
        if c.value(p, r.l) != c.value(p, r.l - 1):
            return False
    for q in range(r.k, r.l):
        if c.value(r.i, q) != c.value(r.i - 1, q) + 1:
            return False
        if c.value(r.j, q) != c.value(r.j - 1, q):
            return False
    return True


def _all_rects(n: int) -> Iterable[Rect]:
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for k in range(1, n):
                for l in range(k + 1, n + 1):
                    yield Rect(i, j, k, l)


def essential_rects(a: Asm) -> set[Rect]:
    return {r for r in _all_rects(a.n) if is_essential(a, r)}


def dual_essential_rects(a: Asm) -> set[Rect]:
    return {r for r in _all_rects(a.n) if is_dual_essential(a, r)}


def apply_rect(a: Asm, r: Rect) -> Asm:
    """Apply the rectangular operator for r to a.

    Adds the cell indicator of r to the corner sums if r is essential
    for a (moving down the order), subtracts it if r is dual essential
    (moving up), and otherwise returns a unchanged.
    """
    if is_essential(a, r):
        delta = 1
    elif is_dual_essential(a, r):
        delta = -1
    else:
        return a
    c = corner_sum(a)
    rows = [list(row) for row in c.entries]
    for (p, q) in r.cells():
        rows[p - 1][q - 1] += delta
    return from_corner_sum(rows)


# ---------------------------------------------------------------------------
# the sixteen edge types
# ---------------------------------------------------------------------------

#: Corner patterns of the sixteen edge types.  Keyed by the entries of
#: the *target* matrix B at the rectangle's four corner positions, in
#: the order (B(i,k), B(i,l), B(j,k), B(j,l)); the matching source
#: entries are always obtained by adding (1, -1, -1, 1).
EDGE_TYPE_TABLE: tuple[tuple[int, tuple[int, int, int, int], tuple[int, int, int, int]], ...] = (
    (1, (0, 1, 1, 0), (1, 0, 0, 1)),
    (2, (0, 0, 1, 0), (1, -1, 0, 1)),
    (3, (0, 1, 0, 0), (1, 0, -1, 1)),
    (4, (0, 0, 0, 0), (1, -1, -1, 1)),
    (5, (0, 1, 1, -1), (1, 0, 0, 0)),
    (6, (0, 0, 1, -1), (1, -1, 0, 0)),
    (7, (0, 1, 0, -1), (1, 0, -1, 0)),
    (8, (0, 0, 0, -1), (1, -1, -1, 0)),
    (9, (-1, 1, 1, 0), (0, 0, 0, 1)),
    (10, (-1, 0, 1, 0), (0, -1, 0, 1)),
    (11, (-1, 1, 0, 0), (0, 0, -1, 1)),
    (12, (-1, 0, 0, 0), (0, -1, -1, 1)),
    (13, (-1, 1, 1, -1), (0, 0, 0, 0)),
    (14, (-1, 0, 1, -1), (0, -1, 0, 0)),
    (15, (-1, 1, 0, -1), (0, 0, -1, 0)),
    (16, (-1, 0, 0, -1), (0, -1, -1, 0)),
)

_TYPE_BY_TARGET_CORNERS = {b: t for (t, b, _a) in EDGE_TYPE_TABLE}


def _verify_edge_type_table() -> None:
    """Consistency of the static table, run at import time."""
    seen = set()
    for t, b, a in EDGE_TYPE_TABLE:
        assert tuple(x - y for x, y in zip(a, b)) == (1, -1, -1, 1), (t, a, b)
        assert b[0] in (-1, 0) and b[3] in (-1, 0), t
        assert b[1] in (0, 1) and b[2] in (0, 1), t
        seen.add(b)
    assert len(seen) == 16


_verify_edge_type_table()


@dataclass(frozen=True)
class Edge:
    """A directed edge source -> target of the ASM graph."""

    source: Asm
    target: Asm
    rect: Rect
    edge_type: int

    @property
    def beta_jump(self) -> int:
        return self.rect.area


def classify_edge(source: Asm, target: Asm, r: Rect) -> int:
    """Edge type (1..16) of source -> target along rectangle r.

    Raises NotAnEdgeError unless the two matrices agree everywhere
    except the four corner positions of r, where the source minus
    target entries must be (1, -1, -1, 1).  Under those conditions the
    corner-sum matrices differ by the cell indicator of r, so the pair
    really is a graph edge and the type is read off the target corners.
    """
    n = _same_size(source, target)
    if r.j > n or r.l > n:
        raise NotAnEdgeError(f"{r} does not fit in size {n}")
    corners = set(r.corners())
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = source.entry(i, j) - target.entry(i, j)
            if (i, j) in corners:
                continue
            if d != 0:
                raise NotAnEdgeError(f"entries differ at ({i},{j}) outside corners")
    diff = tuple(source.entry(p, q) - target.entry(p, q) for (p, q) in r.corners())
    if diff != (1, -1, -1, 1):
        raise NotAnEdgeError(f"corner difference {diff} is not (1, -1, -1, 1)")
    key = tuple(target.entry(p, q) for (p, q) in r.corners())
    return _TYPE_BY_TARGET_CORNERS[key]


def edge_between(source: Asm, target: Asm) -> Edge:
    """Recover the unique edge source -> target, or raise NotAnEdgeError.

    The rectangle is found from the support of A~(source) - A~(target),
    which for an edge is the cell indicator of the rectangle.
    """
    n = _same_size(source, target)
    cs, ct = corner_sum(source), corner_sum(target)
    cells = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = cs.value(i, j) - ct.value(i, j)
            if d == 1:
                cells.append((i, j))
            elif d != 0:
                raise NotAnEdgeError(f"corner-sum difference {d} at ({i},{j})")
    if not cells:
        raise NotAnEdgeError("matrices are equal")
    rows = {p for p, _ in cells}
    cols = {q for _, q in cells}
    i, j = min(rows), max(rows) + 1
    k, l = min(cols), max(cols) + 1
    if len(cells) != (j - i) * (l - k):
        raise NotAnEdgeError("difference support is not a full rectangle")
    r = Rect(i, j, k, l)
    return Edge(source, target, r, classify_edge(source, target, r))


def edges_from(a: Asm) -> list[Edge]:
    """All edges of the ASM graph leaving a, sorted by rectangle."""
    out = []
    for r in sorted(dual_essential_rects(a)):
        target = apply_rect(a, r)
        out.append(Edge(a, target, r, classify_edge(a, target, r)))
    return out


# ---------------------------------------------------------------------------
# order and rank
# ---------------------------------------------------------------------------

def asm_leq(a: Asm, b: Asm) -> bool:
    """a <= b in the ASM order (reverse corner-sum dominance)."""
    n = _same_size(a, b)
    ca, cb = corner_sum(a), corner_sum(b)
    return all(
        ca.entries[i][j] >= cb.entries[i][j] for i in range(n) for j in range(n)
    )


@lru_cache(maxsize=None)
def beta(a: Asm) -> int:
    """The bigrassmannian statistic, via corner sums."""
    n = a.n
    c = corner_sum(a)
    total = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total += min(i, j) - c.value(i, j)
    return total


beta_corner_sum = beta


def beta_entry_weighted(a: Asm) -> int:
    """beta as half the (i - j)^2-weighted entry sum."""
    s = 0
    for i in range(1, a.n + 1):
        for j in range(1, a.n + 1):
            s += (i - j) * (i - j) * a.entry(i, j)
    if s % 2:
        raise AsmError(f"odd weighted sum {s}; input is not an ASM")
    return s // 2


def beta_bigrassmannian_count(a: Asm) -> int:
    """beta as the number of bigrassmannian permutations below a."""
    return sum(1 for b in _bigrassmannian_asms(a.n) if asm_leq(b, a))


def beta_checked(a: Asm) -> int:
    """beta by all three formulas, insisting that they agree."""
    v1, v2, v3 = beta(a), beta_entry_weighted(a), beta_bigrassmannian_count(a)
    if not (v1 == v2 == v3):
        raise AsmError(f"beta evaluators disagree: {v1}, {v2}, {v3}")
    return v1


def beta_permutation(w: Permutation) -> int:
    """beta of a permutation matrix: half the sum of (i - w(i))^2."""
    return sum((i - w(i)) ** 2 for i in range(1, w.n + 1)) // 2


def is_bigrassmannian(w: Permutation) -> bool:
    """Exactly one descent in w and exactly one in its inverse."""
    def descents(u: Permutation) -> int:
        return sum(1 for i in range(1, u.n) if u(i) > u(i + 1))

    return descents(w) == 1 and descents(w.inverse()) == 1


@lru_cache(maxsize=None)
def _bigrassmannian_asms(n: int) -> tuple[Asm, ...]:
    return tuple(
        permutation_to_asm(w)
        for w in enumerate_permutations(n)
        if is_bigrassmannian(w)
    )


@lru_cache(maxsize=None)
def essential_points(a: Asm) -> frozenset[tuple[int, int]]:
    """Positions (i, j) whose 1x1 rectangle is essential for a.

    These biject with the elements covered by a; an ASM is a
    bigrassmannian permutation matrix iff it has exactly one.
    """
    n = a.n
    return frozenset(
        (i, j)
        for i in range(1, n)
        for j in range(1, n)
        if is_essential(a, Rect(i, i + 1, j, j + 1))
    )


def fulton_essential_set(w: Permutation) -> set[tuple[int, int]]:
    """Fulton's essential set of a permutation.

    (i, j) qualifies when i < w^-1(j), j < w(i), w(i+1) <= j and
    w^-1(j+1) <= i; for permutation matrices this coincides with
    :func:`essential_points`.
    """
    winv = w.inverse()
    n = w.n
    return {
        (i, j)
        for i in range(1, n)
        for j in range(1, n)
        if i < winv(j) and j < w(i) and w(i + 1) <= j and winv(j + 1) <= i
    }


def covered_by(a: Asm) -> list[Asm]:
    """Elements covered by a, one per essential point, in lex point order."""
    return [
        apply_rect(a, Rect(i, i + 1, j, j + 1))
        for (i, j) in sorted(essential_points(a))
    ]


def covering_chain(a: Asm, b: Asm) -> list[Asm]:
    """A saturated chain a = A_0 < A_1 < ... < A_k = b, k = beta(b) - beta(a).

    Deterministic: walking down from b, each step moves to the covered
    element for the lexicographically smallest essential point of the
    current upper element that stays above a.  Raises IncomparableError
    unless a <= b.
    """
    _same_size(a, b)
    if not asm_leq(a, b):
        raise IncomparableError("chain requires a <= b")
    chain = [b]
    current = b
    while current != a:
        for (i, j) in sorted(essential_points(current)):
            lower = apply_rect(current, Rect(i, i + 1, j, j + 1))
            if asm_leq(a, lower):
                current = lower
                chain.append(current)
                break
        else:
            raise AsmError("no covering step stays above a; order is broken")
    chain.reverse()
    return chain


# ---------------------------------------------------------------------------
# the full graph on all ASMs of one size
# ---------------------------------------------------------------------------

class GraphEdge(NamedTuple):
    """Edge of a built graph, endpoints as canonical node indices."""

    src: int
    dst: int
    rect: Rect
    edge_type: int


@dataclass(frozen=True)
class AsmGraph:
    """The ASM graph on all n x n ASMs.

    Nodes are in canonical enumeration order; edge endpoints are node
    indices into that list.
    """

    n: int
    nodes: tuple[Asm, ...]
    edges: tuple[GraphEdge, ...]

    def index_of(self, a: Asm) -> int:
        return self.nodes.index(a)

    def successors(self, idx: int) -> list[int]:
        return [e.dst for e in self.edges if e.src == idx]

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def build_graph(n: int, *, size_limit: int | None = 7) -> AsmGraph:
    """Build the complete ASM graph for size n."""
    nodes = tuple(enumerate_asms(n, size_limit=size_limit))
    index = {a: i for i, a in enumerate(nodes)}
    edges = []
    for i, a in enumerate(nodes):
        for e in edges_from(a):
            edges.append(GraphEdge(i, index[e.target], e.rect, e.edge_type))
    return AsmGraph(n, nodes, tuple(edges))


#: Fixed palette for the sixteen edge types in DOT output.
EDGE_TYPE_COLORS = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231",
    "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#fabed4", "#469990", "#dcbeff", "#9a6324",
    "#800000", "#aaffc3", "#808000", "#000075",
)


def export_dot(
    g: AsmGraph,
    *,
    name: str = "asm_graph",
    rank_by_beta: bool = True,
    color_by_type: bool = True,
) -> str:
    """Render the graph in DOT format.

    Node labels are "index:beta"; edges are labelled with their type and
    optionally coloured by it; nodes of equal beta share a rank so the
    drawing is layered by the grading.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box];']
    betas = [beta(a) for a in g.nodes]
    if rank_by_beta:
        for level in sorted(set(betas)):
            members = " ".join(f"n{i};" for i, b in enumerate(betas) if b == level)
            lines.append(f"  {{ rank=same; {members} }}")
    for i, b in enumerate(betas):
        lines.append(f'  n{i} [label="{i}:{b}"];')
    for e in g.edges:
        attrs = [f'label="{e.edge_type}"']
        if color_by_type:
            attrs.append(f'color="{EDGE_TYPE_COLORS[e.edge_type - 1]}"')
        lines.append(f"  n{e.src} -> n{e.dst} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
