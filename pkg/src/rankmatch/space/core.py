"""Affine spaces ``A + span(B_1, ..., B_d)``, leading cells and the graph G_S."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import total_ordering
from itertools import product

from ..errors import HypothesisViolation
from ..field import FieldMismatchError, FieldSpec
from ..graph import Edge, LoopGraph, Matching, max_matching_witness
from ..matrix import (
    Matrix,
    combine,
    is_alternating,
    is_symmetric,
    is_weakly_symmetric,
    principal_submatrix,
)

log = logging.getLogger(__name__)

KINDS = ("weakly_symmetric", "symmetric", "alternating", "general")

_PREDICATES = {
    "weakly_symmetric": is_weakly_symmetric,
    "symmetric": is_symmetric,
    "alternating": is_alternating,
    "general": lambda A: True,
}


@total_ordering
@dataclass(frozen=True)
class Cell:
    """An upper-triangle position (i, j), i <= j, 1-based; ordered colexicographically."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.j:
            raise ValueError(f"cell needs 1 <= i <= j, got ({self.i}, {self.j})")

    def __lt__(self, other: Cell) -> bool:
        return (self.j, self.i) < (other.j, other.i)

    def folded(self) -> Edge:
        return (self.i,) if self.i == self.j else (self.i, self.j)

    def __iter__(self):
        return iter((self.i, self.j))


def colex_cmp(c1: Cell, c2: Cell) -> int:
    """-1, 0 or 1 as c1 precedes, equals or follows c2 (compare j, then i)."""
    a, b = (c1.j, c1.i), (c2.j, c2.i)
    return (a > b) - (a < b)


def folded(c: Cell) -> Edge:
    return c.folded()


def upper_cells(n: int) -> list[Cell]:
    return sorted(Cell(i, j) for j in range(1, n + 1) for i in range(1, j + 1))


def leading_cell(B: Matrix) -> Cell:
    """q(B): the colex-largest upper cell holding a nonzero entry."""
    B._require_square()
    rows = B.rows
    for j in range(B.n_rows, 0, -1):
        for i in range(j, 0, -1):
            if rows[i - 1][j - 1]:
                return Cell(i, j)
    if B.is_zero():
        raise ValueError("the zero matrix has no leading cell")
    raise HypothesisViolation("nonzero matrix with zero upper triangle is not weakly symmetric", member=B)


@dataclass(frozen=True)
class AffineSpace:
    spec: FieldSpec
    n: int
    base: Matrix
    basis: tuple[Matrix, ...]
    kind: str = "weakly_symmetric"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "basis", tuple(self.basis))
        for M in (self.base, *self.basis):
            if M.spec != self.spec:
                raise FieldMismatchError(f"{M.spec} matrix in a {self.spec} space")
            if (M.n_rows, M.n_cols) != (self.n, self.n):
                raise ValueError(f"expected {self.n}x{self.n} matrices, got {M.n_rows}x{M.n_cols}")
        pred = _PREDICATES[self.kind]
        for r, B in enumerate(self.basis, 1):
            if not pred(B):
                raise HypothesisViolation(f"basis matrix B {r} is not {self.kind}", member=B, index=r)

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def d(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.spec.p ** self.d

    def member(self, coeffs: Sequence[int]) -> Matrix:
        if len(coeffs) != self.d:
            raise ValueError(f"expected {self.d} coefficients, got {len(coeffs)}")
        return combine(self.base, coeffs, self.basis)

    def members(self) -> Iterator[Matrix]:
        """All p**d members, coefficient vectors in lexicographic order."""
        for coeffs in product(range(self.spec.p), repeat=self.d):
            yield self.member(coeffs)

    def leading_cells(self) -> list[Cell]:
        return [leading_cell(B) for B in self.basis]

    def with_basis(self, basis: Sequence[Matrix], base: Matrix | None = None) -> AffineSpace:
        return AffineSpace(self.spec, self.n, self.base if base is None else base, tuple(basis), self.kind)


def canonicalize(S: AffineSpace) -> AffineSpace:
    """Equivalent basis with distinct, strictly colex-decreasing leading cells.

    Upper cells are visited in descending colex order and used as pivot
    positions; each pivot is scaled to 1 and cleared from every other basis
    element.  Dependent generators reduce to zero and are dropped.
    """
    p = S.spec.p
    n = S.n
    vecs = [list(B.flat()) for B in S.basis]
    pivoted: list[list[int]] = []
    free = vecs
    for cell in reversed(upper_cells(n)):
        pos = (cell.i - 1) * n + (cell.j - 1)
        k = next((k for k, v in enumerate(free) if v[pos]), None)
        if k is None:
            continue
        v = free.pop(k)
        inv = pow(v[pos], -1, p)
        v = [x * inv % p for x in v]
        for w in (*pivoted, *free):
            f = w[pos]
            if f:
                for idx, x in enumerate(v):
                    if x:
                        w[idx] = (w[idx] - f * x) % p
        pivoted.append(v)
    leftovers = [v for v in free if any(v)]
    if leftovers:
        offender = Matrix(S.spec, [leftovers[0][r * n:(r + 1) * n] for r in range(n)])
        raise HypothesisViolation(
            "span contains a nonzero matrix with zero upper triangle (not weakly symmetric)",
            member=offender,
        )
    if len(pivoted) < S.d:
        log.warning("dependent basis: dimension reduced from %d to %d", S.d, len(pivoted))
    basis = [Matrix(S.spec, [v[r * n:(r + 1) * n] for r in range(n)]) for v in pivoted]
    return S.with_basis(basis)


def is_canonical(S: AffineSpace) -> bool:
    try:
        cells = S.leading_cells()
    except ValueError:
        return False
    return all(a > b for a, b in zip(cells, cells[1:]))


def leading_graph(S: AffineSpace) -> LoopGraph:
    """G_S: the folded leading cells of a canonical basis."""
    if not is_canonical(S):
        S = canonicalize(S)
    return LoopGraph(S.n, [c.folded() for c in S.leading_cells()])


@dataclass(frozen=True)
class MatchingSelection:
    """A maximum matching of G_S and, per edge, the basis index realising it."""

    matching: Matching
    chosen: tuple[int, ...]
    deltas: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.chosen)

    @property
    def order(self) -> int:
        return sum(self.deltas)


def select_matching(S: AffineSpace, matching: Matching | None = None) -> MatchingSelection:
    """Pick basis elements whose folded leading cells form a maximum matching of G_S.

    ``S`` must have pairwise distinct leading cells (e.g. be canonical);
    ``chosen`` holds 0-based indices into ``S.basis``.
    """
    cells = S.leading_cells()
    by_edge = {c.folded(): r for r, c in enumerate(cells)}
    if len(by_edge) != len(cells):
        raise ValueError("leading cells are not distinct; canonicalize the space first")
    if matching is None:
        matching = max_matching_witness(LoopGraph(S.n, by_edge))
    chosen = tuple(by_edge[e] for e in matching.edges)
    return MatchingSelection(matching, chosen, tuple(len(e) for e in matching.edges))


def restrict(S: AffineSpace, sel: MatchingSelection) -> tuple[AffineSpace, MatchingSelection]:
    """Principal restriction to the matched vertices, keeping only the chosen generators."""
    verts = sel.matching.vertices
    if not verts:
        raise ValueError("cannot restrict to an empty matching")
    relabel = {v: r for r, v in enumerate(verts, 1)}
    base = principal_submatrix(S.base, verts)
    basis = [principal_submatrix(S.basis[c], verts) for c in sel.chosen]
    R = AffineSpace(S.spec, len(verts), base, tuple(basis), S.kind)
    edges = tuple(tuple(relabel[v] for v in e) for e in sel.matching.edges)
    return R, MatchingSelection(Matching(edges), tuple(range(sel.t)), sel.deltas)
