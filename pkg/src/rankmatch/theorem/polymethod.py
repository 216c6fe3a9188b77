"""Symbolic det/Pfaffian polynomials of ``A + sum x_i B_i`` and grid witness searches."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from ..errors import HypothesisViolation
from ..field import FieldElem
from ..graph import Matching
from ..matrix import (
    Matrix,
    det,
    is_alternating,
    matching_sign,
    perfect_matchings,
    pfaffian_elimination,
    rank,
)
from ..space import (
    AffineSpace,
    MatchingSelection,
    canonicalize,
    is_canonical,
    leading_cell,
    restrict,
    select_matching,
)
from .polynomial import Polynomial

DET_POLY_MAX_ORDER = 7
PF_POLY_MAX_ORDER = 10


class WitnessNotFound(RuntimeError):
    """The grid search exhausted its domain without a nonsingular restriction."""


@dataclass(frozen=True)
class WitnessResult:
    point: tuple[int, ...]
    matrix: Matrix
    achieved_rank: int
    search_size: int
    target: int
    selection: MatchingSelection | None = None
    coefficients: tuple[int, ...] = ()


def _forms(S: AffineSpace, sel: MatchingSelection) -> list[list[Polynomial]]:
    """Entry (i, j) of ``A + sum_r x_r B_{chosen[r]}`` as a linear polynomial."""
    chosen = [S.basis[c] for c in sel.chosen]
    return [
        [Polynomial.linear(S.spec, S.base.rows[i][j], [B.rows[i][j] for B in chosen]) for j in range(S.n)]
        for i in range(S.n)
    ]


def det_polynomial(S: AffineSpace, sel: MatchingSelection) -> Polynomial:
    """``det(A + sum_r x_r B_{chosen[r]})`` by Leibniz expansion.

    Permutations are walked row by row so partial products are shared and a
    zero entry prunes the whole subtree.
    """
    n = S.n
    if n > DET_POLY_MAX_ORDER:
        raise ValueError(f"order {n} exceeds {DET_POLY_MAX_ORDER} for symbolic expansion")
    forms = _forms(S, sel)
    total = Polynomial(S.spec, sel.t)

    def walk(row: int, used: int, parity: int, acc: Polynomial) -> None:
        nonlocal total
        if row == n:
            total = total + (acc if parity == 0 else -acc)
            return
        for col in range(n):
            if used >> col & 1:
                continue
            entry = forms[row][col]
            if entry.is_zero():
                continue
            nxt = acc * entry
            if nxt.is_zero():
                continue
            # columns already used to the right of col are inversions
            inversions = bin(used >> (col + 1)).count("1")
            walk(row + 1, used | 1 << col, parity ^ (inversions & 1), nxt)

    walk(0, 0, 0, Polynomial.constant(S.spec, sel.t, 1))
    return total


def _require_alternating(S: AffineSpace, mats) -> None:
    for M in mats:
        if not is_alternating(M):
            raise HypothesisViolation("space is not an affine space of alternating matrices", member=M)


def pf_polynomial(S: AffineSpace, sel: MatchingSelection) -> Polynomial:
    """``pf(A + sum_r x_r B_{chosen[r]})`` as the signed sum over perfect matchings."""
    n = S.n
    if n % 2:
        raise ValueError(f"Pfaffian needs even order, got {n}")
    if n > PF_POLY_MAX_ORDER:
        raise ValueError(f"order {n} exceeds {PF_POLY_MAX_ORDER} for symbolic expansion")
    _require_alternating(S, [S.base, *(S.basis[c] for c in sel.chosen)])
    forms = _forms(S, sel)
    total = Polynomial(S.spec, sel.t)
    for M in perfect_matchings(list(range(n))):
        term = Polynomial.constant(S.spec, sel.t, matching_sign(M))
        for k, l in M:
            term = term * forms[k][l]
            if term.is_zero():
                break
        total = total + term
    return total


def coeff_check_prop1(S: AffineSpace, sel: MatchingSelection) -> FieldElem:
    """Coefficient of ``prod x_r^{delta_r}`` in the determinant polynomial.

    ``sel`` must be a perfect matching of the (restricted) space.
    """
    if sel.order != S.n:
        raise ValueError(f"selection covers {sel.order} of {S.n} vertices; restrict the space first")
    return det_polynomial(S, sel).coefficient(sel.deltas)


def colex_sorted(S: AffineSpace, sel: MatchingSelection) -> tuple[MatchingSelection, tuple[int, ...]]:
    """Reorder a selection so the chosen leading cells increase colexicographically.

    Returns the new selection and the permutation applied (new position r
    holds old position ``perm[r]``).
    """
    cells = [leading_cell(S.basis[c]) for c in sel.chosen]
    perm = tuple(sorted(range(sel.t), key=cells.__getitem__))
    new = MatchingSelection(
        Matching(tuple(sel.matching.edges[r] for r in perm)),
        tuple(sel.chosen[r] for r in perm),
        tuple(sel.deltas[r] for r in perm),
    )
    return new, perm


def pf_closed_form(S: AffineSpace, sel: MatchingSelection) -> FieldElem:
    """theta(M_0) times the product of the chosen generators' leading entries."""
    sel, _ = colex_sorted(S, sel)
    p = S.spec.p
    cells = [leading_cell(S.basis[c]) for c in sel.chosen]
    leading = prod(S.basis[c].rows[cell.i - 1][cell.j - 1] for c, cell in zip(sel.chosen, cells)) % p
    return S.spec(matching_sign([(cell.i, cell.j) for cell in cells]) * leading)


def coeff_check_pf(S: AffineSpace, sel: MatchingSelection) -> FieldElem:
    """Coefficient of ``x_1 ... x_t`` in the Pfaffian polynomial, basis sorted colex-ascending."""
    if 2 * sel.t != S.n or sel.order != S.n:
        raise ValueError("selection must be a perfect matching of the restricted space")
    sel, _ = colex_sorted(S, sel)
    return pf_polynomial(S, sel).coefficient((1,) * sel.t)


def _lift(canon: AffineSpace, sel: MatchingSelection, point: tuple[int, ...]) -> tuple[int, ...]:
    coeffs = [0] * canon.d
    for c, lam in zip(sel.chosen, point):
        coeffs[c] = lam
    return tuple(coeffs)


def _trivial_witness(canon: AffineSpace) -> WitnessResult:
    M = canon.base
    return WitnessResult((), M, rank(M), 1, 0, None, (0,) * canon.d)


def witness_search_ws(S: AffineSpace) -> WitnessResult:
    """Find a member of rank >= mu(G_S) on the grid prod {0..delta_i}.

    Needs p >= 3: a loop edge (delta_i = 2) requires three grid values.
    """
    if S.spec.p < 3:
        raise HypothesisViolation(f"weakly symmetric witness search needs |F| >= 3, got GF({S.spec.p})")
    canon = S if is_canonical(S) else canonicalize(S)
    sel = select_matching(canon)
    if not sel.t:
        return _trivial_witness(canon)
    R, rsel = restrict(canon, sel)
    count = 0
    for point in product(*(range(delta + 1) for delta in rsel.deltas)):
        count += 1
        if det(R.member(point)):
            coeffs = _lift(canon, sel, point)
            M = canon.member(coeffs)
            return WitnessResult(point, M, rank(M), count, sel.order, sel, coeffs)
    raise WitnessNotFound(f"no nonsingular restriction on the {count}-point grid")


def witness_search_alt(S: AffineSpace) -> WitnessResult:
    """Find a member of rank >= mu(G_S) with coefficients in {0, 1} (any field)."""
    _require_alternating(S, [S.base, *S.basis])
    canon = S if is_canonical(S) else canonicalize(S)
    sel = select_matching(canon)
    if not sel.t:
        return _trivial_witness(canon)
    R, rsel = restrict(canon, sel)
    count = 0
    for point in product((0, 1), repeat=rsel.t):
        count += 1
        if pfaffian_elimination(R.member(point)):
            coeffs = _lift(canon, sel, point)
            M = canon.member(coeffs)
            return WitnessResult(point, M, rank(M), count, sel.order, sel, coeffs)
    raise WitnessNotFound(f"no nonzero Pfaffian on the {count}-point 0/1 grid")
