"""Extremal bounded-rank spaces, the GF(2) doubling map and random generators."""

from __future__ import annotations

from collections.abc import Callable
from math import comb

from ..errors import HypothesisViolation
from ..field import FieldSpec
from ..matrix import Matrix, block, is_alternating, is_symmetric, rank
from ..rng import SplitMix64
from .core import AffineSpace, Cell, canonicalize, upper_cells

EXTREMAL_KINDS = ("u1a", "u2a", "u1s", "u2s")
RANDOM_KINDS = ("symmetric", "alternating", "disjoint_support_ws")


def _sym_generator(spec: FieldSpec, n: int, c: Cell) -> Matrix:
    cells = {(c.i, c.j): 1, (c.j, c.i): 1}
    return Matrix.from_cells(spec, n, cells)


def _alt_generator(spec: FieldSpec, n: int, c: Cell) -> Matrix:
    return Matrix.from_cells(spec, n, {(c.i, c.j): 1, (c.j, c.i): -1})


def cell_basis(spec: FieldSpec, n: int, kind: str) -> list[Matrix]:
    """Standard basis of H_n (``symmetric``) or A_n (``alternating``), colex-descending."""
    cells = list(reversed(upper_cells(n)))
    if kind == "symmetric":
        return [_sym_generator(spec, n, c) for c in cells]
    if kind == "alternating":
        return [_alt_generator(spec, n, c) for c in cells if c.i < c.j]
    raise ValueError(f"no cell basis for kind {kind!r}")


def extremal_region(kind: str, n: int, k: int) -> Callable[[int, int], bool]:
    """Predicate on 1-based positions (i, j) allowed in the extremal space."""
    if kind not in EXTREMAL_KINDS:
        raise ValueError(f"unknown extremal kind {kind!r}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    t = k // 2
    if kind in ("u1a", "u2a") and k % 2:
        raise ValueError(f"{kind} needs even k, got {k}")
    if kind == "u1a":
        if k + 1 > n:
            raise ValueError(f"u1a needs k < n, got n={n}, k={k}")
        return lambda i, j: max(i, j) <= k + 1
    if kind == "u2a":
        return lambda i, j: min(i, j) <= t
    if kind == "u1s":
        return lambda i, j: max(i, j) <= k
    if k % 2:
        return lambda i, j: min(i, j) <= t or (i, j) == (t + 1, t + 1)
    return lambda i, j: min(i, j) <= t


def extremal_dimension(kind: str, n: int, k: int) -> int:
    """The closed-form dimension term belonging to ``kind`` in u_a / u_s."""
    extremal_region(kind, n, k)
    t, odd = divmod(k, 2)
    if kind == "u1a":
        return comb(2 * t + 1, 2)
    if kind == "u2a":
        return t * n - comb(t + 1, 2)
    if kind == "u1s":
        return comb(k + 1, 2)
    return t * n - comb(t, 2) + odd


def extremal(kind: str, n: int, k: int, spec: FieldSpec | None = None) -> AffineSpace:
    """U_1 / U_2 as a linear space spanned by its cell generators."""
    spec = spec or FieldSpec(3)
    allowed = extremal_region(kind, n, k)
    alternating = kind.endswith("a")
    cells = [c for c in reversed(upper_cells(n)) if allowed(c.i, c.j)]
    if alternating:
        basis = [_alt_generator(spec, n, c) for c in cells if c.i < c.j]
    else:
        basis = [_sym_generator(spec, n, c) for c in cells]
    return AffineSpace(spec, n, Matrix.zeros(spec, n), tuple(basis),
                       "alternating" if alternating else "symmetric")


def extremal_max_rank_member(kind: str, n: int, k: int, spec: FieldSpec | None = None) -> Matrix:
    """An explicit member of the extremal space with rank exactly k."""
    spec = spec or FieldSpec(3)
    extremal_region(kind, n, k)
    t, odd = divmod(k, 2)
    cells: dict[tuple[int, int], int] = {}
    if kind == "u1a":
        for r in range(t):
            cells[(2 * r + 1, 2 * r + 2)] = 1
            cells[(2 * r + 2, 2 * r + 1)] = -1
    elif kind == "u1s":
        for i in range(1, k + 1):
            cells[(i, i)] = 1
    elif kind == "u2a":
        for i in range(1, t + 1):
            cells[(i, t + i)] = 1
            cells[(t + i, i)] = -1
    else:
        # odd k: the centre t+1 is taken by the diagonal cell, so partners shift by one
        shift = t + odd
        for i in range(1, t + 1):
            cells[(i, shift + i)] = 1
            cells[(shift + i, i)] = 1
        if odd:
            cells[(t + 1, t + 1)] = 1
    return Matrix.from_cells(spec, n, cells)


def structural_rank_bound(kind: str, n: int, k: int, S: AffineSpace) -> int:
    """Check every member of ``S`` is supported in the extremal region and return k.

    Support in a (k+1)-corner of an alternating matrix forces even rank <= k;
    a k-corner forces rank <= k; support in t rows plus t columns forces rank
    <= 2t, plus one for the extra diagonal cell when k is odd.
    """
    allowed = extremal_region(kind, n, k)
    for M in (S.base, *S.basis):
        for i, j in M.support():
            if not allowed(i, j):
                raise HypothesisViolation(f"entry ({i},{j}) outside the {kind}({n},{k}) region", member=M)
    return k


def double_symmetric(S: AffineSpace) -> AffineSpace:
    """Map a symmetric GF(2) space to the alternating space of [[0, S], [S, 0]]."""
    if S.spec.p != 2:
        raise ValueError(f"doubling needs GF(2), got {S.spec}")
    if S.kind not in ("symmetric", "weakly_symmetric"):
        raise ValueError(f"doubling needs a symmetric space, got kind {S.kind!r}")
    for M in (S.base, *S.basis):
        if not is_symmetric(M):
            raise HypothesisViolation("doubling needs symmetric base and basis", member=M)
    Z = Matrix.zeros(S.spec, S.n)

    def dbl(M: Matrix) -> Matrix:
        return block(S.spec, [[Z, M], [M, Z]])

    return AffineSpace(S.spec, 2 * S.n, dbl(S.base), tuple(dbl(B) for B in S.basis), "alternating")


def _as_rng(seed: int | SplitMix64) -> SplitMix64:
    return seed if isinstance(seed, SplitMix64) else SplitMix64(seed)


def random_matrix(spec: FieldSpec, n: int, rng: SplitMix64, kind: str = "general") -> Matrix:
    p = spec.p
    if kind == "general":
        return Matrix(spec, [[rng.randbelow(p) for _ in range(n)] for _ in range(n)])
    gens = cell_basis(spec, n, kind)
    coeffs = [rng.randbelow(p) for _ in gens]
    acc = Matrix.zeros(spec, n)
    for c, G in zip(coeffs, gens):
        if c:
            acc = acc + G.scale(c)
    return acc


def random_full_rank(spec: FieldSpec, rows: int, cols: int, rng: SplitMix64) -> list[list[int]]:
    """Uniform rows x cols matrix of rank ``rows`` (rejection sampling)."""
    if rows > cols:
        raise ValueError(f"cannot have rank {rows} with {cols} columns")
    if rows == 0:
        return []
    while True:
        M = [[rng.randbelow(spec.p) for _ in range(cols)] for _ in range(rows)]
        if rank(Matrix(spec, M)) == rows:
            return M


def random_invertible(spec: FieldSpec, n: int, rng: SplitMix64) -> Matrix:
    return Matrix(spec, random_full_rank(spec, n, n, rng))


def congruence(S: AffineSpace, P: Matrix) -> AffineSpace:
    """``P^T S P``; preserves dimension, rank profile and symmetric/alternating structure."""
    PT = P.transpose()
    return AffineSpace(S.spec, S.n, PT @ S.base @ P, tuple(PT @ B @ P for B in S.basis), S.kind)


def random_subspace(S: AffineSpace, d: int, rng: SplitMix64, base: str = "member") -> AffineSpace:
    """A random d-dimensional linear subspace of S's linear part, shifted by a random member of S."""
    if d > S.d:
        raise ValueError(f"cannot take a {d}-dimensional subspace of a {S.d}-dimensional space")
    coeffs = random_full_rank(S.spec, d, S.d, rng)
    basis = [S.with_basis(S.basis, base=Matrix.zeros(S.spec, S.n)).member(c) for c in coeffs]
    if base == "member":
        shift = S.member([rng.randbelow(S.spec.p) for _ in range(S.d)])
    elif base == "zero":
        shift = Matrix.zeros(S.spec, S.n)
    else:
        raise ValueError(f"unknown base mode {base!r}")
    return AffineSpace(S.spec, S.n, shift, tuple(basis), S.kind)


def ambient_dimension(kind: str, n: int) -> int:
    if kind == "alternating":
        return comb(n, 2)
    if kind in ("symmetric", "disjoint_support_ws"):
        return comb(n + 1, 2)
    raise ValueError(f"unknown random kind {kind!r}")


def random_space(kind: str, n: int, d: int, p: int, seed: int | SplitMix64,
                 base: str | None = None) -> AffineSpace:
    """Random affine space of linear dimension d; deterministic in ``seed``.

    ``base`` is ``"general"`` (uniform in M_n), ``"kind"`` (uniform in the
    ambient structured space) or ``"zero"``.  Alternating spaces default to an
    alternating base so the space stays inside A_n; the others default to a
    general base.
    """
    if kind not in RANDOM_KINDS:
        raise ValueError(f"unknown random kind {kind!r}; expected one of {RANDOM_KINDS}")
    if not 0 <= d <= ambient_dimension(kind, n):
        raise ValueError(f"d={d} exceeds the ambient dimension {ambient_dimension(kind, n)} for {kind}, n={n}")
    spec = FieldSpec(p)
    rng = _as_rng(seed)
    if base is None:
        base = "kind" if kind == "alternating" else "general"

    if kind == "disjoint_support_ws":
        cells = upper_cells(n)
        chosen = rng.sample(cells, rng.randint(d, len(cells))) if d else []
        groups: list[list[Cell]] = [[c] for c in chosen[:d]]
        for c in chosen[d:]:
            groups[rng.randbelow(d)].append(c)
        basis = []
        for group in groups:
            entries = {}
            for c in group:
                entries[(c.i, c.j)] = rng.randint(1, p - 1)
                if c.i != c.j:
                    entries[(c.j, c.i)] = rng.randint(1, p - 1)
            basis.append(Matrix.from_cells(spec, n, entries))
        space_kind = "weakly_symmetric"
    else:
        gens = cell_basis(spec, n, kind)
        basis = []
        for row in random_full_rank(spec, d, len(gens), rng):
            acc = Matrix.zeros(spec, n)
            for c, G in zip(row, gens):
                if c:
                    acc = acc + G.scale(c)
            basis.append(acc)
        space_kind = kind

    if base == "general":
        A = random_matrix(spec, n, rng)
    elif base == "kind":
        A = random_matrix(spec, n, rng, "general" if kind == "disjoint_support_ws" else kind)
    elif base == "zero":
        A = Matrix.zeros(spec, n)
    else:
        raise ValueError(f"unknown base mode {base!r}")
    return AffineSpace(spec, n, A, tuple(basis), space_kind)


def random_low_rank_space(family: str, n: int, p: int, rng: SplitMix64, cap: int) -> AffineSpace:
    """Random subspace of a random extremal space, moved by a random congruence.

    ``family`` is ``"alternating"`` or ``"symmetric"``.  The linear dimension
    is kept small enough that p**d <= cap.
    """
    spec = FieldSpec(p)
    if family == "alternating":
        options = [("u1a", k) for k in range(0, n, 2)] + [("u2a", k) for k in range(0, n + 1, 2)]
    else:
        options = [(kind, k) for kind in ("u1s", "u2s") for k in range(n + 1)]
    kind, k = rng.choice(options)
    U = extremal(kind, n, k, spec)
    max_d = U.d
    while max_d and p**max_d > cap:
        max_d -= 1
    sub = random_subspace(U, rng.randint(0, max_d), rng)
    return canonicalize(congruence(sub, random_invertible(spec, n, rng)))


def check_structure(S: AffineSpace) -> None:
    """Raise unless the declared symmetric/alternating structure holds for the base too."""
    check = {"alternating": is_alternating, "symmetric": is_symmetric}.get(S.kind)
    if check and not check(S.base):
        raise HypothesisViolation(f"base matrix is not {S.kind}", member=S.base)
