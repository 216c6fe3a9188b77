"""Dense square/rectangular matrices over GF(p).

Storage is a tuple of rows of ``int`` residues, 0-based as usual in Python.
Index *sets* handed in from the mathematical side (principal submatrices,
cells, matchings) are 1-based, as are all file formats.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .field import FieldElem, FieldMismatchError, FieldSpec

PFAFFIAN_COMBINATORIAL_MAX = 12


class Matrix:
    __slots__ = ("spec", "rows", "n_rows", "n_cols", "_hash")

    def __init__(self, spec: FieldSpec, rows: Iterable[Iterable[int | FieldElem]]):
        p = spec.p
        reduced = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, FieldElem):
                    if x.spec != spec:
                        raise FieldMismatchError(f"entry from {x.spec} in a {spec} matrix")
                    x = x.value
                r.append(int(x) % p)
            reduced.append(tuple(r))
        if not reduced or not reduced[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(reduced[0])
        if any(len(r) != width for r in reduced):
            raise ValueError("ragged rows")
        self.spec = spec
        self.rows: tuple[tuple[int, ...], ...] = tuple(reduced)
        self.n_rows = len(reduced)
        self.n_cols = width
        self._hash: int | None = None

    @classmethod
    def zeros(cls, spec: FieldSpec, n: int, m: int | None = None) -> Matrix:
        return cls(spec, [[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> Matrix:
        return cls(spec, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_cells(cls, spec: FieldSpec, n: int, cells: dict[tuple[int, int], int]) -> Matrix:
        """Build an n x n matrix from 1-based ``{(i, j): value}``."""
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in cells.items():
            rows[i - 1][j - 1] = v
        return cls(spec, rows)

    @property
    def n(self) -> int:
        self._require_square()
        return self.n_rows

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def _require_square(self) -> None:
        if self.n_rows != self.n_cols:
            raise ValueError(f"operation needs a square matrix, got {self.n_rows}x{self.n_cols}")

    def entry(self, i: int, j: int) -> FieldElem:
        """1-based entry A(i, j)."""
        return FieldElem(self.rows[i - 1][j - 1], self.spec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.spec == other.spec and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec.p, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix(GF({self.spec.p}), [{body}])"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    def _check_compatible(self, other: Matrix) -> None:
        if self.spec != other.spec:
            raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec} matrices")
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_compatible(other)
        return Matrix(self.spec, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_compatible(other)
        return Matrix(self.spec, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix:
        return Matrix(self.spec, [[-a for a in r] for r in self.rows])

    def scale(self, c: int | FieldElem) -> Matrix:
        c = int(c)
        return Matrix(self.spec, [[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.spec != other.spec:
            raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec} matrices")
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch for product")
        cols = list(zip(*other.rows))
        return Matrix(self.spec, [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def transpose(self) -> Matrix:
        return Matrix(self.spec, zip(*self.rows))

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def support(self) -> Iterator[tuple[int, int]]:
        """1-based positions of the nonzero entries."""
        for i, r in enumerate(self.rows, 1):
            for j, x in enumerate(r, 1):
                if x:
                    yield i, j


def combine(base: Matrix, coeffs: Sequence[int], basis: Sequence[Matrix]) -> Matrix:
    """``base + sum(c_i * B_i)``."""
    p = base.spec.p
    n, m = base.n_rows, base.n_cols
    acc = [list(r) for r in base.rows]
    for c, B in zip(coeffs, basis):
        c %= p
        if not c:
            continue
        for i in range(n):
            Bi, Ai = B.rows[i], acc[i]
            for j in range(m):
                if Bi[j]:
                    Ai[j] += c * Bi[j]
    return Matrix(base.spec, acc)


def rank(A: Matrix) -> int:
    """Rank by Gaussian elimination with row pivoting."""
    p = A.spec.p
    work = [list(r) for r in A.rows]
    r = 0
    n_rows = len(work)
    for col in range(A.n_cols):
        pivot = next((i for i in range(r, n_rows) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        inv = pow(prow[col], -1, p)
        for i in range(r + 1, n_rows):
            f = work[i][col]
            if f:
                f = f * inv % p
                row = work[i]
                for j in range(col, A.n_cols):
                    row[j] = (row[j] - f * prow[j]) % p
        r += 1
        if r == n_rows:
            break
    return r


def det(A: Matrix) -> FieldElem:
    """Determinant by elimination, tracking row-swap signs."""
    A._require_square()
    p = A.spec.p
    n = A.n_rows
    work = [list(r) for r in A.rows]
    result = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col]), None)
        if pivot is None:
            return A.spec.zero
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        prow = work[col]
        result = result * prow[col] % p
        inv = pow(prow[col], -1, p)
        for i in range(col + 1, n):
            f = work[i][col]
            if f:
                f = f * inv % p
                row = work[i]
                for j in range(col, n):
                    row[j] = (row[j] - f * prow[j]) % p
    return A.spec(result)


def is_weakly_symmetric(A: Matrix) -> bool:
    A._require_square()
    rows = A.rows
    n = A.n_rows
    return all(bool(rows[i][j]) == bool(rows[j][i]) for i in range(n) for j in range(i + 1, n))


def is_symmetric(A: Matrix) -> bool:
    A._require_square()
    rows = A.rows
    n = A.n_rows
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def is_alternating(A: Matrix) -> bool:
    """Skew-symmetric with zero diagonal (in characteristic 2: symmetric, zero diagonal)."""
    A._require_square()
    p = A.spec.p
    rows = A.rows
    n = A.n_rows
    if any(rows[i][i] for i in range(n)):
        return False
    return all((rows[i][j] + rows[j][i]) % p == 0 for i in range(n) for j in range(i + 1, n))


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation listing ``seq`` (any distinct sortable labels)."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(seq)
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perfect_matchings(vertices: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Perfect matchings of the complete graph on ``vertices``.

    The first edge always contains the smallest free vertex, so each matching
    appears exactly once.
    """
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in perfect_matchings(remaining):
            yield [(first, partner)] + tail


def colex_key(edge: tuple[int, int]) -> tuple[int, int]:
    i, j = edge
    return (j, i)


def matching_sign(matching: Iterable[tuple[int, int]]) -> int:
    """theta(M): sign of 1..n -> k_1 l_1 ... k_t l_t, edges colex-sorted with k < l."""
    edges = sorted((tuple(sorted(e)) for e in matching), key=colex_key)
    return permutation_sign([v for e in edges for v in e])


def _check_pfaffian_input(C: Matrix) -> None:
    C._require_square()
    if C.n_rows % 2:
        raise ValueError(f"Pfaffian needs even order, got {C.n_rows}")
    if not is_alternating(C):
        raise ValueError("Pfaffian needs an alternating matrix")


def pfaffian_combinatorial(C: Matrix) -> FieldElem:
    """Pfaffian as the signed sum over perfect matchings of K_n."""
    _check_pfaffian_input(C)
    n = C.n_rows
    if n > PFAFFIAN_COMBINATORIAL_MAX:
        raise ValueError(f"order {n} exceeds {PFAFFIAN_COMBINATORIAL_MAX} for matching expansion")
    p = C.spec.p
    rows = C.rows
    total = 0
    for M in perfect_matchings(list(range(1, n + 1))):
        prod = 1
        for k, l in M:
            prod = prod * rows[k - 1][l - 1] % p
            if not prod:
                break
        if prod:
            total += matching_sign(M) * prod
    return C.spec(total)


def pfaffian_elimination(C: Matrix) -> FieldElem:
    """Pfaffian in O(n^3) by symmetric (congruence) elimination on column pairs.

    Every step adds a multiple of row/column ``a`` to row/column ``b`` at the
    same time, or swaps a row/column pair, so the working matrix stays
    alternating in any characteristic.
    """
    _check_pfaffian_input(C)
    p = C.spec.p
    n = C.n_rows
    M = [list(r) for r in C.rows]
    result = 1
    for k in range(0, n, 2):
        j = next((j for j in range(k + 1, n) if M[k][j]), None)
        if j is None:
            return C.spec.zero
        if j != k + 1:
            M[k + 1], M[j] = M[j], M[k + 1]
            for row in M:
                row[k + 1], row[j] = row[j], row[k + 1]
            result = -result
        pivot = M[k][k + 1]
        result = result * pivot % p
        inv = pow(pivot, -1, p)
        for i in range(k + 2, n):
            # clear (k, i) using row/col k+1, then (k+1, i) using row/col k
            c = (-M[k][i] * inv) % p
            if c:
                _add_multiple(M, src=k + 1, dst=i, c=c, p=p)
            c = (M[k + 1][i] * inv) % p
            if c:
                _add_multiple(M, src=k, dst=i, c=c, p=p)
    return C.spec(result)


def _add_multiple(M: list[list[int]], src: int, dst: int, c: int, p: int) -> None:
    """Row dst += c * row src, then col dst += c * col src."""
    rs, rd = M[src], M[dst]
    for j in range(len(rd)):
        if rs[j]:
            rd[j] = (rd[j] + c * rs[j]) % p
    for row in M:
        if row[src]:
            row[dst] = (row[dst] + c * row[src]) % p


def principal_submatrix(A: Matrix, idx: Iterable[int]) -> Matrix:
    """Submatrix on rows and columns ``idx`` (1-based, returned in sorted order)."""
    A._require_square()
    keep = sorted(set(idx))
    if not keep:
        raise ValueError("empty index set")
    bad = [i for i in keep if not 1 <= i <= A.n_rows]
    if bad:
        raise IndexError(f"indices {bad} out of range 1..{A.n_rows}")
    return Matrix(A.spec, [[A.rows[i - 1][j - 1] for j in keep] for i in keep])


def block(spec: FieldSpec, blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a grid of compatible blocks."""
    rows: list[list[int]] = []
    for brow in blocks:
        height = brow[0].n_rows
        for r in range(height):
            line: list[int] = []
            for B in brow:
                line.extend(B.rows[r])
            rows.append(line)
    return Matrix(spec, rows)
