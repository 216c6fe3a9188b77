"""Slow, obviously-correct reference implementations used only by the tests.

None of these touch the elimination or DP code paths in the package; they
work on plain lists of ints.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def perm_parity(perm) -> int:
    inv = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def leibniz_det(rows, p: int) -> int:
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        term = perm_parity(perm)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total % p


def row_space_rank(rows, p: int) -> int:
    """log_p of the number of distinct vectors in the row space."""
    if not rows:
        return 0
    m = len(rows[0])
    seen = set()
    for coeffs in product(range(p), repeat=len(rows)):
        seen.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(m)))
    size, r = len(seen), 0
    while size > 1:
        size //= p
        r += 1
    return r


def minor_rank(rows, p: int) -> int:
    """Largest k with a nonzero k x k minor (Leibniz on every minor)."""
    n, m = len(rows), len(rows[0]) if rows else 0
    for k in range(min(n, m), 0, -1):
        for I in combinations(range(n), k):
            for J in combinations(range(m), k):
                if leibniz_det([[rows[i][j] for j in J] for i in I], p):
                    return k
    return 0


def pfaffian_expand(rows, p: int) -> int:
    """Expansion along the first row: pf(C) = sum_j (-1)^(j+1) C[0][j] pf(C minus rows/cols 0, j)."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for j in range(1, n):
        if rows[0][j] % p == 0:
            continue
        keep = [k for k in range(n) if k not in (0, j)]
        sub = [[rows[a][b] for b in keep] for a in keep]
        sign = -1 if (j - 1) % 2 else 1
        total += sign * rows[0][j] * pfaffian_expand(sub, p)
    return total % p


def brute_matching(n: int, edges) -> tuple[int, int]:
    """(nu, mu) by trying every edge subset."""
    edges = [tuple(e) for e in edges]
    best_nu = best_mu = 0
    for r in range(len(edges) + 1):
        for subset in combinations(edges, r):
            verts = [v for e in subset for v in e]
            if len(verts) == len(set(verts)):
                best_nu = max(best_nu, r)
                best_mu = max(best_mu, len(verts))
    return best_nu, best_mu


def colex_less(a, b) -> bool:
    """Cells compared through 2^i + 2^j (a diagonal cell weighs 2^(i+1))."""
    return (1 << a[0]) + (1 << a[1]) < (1 << b[0]) + (1 << b[1])


def span(basis_flat, p: int) -> set:
    if not basis_flat:
        return {()}
    m = len(basis_flat[0])
    return {
        tuple(sum(c * v[j] for c, v in zip(coeffs, basis_flat)) % p for j in range(m))
        for coeffs in product(range(p), repeat=len(basis_flat))
    }


def affine_members(base_flat, basis_flat, p: int) -> set:
    return {tuple((a + b) % p for a, b in zip(base_flat, v)) for v in span(basis_flat, p)}


def max_rank_brute(base_rows, basis_rows, p: int) -> int:
    n = len(base_rows)
    best = 0
    for coeffs in product(range(p), repeat=len(basis_rows)):
        M = [[(base_rows[i][j] + sum(c * B[i][j] for c, B in zip(coeffs, basis_rows))) % p
              for j in range(n)] for i in range(n)]
        best = max(best, row_space_rank(M, p))
    return best


def inverse_by_search(a: int, p: int) -> int:
    return next(b for b in range(1, p) if a * b % p == 1)
