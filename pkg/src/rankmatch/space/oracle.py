"""Exhaustive enumeration over all p**d members, vectorised with numpy."""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from ..errors import SpaceTooLarge
from ..matrix import Matrix
from .core import AffineSpace

DEFAULT_CAP = 10**7
SPAN_CHECK_CAP = 10**5
CHUNK = 1 << 15


def batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over GF(p) of a stack of matrices with shape (N, r, c)."""
    M = np.array(mats, dtype=np.int64) % p
    N, r, c = M.shape
    rank = np.zeros(N, dtype=np.int64)
    used = np.zeros((N, r), dtype=bool)
    inv = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)
    for col in range(c):
        cand = (M[:, :, col] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        piv = cand[idx].argmax(axis=1)
        sub = M[idx]
        prow = sub[np.arange(len(idx)), piv]
        prow = prow * inv[prow[:, col]][:, None] % p
        factors = sub[:, :, col].copy()
        factors[used[idx]] = 0
        factors[np.arange(len(idx)), piv] = 0
        M[idx] = (sub - factors[:, :, None] * prow[:, None, :]) % p
        used[idx, piv] = True
        rank[idx] += 1
    return rank


def member_batches(S: AffineSpace, chunk: int = CHUNK) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(coeffs, matrices)`` blocks in lexicographic coefficient order."""
    p, d = S.spec.p, S.d
    base = np.array(S.base.rows, dtype=np.int64)
    if d == 0:
        yield np.zeros((1, 0), dtype=np.int64), base[None]
        return
    B = np.array([b.rows for b in S.basis], dtype=np.int64)
    powers = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
    total = p**d
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        coeffs = idx[:, None] // powers % p
        yield coeffs, (base + np.tensordot(coeffs, B, axes=1)) % p


def _check_cap(S: AffineSpace, cap: int) -> None:
    if S.size > cap:
        raise SpaceTooLarge(f"space has {S.spec.p}^{S.d} = {S.size} members, cap is {cap}")


def max_rank_member(S: AffineSpace, cap: int = DEFAULT_CAP) -> tuple[int, Matrix]:
    """Exact rho(S) and the first member (in enumeration order) attaining it."""
    _check_cap(S, cap)
    best, best_mat = -1, None
    for _, mats in member_batches(S):
        ranks = batch_rank(mats, S.spec.p)
        k = int(ranks.argmax())
        if ranks[k] > best:
            best, best_mat = int(ranks[k]), mats[k]
        if best == S.n:
            break
    return best, Matrix(S.spec, best_mat.tolist())


def max_rank_oracle(S: AffineSpace, cap: int = DEFAULT_CAP) -> int:
    """rho(S) = max rank over all members, by exhaustive enumeration."""
    return max_rank_member(S, cap)[0]


def rank_profile(S: AffineSpace, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Ranks of all members, in enumeration order."""
    _check_cap(S, cap)
    return np.concatenate([batch_rank(m, S.spec.p) for _, m in member_batches(S)])


def span_violation(S: AffineSpace, cap: int = SPAN_CHECK_CAP) -> Matrix | None:
    """First member of the linear part that is not weakly symmetric, if any."""
    linear = S.with_basis(S.basis, base=Matrix.zeros(S.spec, S.n))
    _check_cap(linear, cap)
    for _, mats in member_batches(linear):
        nz = mats != 0
        bad = ~(nz == nz.transpose(0, 2, 1)).all(axis=(1, 2))
        if bad.any():
            return Matrix(S.spec, mats[int(bad.argmax())].tolist())
    return None
