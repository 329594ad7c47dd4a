"""Dense Gaussian elimination over F_p on int64 numpy arrays."""

from __future__ import annotations

import numpy as np

from .errors import InconsistentSystem, RankDeficient


def _mod(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _mod(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def solve(a, b, p: int, require_unique: bool = True) -> np.ndarray:
    """Solve a @ x = b over F_p; b may be a vector or a matrix of right-hand sides."""
    a = _mod(a, p)
    b = _mod(b, p)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        if np.any(b):
            raise InconsistentSystem("nonzero right-hand side for an empty system")
        if require_unique and cols:
            raise RankDeficient("solution is not unique", 0)
        x = np.zeros((cols, b.shape[1]), dtype=np.int64)
        return x[:, 0] if vec else x
    red, piv = rref(np.hstack([a, b]), p)
    if any(c >= cols for c in piv):
        raise InconsistentSystem("linear system has no solution")
    if require_unique and len(piv) < cols:
        raise RankDeficient("solution is not unique", len(piv))
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = red[i, cols:]
    return x[:, 0] if vec else x


def inverse(a, p: int) -> np.ndarray:
    a = _mod(a, p)
    n, k = a.shape
    if n != k:
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return a.copy()
    red, piv = rref(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if len(piv) < n or piv[n - 1] >= n:
        raise RankDeficient("matrix is singular", rank(a, p))
    return red[:, n:]


def left_inverse(a, p: int) -> np.ndarray:
    """g with g @ a = identity, for a of full column rank.

    Picks a maximal set of independent rows of a and inverts that square block;
    for square a this is the two-sided inverse.
    """
    a = _mod(a, p)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros((0, rows), dtype=np.int64)
    _, rowpiv = rref(a.T, p)
    if len(rowpiv) < cols:
        raise RankDeficient("map is not injective", len(rowpiv))
    block = inverse(a[rowpiv, :], p)
    g = np.zeros((cols, rows), dtype=np.int64)
    g[:, rowpiv] = block
    return g


def in_span(columns, v, p: int) -> bool:
    """Whether vector v lies in the column span of the given matrix."""
    columns = _mod(columns, p)
    v = _mod(v, p).reshape(-1)
    if columns.size == 0:
        return not np.any(v)
    return rank(np.hstack([columns, v[:, None]]), p) == rank(columns, p)
