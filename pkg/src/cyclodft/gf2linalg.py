"""Dense GF(2) linear algebra on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix


def as_binary(M) -> np.ndarray:
    B = np.asarray(M, dtype=np.int64) % 2
    return B.astype(np.uint8)


def gf2_matmul(X, Y) -> np.ndarray:
    return ((as_binary(X).astype(np.int64) @ as_binary(Y).astype(np.int64)) % 2).astype(np.uint8)


def gf2_rank(M) -> int:
    R = as_binary(M).copy()
    rows, cols = R.shape
    rank = 0
    for c in range(cols):
        piv = np.nonzero(R[rank:, c])[0]
        if piv.size == 0:
            continue
        p = rank + piv[0]
        if p != rank:
            R[[rank, p]] = R[[p, rank]]
        below = np.nonzero(R[rank + 1 :, c])[0] + rank + 1
        R[below] ^= R[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def invert_gf2_matrix(M) -> np.ndarray:
    """Gauss-Jordan inverse over GF(2).

    Raises SingularMatrix if ``M`` has no inverse.

    >>> invert_gf2_matrix([[1, 1], [0, 1]]).tolist()
    [[1, 1], [0, 1]]
    """
    A = as_binary(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    aug = np.concatenate([A, np.eye(n, dtype=np.uint8)], axis=1)
    for c in range(n):
        piv = np.nonzero(aug[c:, c])[0]
        if piv.size == 0:
            raise SingularMatrix(f"matrix is singular over GF(2) (no pivot in column {c})")
        p = c + piv[0]
        if p != c:
            aug[[c, p]] = aug[[p, c]]
        others = np.nonzero(aug[:, c])[0]
        others = others[others != c]
        aug[others] ^= aug[c]
    return aug[:, n:].copy()


def row_space_rank_of_masks(masks: list[int]) -> int:
    """GF(2) rank of a set of integers viewed as bit vectors."""
    basis: list[int] = []
    for v in masks:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)
