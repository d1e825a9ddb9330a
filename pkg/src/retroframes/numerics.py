"""Dense linear-algebra kernels shared by the frame modules.

All routines accept real or complex arrays and never mutate their inputs.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyMatrix, NotHermitian, NotSquare

HERMITIAN_TOL = 1e-10
RANK_RTOL = 1e-10


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
    return a


def hermitian_eigenvalues(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    Raises NotSquare for non-square input and NotHermitian if any entry of
    ``m - m^*`` exceeds ``tol`` in modulus.
    """
    a = _as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    if a.size and np.max(np.abs(a - a.conj().T)) > tol:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(a)


def singular_values(m) -> np.ndarray:
    """Singular values in descending order, ``min(rows, cols)`` of them."""
    a = _as_matrix(m)
    if a.size == 0:
        raise EmptyMatrix("singular values of an empty matrix")
    return np.linalg.svd(a, compute_uv=False)


def numerical_rank(m, rtol: float = RANK_RTOL) -> int:
    a = _as_matrix(m)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def span_basis(vectors, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis (as columns) for the span of the given row vectors.

    Dependent or zero vectors are tolerated; directions whose singular value
    falls below ``rtol * sigma_max`` are discarded.
    """
    v = _as_matrix(vectors)
    n = v.shape[1]
    if v.shape[0] == 0 or not np.any(v):
        return np.zeros((n, 0), dtype=v.dtype)
    u, s, _ = np.linalg.svd(v.T, full_matrices=False)
    r = int(np.sum(s > rtol * s[0]))
    return u[:, :r]


def null_space(m, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis (columns) of the kernel of ``m``."""
    a = _as_matrix(m)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=a.dtype)
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    r = int(np.sum(s > rtol * s[0])) if s.size and s[0] > 0 else 0
    return vh[r:].conj().T


def distance_to_span(x, basis: Sequence) -> float:
    """Euclidean distance from ``x`` to the linear span of ``basis``.

    ``basis`` may be empty or linearly dependent; an empty basis gives
    ``norm(x)``.
    """
    x = np.asarray(x)
    if x.ndim != 1:
        raise DimensionMismatch("x must be a vector")
    vecs = [np.asarray(b) for b in basis]
    for b in vecs:
        if b.shape != x.shape:
            raise DimensionMismatch(
                f"basis vector of shape {b.shape} does not match x of shape {x.shape}"
            )
    if not vecs:
        return float(np.linalg.norm(x))
    q = span_basis(np.vstack(vecs))
    r = x - q @ (q.conj().T @ x)
    return float(np.linalg.norm(r))


class LeastSquares(NamedTuple):
    x: np.ndarray
    residual: float


def min_norm_solve(a, b, rtol: float = RANK_RTOL) -> LeastSquares:
    """Minimal-norm least-squares solution of ``a @ x = b`` and its residual."""
    a = _as_matrix(a)
    b = np.asarray(b)
    if b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise DimensionMismatch(
            f"matrix with {a.shape[0]} rows cannot be solved against vector of shape {b.shape}"
        )
    x = np.linalg.pinv(a, rcond=rtol) @ b
    return LeastSquares(x, float(np.linalg.norm(a @ x - b)))
