"""Dense complex linear algebra on small operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every function
here is pure: inputs are never modified and results are fresh arrays.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DimensionError, ValidationError

ComplexMatrix = NDArray[np.complex128]

ATOL = 1e-12
RTOL = 1e-10
HERMITIAN_TOL = 1e-10


def as_matrix(m: ArrayLike) -> ComplexMatrix:
    """Coerce ``m`` to a 2-D complex array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    return a


def _square(m: ArrayLike) -> ComplexMatrix:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def close(a: ArrayLike, b: ArrayLike, atol: float = ATOL, rtol: float = RTOL) -> bool:
    """Max-norm comparison ``|a - b| <= atol + rtol * |b|`` applied entrywise."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    return bool(np.all(np.abs(a - b) <= atol + rtol * np.abs(b)))


def dagger(m: ArrayLike) -> ComplexMatrix:
    """Conjugate transpose."""
    return as_matrix(m).conj().T.copy()


def trace(m: ArrayLike, normalized: bool = False) -> complex:
    """Sum of the diagonal, divided by the side length when ``normalized``."""
    a = _square(m)
    t = complex(np.trace(a))
    if normalized:
        t /= a.shape[0]
    return t


def kron(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(ms: Iterable[ArrayLike]) -> ComplexMatrix:
    """Kronecker product of a non-empty sequence, leftmost factor most significant."""
    ms = [as_matrix(m) for m in ms]
    if not ms:
        raise ValueError("kron_all needs at least one factor")
    return reduce(np.kron, ms)


def chain_product(ms: Sequence[ArrayLike]) -> ComplexMatrix:
    """Left-to-right product ``ms[0] @ ms[1] @ ...`` of equally sized square matrices."""
    if len(ms) == 0:
        raise ValueError("chain_product needs at least one matrix")
    mats = [_square(m) for m in ms]
    side = mats[0].shape[0]
    for k, m in enumerate(mats):
        if m.shape[0] != side:
            raise DimensionError(f"matrix {k} has side {m.shape[0]}, expected {side}")
    out = mats[0].copy()
    for m in mats[1:]:
        out = out @ m
    return out


def hermitian_eigenvalues(m: ArrayLike, tol: float = HERMITIAN_TOL) -> NDArray[np.float64]:
    """Eigenvalues of a Hermitian matrix in descending order.

    Raises:
        ValidationError: if ``max|M - M^dagger|`` exceeds ``tol``.
    """
    a = _square(m)
    defect = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if defect > tol:
        raise ValidationError(f"matrix is not Hermitian: max|M - M^dagger| = {defect:.3e} > {tol:.1e}")
    h = 0.5 * (a + a.conj().T)
    return np.linalg.eigvalsh(h)[::-1].copy()


def site_count(side: int, d: int) -> int:
    """Number of ``d``-dimensional tensor factors making up a space of dimension ``side``."""
    if d < 1:
        raise DimensionError(f"local dimension must be positive, got {d}")
    if d == 1:
        if side != 1:
            raise DimensionError(f"side {side} is not a power of d=1")
        return 1
    n, s = 0, side
    while s > 1 and s % d == 0:
        s //= d
        n += 1
    if s != 1 or n == 0:
        raise DimensionError(f"side {side} is not a positive power of d={d}")
    return n


def partial_trace_last(m: ArrayLike, d: int, k: int, normalized: bool = False) -> ComplexMatrix:
    """Trace out the last ``k`` sites of an operator on ``n`` sites of dimension ``d``.

    On a product ``A (x) B`` with ``B`` acting on the last ``k`` sites the result is
    ``A * trace(B, normalized)``; with ``normalized=True`` the trace of ``B`` is
    divided by ``d**k`` so that identities are mapped to identities.

    Args:
        m: Square matrix of side ``d**n``.
        d: Local dimension.
        k: Number of trailing sites to remove, ``1 <= k < n``.
        normalized: Use the normalized trace on the removed sites.
    """
    a = _square(m)
    n = site_count(a.shape[0], d)
    if k < 1 or k >= n:
        raise ValueError(f"k must satisfy 1 <= k < n_sites={n}, got {k}")
    keep, drop = d ** (n - k), d**k
    out = np.einsum("aibi->ab", a.reshape(keep, drop, keep, drop))
    if normalized:
        out = out / drop
    return out
