"""Evaluation of the infinite-chain state on local observables.

For an observable ``X`` on sites ``1..N`` the state value is
``<psi_{N+1}| X (x) 1 |psi_{N+1}>``: one extra site is traced out. Two
independent routes compute it:

* :func:`evaluate_naive` builds ``psi_{N+1}`` explicitly (cost ``d**(N+1)``);
* :func:`evaluate_transfer` multiplies ``m^2 x m^2`` transfer matrices
  ``E_k = sum_ij <i|X_k|j> conj(A_i^[k]) (x) A_j^[k]`` and closes the chain with
  ``F = sum_l conj(A_l^[N+1]) (x) A_l^[N+1]`` (cost linear in ``N``).
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .conditions import DEFAULT_TOL, ConditionReport, check_consistency, check_normalization
from .errors import DimensionError, UnsupportedFormError, ValidationError
from .linalg import HERMITIAN_TOL, as_matrix, hermitian_eigenvalues, kron_all
from .mps import DEFAULT_CAP, MPSFamily, build_statevector, check_cap

ENTROPY_CUTOFF = 1e-12


@dataclass(frozen=True, eq=False)
class LocalObservable:
    """Observable on sites ``1..n_sites``, either as per-site factors or one dense matrix.

    Use :meth:`product` or :meth:`dense` rather than the raw constructor.
    """

    form: Literal["product", "dense"]
    n_sites: int
    factors: tuple[NDArray[np.complex128], ...] = ()
    matrix: NDArray[np.complex128] | None = None

    def __post_init__(self) -> None:
        if self.n_sites < 1:
            raise DimensionError(f"an observable needs at least one site, got {self.n_sites}")
        if self.form == "product":
            if len(self.factors) != self.n_sites:
                raise DimensionError(f"{len(self.factors)} factors for {self.n_sites} sites")
            d = self.factors[0].shape[0]
            for k, f in enumerate(self.factors, start=1):
                if f.shape != (d, d):
                    raise DimensionError(f"factor {k} has shape {f.shape}, expected ({d}, {d})")
        elif self.form == "dense":
            if self.matrix is None:
                raise ValueError("dense observable without a matrix")
            side = self.matrix.shape[0]
            if self.matrix.shape != (side, side) or round(side ** (1.0 / self.n_sites)) ** self.n_sites != side:
                raise DimensionError(f"dense matrix of shape {self.matrix.shape} is not an operator on {self.n_sites} sites")
        else:
            raise ValueError(f"unknown observable form {self.form!r}")

    @classmethod
    def product(cls, factors: Sequence[ArrayLike]) -> LocalObservable:
        fs = tuple(as_matrix(f) for f in factors)
        return cls("product", len(fs), factors=fs)

    @classmethod
    def dense(cls, matrix: ArrayLike, n_sites: int) -> LocalObservable:
        return cls("dense", n_sites, matrix=as_matrix(matrix))

    @property
    def d(self) -> int:
        if self.form == "product":
            return self.factors[0].shape[0]
        return round(self.matrix.shape[0] ** (1.0 / self.n_sites))

    def to_dense(self) -> NDArray[np.complex128]:
        if self.form == "dense":
            return self.matrix
        return kron_all(self.factors)

    def padded(self, k: int) -> LocalObservable:
        """The same observable followed by ``k`` identity sites."""
        if k == 0:
            return self
        eye = np.eye(self.d, dtype=np.complex128)
        if self.form == "product":
            return LocalObservable.product(self.factors + (eye,) * k)
        return LocalObservable.dense(np.kron(self.matrix, np.eye(self.d**k)), self.n_sites + k)


@dataclass(frozen=True)
class EvaluationReport:
    value: complex
    method: Literal["naive", "transfer"]
    n_sites: int
    elapsed: float  # seconds


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, trace-one, positive semidefinite matrix on ``n_sites`` sites."""

    matrix: NDArray[np.complex128]
    n_sites: int
    d: int

    def __post_init__(self) -> None:
        m = as_matrix(self.matrix)
        if m.shape != (self.d**self.n_sites,) * 2:
            raise DimensionError(f"shape {m.shape} does not match {self.n_sites} sites of dimension {self.d}")
        eig = hermitian_eigenvalues(m, HERMITIAN_TOL)
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > HERMITIAN_TOL:
            raise ValidationError(f"density matrix has trace {tr}, expected 1")
        if eig[-1] < -HERMITIAN_TOL:
            raise ValidationError(f"density matrix has negative eigenvalue {eig[-1]:.3e}")
        object.__setattr__(self, "matrix", m)

    def eigenvalues(self) -> NDArray[np.float64]:
        return hermitian_eigenvalues(self.matrix)

    def expectation(self, x: ArrayLike) -> complex:
        """``Tr(rho X)``."""
        return complex(np.einsum("ab,ba->", self.matrix, as_matrix(x)))


def _check_dims(family: MPSFamily, x: LocalObservable) -> None:
    if x.d != family.d:
        raise DimensionError(f"observable has local dimension {x.d}, family has {family.d}")


def evaluate_naive(family: MPSFamily, x: LocalObservable, cap: int = DEFAULT_CAP) -> EvaluationReport:
    """State value from the explicit statevector on ``N + 1`` sites.

    Product observables are applied factor by factor to the amplitude tensor;
    dense ones act on the first ``N`` sites of the reshaped vector.
    """
    t0 = time.perf_counter()
    _check_dims(family, x)
    d, n = family.d, x.n_sites
    psi = build_statevector(family, n + 1, cap)
    if x.form == "product":
        t = psi.reshape((d,) * (n + 1))
        for k, f in enumerate(x.factors):
            t = np.moveaxis(np.tensordot(f, t, axes=(1, k)), 0, k)
        value = complex(np.vdot(psi, t.reshape(-1)))
    else:
        mat = psi.reshape(d**n, d)
        value = complex(np.vdot(mat, x.matrix @ mat))
    return EvaluationReport(value, "naive", n, time.perf_counter() - t0)


def transfer_matrix(tensors: NDArray[np.complex128], x: ArrayLike) -> NDArray[np.complex128]:
    """``sum_ij x[i, j] conj(A_i) (x) A_j`` for site tensors of shape ``(d, m, m)``."""
    m = tensors.shape[1]
    e = np.einsum("ij,iab,jcd->acbd", np.asarray(x), tensors.conj(), tensors)
    return e.reshape(m * m, m * m)


def boundary_matrix(tensors: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """``sum_l conj(A_l) (x) A_l``, the transfer matrix of the identity."""
    return transfer_matrix(tensors, np.eye(tensors.shape[0]))


def evaluate_transfer(family: MPSFamily, x: LocalObservable) -> EvaluationReport:
    """State value by transfer-matrix contraction; product observables only.

    Raises:
        UnsupportedFormError: for dense observables.
    """
    t0 = time.perf_counter()
    if x.form != "product":
        raise UnsupportedFormError("the transfer route needs a product observable")
    _check_dims(family, x)
    n = x.n_sites
    acc = transfer_matrix(family.site(1), x.factors[0])
    for k in range(2, n + 1):
        acc = acc @ transfer_matrix(family.site(k), x.factors[k - 1])
    value = complex(np.trace(acc @ boundary_matrix(family.site(n + 1))))
    return EvaluationReport(value, "transfer", n, time.perf_counter() - t0)


def conditions_hold(family: MPSFamily, tol: float = DEFAULT_TOL) -> tuple[ConditionReport, ConditionReport]:
    return check_normalization(family, tol), check_consistency(family, tol=tol)


def reduced_density_matrix(
    family: MPSFamily, n: int, cap: int = DEFAULT_CAP, check: bool = True
) -> DensityMatrix:
    """Reduced density matrix on sites ``1..n``: the last site of ``|psi_{n+1}><psi_{n+1}|`` traced out.

    Uses the unnormalized partial trace so that the result has unit trace. A
    warning is issued if the family fails either condition; the result is still
    validated as a density matrix. The cap applies to the ``d**(2n)`` entries
    of the result as well as to the statevector.
    """
    d = family.d
    check_cap(d, max(n + 1, 2 * n), cap)
    if check:
        failed = [r.condition for r in conditions_hold(family) if not r.passed]
        if failed:
            warnings.warn(f"family fails the {' and '.join(failed)} condition(s)", stacklevel=2)
    psi = build_statevector(family, n + 1, cap).reshape(d**n, d)
    return DensityMatrix(psi @ psi.conj().T, n, d)


def von_neumann_entropy(rho: DensityMatrix, base: Literal["natural", "two"] = "natural") -> float:
    """``-sum lambda log lambda`` over eigenvalues above ``1e-12``."""
    if base not in ("natural", "two"):
        raise ValueError(f"base must be 'natural' or 'two', got {base!r}")
    lam = rho.eigenvalues()
    lam = lam[lam > ENTROPY_CUTOFF]
    log = np.log if base == "natural" else np.log2
    s = float(-np.sum(lam * log(lam)))
    return max(s, 0.0)


def check_projectivity(
    family: MPSFamily,
    x: LocalObservable,
    k_max: int,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_CAP,
) -> ConditionReport:
    """Compare the state on ``X (x) 1^k`` for ``k = 0..k_max`` against ``k = 0``.

    Each value uses the naive route on ``N + k + 1`` sites, so agreement shows
    that the finite-volume values have already stabilized at ``N``. Residuals
    are ``|value_k - value_0|``; the values themselves are kept on the report.
    """
    check_cap(family.d, x.n_sites + k_max + 1, cap)
    values = tuple(evaluate_naive(family, x.padded(k), cap).value for k in range(k_max + 1))
    residuals = tuple(abs(v - values[0]) for v in values)
    sites = tuple(x.n_sites + k for k in range(k_max + 1))
    notes = f"observable on {x.n_sites} sites padded with 0..{k_max} identities"
    return ConditionReport("projectivity", sites, residuals, tol, notes, values)
