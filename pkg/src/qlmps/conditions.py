"""Sufficient conditions for extending an MPS family to an infinite-chain state.

Two hypotheses are checked numerically:

* normalization of the first site, ``sum_i |Tr A_i^[1]|^2 = 1``;
* the consistency identity between neighbouring sites,
  ``sum_j (A_j^[n+1])^dag (A_i^[n])^dag (x) A_i^[n] A_j^[n+1] = (A_i^[n])^dag (x) A_i^[n]``
  for every ``n`` and ``i``.

The two-trace identity used to turn products of traces into a single trace is
exposed as :func:`trace_identity_sides` / :func:`verify_trace_identity`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import ATOL, RTOL, chain_product, dagger, kron
from .mps import MPSFamily

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one numerical check.

    ``passed`` is true iff every residual is at most ``tolerance``.
    """

    condition: str
    checked_sites: tuple[int, ...]
    residuals: tuple[float, ...]
    tolerance: float
    notes: str = ""
    values: tuple[complex, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.checked_sites) != len(self.residuals):
            raise ValueError("checked_sites and residuals must have equal length")

    @property
    def passed(self) -> bool:
        return all(r <= self.tolerance for r in self.residuals)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def normalization_sums(family: MPSFamily) -> tuple[float, float]:
    """Return ``(s1, s2)`` with ``s1 = sum_i |Tr A_i^[1]|`` and ``s2 = sum_i |Tr A_i^[1]|^2``."""
    traces = np.abs(np.trace(family.site(1), axis1=1, axis2=2))
    return float(traces.sum()), float((traces**2).sum())


def check_normalization(family: MPSFamily, tol: float = DEFAULT_TOL) -> ConditionReport:
    """Gate on the squared sum ``s2``; the unsquared ``s1`` is reported in the notes.

    ``s2`` equals the squared norm of the one-site state, which is what the
    state construction needs to be normalized. ``s1`` is kept for comparison.
    """
    s1, s2 = normalization_sums(family)
    notes = f"s1 = sum_i |Tr A_i^[1]| = {s1!r}; s2 = sum_i |Tr A_i^[1]|^2 = {s2!r}; gated on |s2 - 1|"
    return ConditionReport("normalization", (1,), (abs(s2 - 1.0),), tol, notes)


def consistency_defect(family: MPSFamily, n: int) -> float:
    """Largest Frobenius norm over ``i`` of LHS - RHS of the consistency identity at site ``n``."""
    here, nxt = family.site(n), family.site(n + 1)
    worst = 0.0
    for a in here:
        a_dag = dagger(a)
        lhs = sum(kron(dagger(b) @ a_dag, a @ b) for b in nxt)
        worst = max(worst, float(np.linalg.norm(lhs - kron(a_dag, a))))
    return worst


def default_consistency_range(family: MPSFamily) -> int:
    """Number of sites to check so every distinct neighbour pair is covered."""
    if family.tail == "repeat_last":
        return family.n_explicit + 1
    return family.n_explicit - 1


def check_consistency(family: MPSFamily, n_max: int | None = None, tol: float = DEFAULT_TOL) -> ConditionReport:
    """Check the neighbour consistency identity for ``n = 1..n_max``.

    For ``repeat_last`` families every pair past the explicit sites repeats the
    pair ``(last, last)``, so a passing check up to ``n_explicit`` covers all
    ``n``. The default ``n_max`` goes one site further.

    Raises:
        SiteRangeError: if site ``n_max + 1`` does not exist in a finite family.
    """
    if n_max is None:
        n_max = default_consistency_range(family)
    sites = tuple(range(1, n_max + 1))
    residuals = tuple(consistency_defect(family, n) for n in sites)
    if not sites:
        notes = "single-site finite family: no neighbour pairs to check"
    elif family.tail == "repeat_last" and n_max >= family.n_explicit:
        notes = f"repeat_last tail: sites 1..{n_max} cover every neighbour pair"
        if all(r <= tol for r in residuals):
            notes += ", so the identity holds for all n"
    else:
        notes = f"checked n = 1..{n_max} only"
    return ConditionReport("consistency", sites, residuals, tol, notes)


def _split_product(family: MPSFamily, idx: Sequence[int], start: int, stop: int, adjoint: bool):
    """Product of the site tensors for sites ``start..stop`` (1-based, inclusive).

    With ``adjoint`` the factors are daggered and multiplied in reverse site order.
    """
    mats = [family.site(s)[idx[s - 1]] for s in range(start, stop + 1)]
    if adjoint:
        mats = [dagger(a) for a in reversed(mats)]
    return chain_product(mats)


def trace_identity_sides(
    family: MPSFamily, n: int, k: int, i_idx: Sequence[int], j_idx: Sequence[int]
) -> tuple[complex, complex]:
    """Both sides of the two-trace splitting identity for configurations ``i`` and ``j``.

    Left: ``conj(Tr(A_i1 ... A_i(n+k))) * Tr(A_j1 ... A_j(n+k))``.

    Right: ``Tr[(L_i^dag (x) L_j) (T_i^dag (x) T_j)]`` where ``L`` is the product over
    the first ``n`` sites and ``T`` over the remaining ``k``; the daggered factors
    run in reverse site order. When the tails of ``i`` and ``j`` coincide the right
    factor becomes ``T_i^dag (x) T_i``.
    """
    total = n + k
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be positive, got n={n}, k={k}")
    for name, idx in (("i", i_idx), ("j", j_idx)):
        if len(idx) != total:
            raise ValueError(f"{name} has length {len(idx)}, expected n + k = {total}")
        if any(not 0 <= x < family.d for x in idx):
            raise ValueError(f"{name} has entries outside 0..{family.d - 1}")
    lhs = np.conj(np.trace(_split_product(family, i_idx, 1, total, False))) * np.trace(
        _split_product(family, j_idx, 1, total, False)
    )
    head = kron(_split_product(family, i_idx, 1, n, True), _split_product(family, j_idx, 1, n, False))
    tail = kron(_split_product(family, i_idx, n + 1, total, True), _split_product(family, j_idx, n + 1, total, False))
    rhs = np.trace(head @ tail)
    return complex(lhs), complex(rhs)


def verify_trace_identity(
    family: MPSFamily,
    n: int,
    k: int,
    tuples: tuple[Sequence[int], Sequence[int]],
    tol: float = RTOL,
    atol: float = ATOL,
) -> bool:
    """True iff both sides agree within ``atol + tol * |rhs|``."""
    lhs, rhs = trace_identity_sides(family, n, k, *tuples)
    return abs(lhs - rhs) <= atol + tol * abs(rhs)
