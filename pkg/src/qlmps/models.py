"""Built-in families: the GHZ chain and diagonal-projector generalizations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike

from .conditions import check_consistency, check_normalization
from .errors import DimensionError, ValidationError
from .linalg import as_matrix
from .mps import MPSFamily

SPEC_TOL = 1e-12


def _projectors(d: int, m: int) -> np.ndarray:
    """``|i><i|`` in ``C^m`` for ``i < d``, shape ``(d, m, m)``."""
    p = np.zeros((d, m, m), dtype=np.complex128)
    p[np.arange(d), np.arange(d), np.arange(d)] = 1.0
    return p


def ghz_family() -> MPSFamily:
    """Two-site description of the GHZ chain.

    Site 1 carries ``diag(1, 0) / sqrt(2)`` and ``diag(0, 1) / sqrt(2)``; every
    later site carries the bare projectors ``diag(1, 0)`` and ``diag(0, 1)``.
    """
    p = _projectors(2, 2)
    return MPSFamily((p / np.sqrt(2), p), "repeat_last")


@dataclass(frozen=True)
class ProjectorFamilySpec:
    """Bond dimension ``m``, local dimension ``d <= m`` and first-site weights ``c``.

    The weights must satisfy ``sum |c_i|^2 = 1``.
    """

    m: int
    d: int
    first_site_coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.d > self.m:
            raise ValueError(f"need d <= m, got d={self.d}, m={self.m}")
        if len(self.first_site_coefficients) != self.d:
            raise DimensionError(f"{len(self.first_site_coefficients)} coefficients for d={self.d}")
        total = float(np.sum(np.abs(np.asarray(self.first_site_coefficients)) ** 2))
        if abs(total - 1.0) > SPEC_TOL:
            raise ValidationError(f"sum |c_i|^2 = {total!r}, expected 1")

    @classmethod
    def random(cls, rng: np.random.Generator, m: int, d: int) -> ProjectorFamilySpec:
        c = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        return cls(m, d, tuple(c / np.linalg.norm(c)))


def projector_family(spec: ProjectorFamilySpec) -> MPSFamily:
    """Site 1: ``c_i |i><i|``; later sites: ``|i><i|``.

    Mutual orthogonality of the projectors makes the consistency identity hold
    exactly; both conditions are re-checked before returning.
    """
    p = _projectors(spec.d, spec.m)
    c = np.asarray(spec.first_site_coefficients, dtype=np.complex128)
    family = MPSFamily((c[:, None, None] * p, p), "repeat_last")
    for report in (check_normalization(family, SPEC_TOL), check_consistency(family, tol=SPEC_TOL)):
        if not report.passed:
            raise ValidationError(f"projector family fails {report.condition}: {report.residuals}")
    return family


def collapsing_family() -> MPSFamily:
    """GHZ first site followed by a tail that maps both indices to ``diag(1, 0)``.

    Normalized at site 1 but violates the consistency identity, so the
    finite-volume values of the state drift as sites are added.
    """
    p = _projectors(2, 2)
    tail = np.stack([p[0], p[0]])
    return MPSFamily((p / np.sqrt(2), tail), "repeat_last")


def ghz_expectation_closed_form(factors: Sequence[ArrayLike]) -> complex:
    """``(prod_k <0|X_k|0> + prod_k <1|X_k|1>) / 2`` for 2x2 factors."""
    mats = [as_matrix(f) for f in factors]
    if not mats:
        raise ValueError("need at least one factor")
    for k, f in enumerate(mats, start=1):
        if f.shape != (2, 2):
            raise DimensionError(f"factor {k} has shape {f.shape}, expected (2, 2)")
    zeros = np.prod([f[0, 0] for f in mats])
    ones = np.prod([f[1, 1] for f in mats])
    return complex(0.5 * (zeros + ones))
