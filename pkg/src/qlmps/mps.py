"""Site-dependent MPS families with periodic trace closure.

A family holds, for each explicit site ``n``, ``d`` square matrices of side
``m`` stored as one array of shape ``(d, m, m)``. Physical indices are 0-based
here; index ``i`` corresponds to the basis vector ``|i>`` (the 1-based label
``i + 1`` in mathematical notation).

The amplitude of a basis configuration ``(i_1, ..., i_n)`` is the unnormalized
trace ``Tr(A[i_1]^(1) A[i_2]^(2) ... A[i_n]^(n))``. Statevectors are ordered
lexicographically with ``i_1`` the most significant digit, which coincides with
``numpy`` C-order for a tensor of shape ``(d,) * n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DimensionError, ResourceError, SiteRangeError
from .linalg import chain_product

Tail = Literal["repeat_last", "finite"]
TAILS = ("repeat_last", "finite")

DEFAULT_CAP = 2**20


def _frozen(a: NDArray) -> NDArray:
    a = np.array(a, dtype=np.complex128)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class MPSFamily:
    """Family of site tensors ``A_i^[n]`` with a rule for sites past the explicit ones.

    Attributes:
        sites: Tuple of arrays, one per explicit site, each of shape ``(d, m, m)``.
        tail: ``"repeat_last"`` reuses the last explicit site for every later site;
            ``"finite"`` makes later sites an error.
    """

    sites: tuple[NDArray[np.complex128], ...]
    tail: Tail = "repeat_last"

    def __post_init__(self) -> None:
        if self.tail not in TAILS:
            raise ValueError(f"tail must be one of {TAILS}, got {self.tail!r}")
        if len(self.sites) == 0:
            raise ValueError("a family needs at least one explicit site")
        sites = tuple(_frozen(s) for s in self.sites)
        first = sites[0]
        if first.ndim != 3 or first.shape[1] != first.shape[2] or 0 in first.shape:
            raise DimensionError(f"site 1 must have shape (d, m, m), got {first.shape}")
        for n, s in enumerate(sites, start=1):
            if s.shape != first.shape:
                raise DimensionError(f"site {n} has shape {s.shape}, expected {first.shape}")
        object.__setattr__(self, "sites", sites)

    @classmethod
    def from_matrices(cls, sites: Sequence[Sequence[ArrayLike]], tail: Tail = "repeat_last") -> MPSFamily:
        """Build from nested lists: ``sites[n][i]`` is the matrix for site ``n + 1``, index ``i``."""
        return cls(tuple(np.array([np.asarray(a, dtype=np.complex128) for a in s]) for s in sites), tail)

    @property
    def d(self) -> int:
        return self.sites[0].shape[0]

    @property
    def m(self) -> int:
        return self.sites[0].shape[1]

    @property
    def n_explicit(self) -> int:
        return len(self.sites)

    def max_site(self) -> int | None:
        """Largest resolvable site, or ``None`` when every site resolves."""
        return self.n_explicit if self.tail == "finite" else None

    def site(self, n: int) -> NDArray[np.complex128]:
        """Tensors of site ``n`` (1-based), shape ``(d, m, m)``."""
        if n < 1:
            raise SiteRangeError(f"sites are numbered from 1, got {n}")
        if n <= self.n_explicit:
            return self.sites[n - 1]
        if self.tail == "finite":
            raise SiteRangeError(f"site {n} is beyond the last explicit site {self.n_explicit} of a finite family")
        return self.sites[-1]

    def scaled(self, n: int, c: complex) -> MPSFamily:
        """Copy with every tensor of explicit site ``n`` multiplied by ``c``."""
        sites = list(self.sites)
        sites[n - 1] = sites[n - 1] * c
        return MPSFamily(tuple(sites), self.tail)


def site(family: MPSFamily, n: int) -> NDArray[np.complex128]:
    return family.site(n)


def amplitude(family: MPSFamily, indices: Sequence[int]) -> complex:
    """``Tr(A[i_1]^(1) ... A[i_n]^(n))`` for 0-based physical indices."""
    if len(indices) == 0:
        raise ValueError("indices must be non-empty")
    mats = []
    for n, i in enumerate(indices, start=1):
        if not 0 <= i < family.d:
            raise ValueError(f"index {i} at site {n} is outside 0..{family.d - 1}")
        mats.append(family.site(n)[i])
    return complex(np.trace(chain_product(mats)))


def check_cap(d: int, n: int, cap: int) -> None:
    if d**n > cap:
        raise ResourceError(f"{d}^{n} = {d**n} amplitudes exceeds the cap of {cap}")


def build_statevector(family: MPSFamily, n: int, cap: int = DEFAULT_CAP) -> NDArray[np.complex128]:
    """All ``d**n`` amplitudes of the ``n``-site state, lexicographically ordered.

    The matrix products are accumulated left to right, the same order used by
    :func:`amplitude`, so both agree on every configuration.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_cap(family.d, n, cap)
    family.site(n)
    # prod[c] is the running product for configuration c of the first k sites
    prod = family.site(1).copy()
    m = family.m
    for k in range(2, n + 1):
        prod = np.matmul(prod[:, None, :, :], family.site(k)[None, :, :, :]).reshape(-1, m, m)
    return np.trace(prod, axis1=1, axis2=2).copy()


def norm_squared(family: MPSFamily, n: int, cap: int = DEFAULT_CAP) -> float:
    """``sum |amplitude|^2`` over all ``n``-site configurations."""
    psi = build_statevector(family, n, cap)
    return float(np.vdot(psi, psi).real)
