from __future__ import annotations

import itertools

import numpy as np
import pytest

from qlmps import MPSFamily, amplitude, ghz_family

SQRT1_2 = 1 / np.sqrt(2)

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
P0 = np.diag([1, 0]).astype(complex)
P1 = np.diag([0, 1]).astype(complex)


def crand(rng: np.random.Generator, *shape: int) -> np.ndarray:
    """Entries uniform in the complex unit square."""
    return rng.uniform(size=shape) + 1j * rng.uniform(size=shape)


def random_family(rng: np.random.Generator, d: int, m: int, n_sites: int, tail: str = "finite") -> MPSFamily:
    return MPSFamily(tuple(crand(rng, d, m, m) for _ in range(n_sites)), tail)


def random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2


def brute_force_state(family: MPSFamily, factors) -> complex:
    """State value by the explicit sum over bra, ket and traced indices, using amplitude() only."""
    n, d = len(factors), family.d
    total = 0j
    for i in itertools.product(range(d), repeat=n):
        for j in itertools.product(range(d), repeat=n):
            x = np.prod([factors[k][i[k], j[k]] for k in range(n)])
            if x == 0:
                continue
            for ell in range(d):
                total += np.conj(amplitude(family, i + (ell,))) * amplitude(family, j + (ell,)) * x
    return total


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def ghz() -> MPSFamily:
    return ghz_family()


@pytest.fixture
def broken() -> MPSFamily:
    """GHZ except that site 2 carries two identities."""
    g = ghz_family()
    return MPSFamily((g.site(1), np.stack([I2, I2]), g.site(2)), "repeat_last")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
