import numpy as np
import pytest

from qlmps import (
    DimensionError,
    LocalObservable,
    ProjectorFamilySpec,
    ValidationError,
    build_statevector,
    check_consistency,
    check_normalization,
    evaluate_naive,
    evaluate_transfer,
    ghz_expectation_closed_form,
    ghz_family,
    projector_family,
    reduced_density_matrix,
)

from conftest import I2, P0, P1, SQRT1_2, X, Z, crand


def test_ghz_tensors():
    fam = ghz_family()
    np.testing.assert_array_equal(fam.site(1)[0], SQRT1_2 * P0)
    np.testing.assert_array_equal(fam.site(9)[1], P1)
    assert fam.tail == "repeat_last" and fam.d == 2 and fam.m == 2


def test_ghz_statevector_n4():
    expected = np.zeros(16)
    expected[[0, 15]] = SQRT1_2
    np.testing.assert_array_equal(build_statevector(ghz_family(), 4), expected)


def test_ghz_conditions_at_float_precision():
    fam = ghz_family()
    assert check_normalization(fam, tol=1e-15).passed
    assert check_consistency(fam, tol=1e-15).passed


def test_projector_family_three_levels():
    c = 1 / np.sqrt(3)
    fam = projector_family(ProjectorFamilySpec(3, 3, (c, c, c)))
    expected = np.zeros(9)
    expected[[0, 4, 8]] = c
    np.testing.assert_allclose(build_statevector(fam, 2), expected, atol=1e-16)


def test_projector_family_reproduces_ghz():
    fam = projector_family(ProjectorFamilySpec(2, 2, (SQRT1_2, SQRT1_2)))
    ghz = ghz_family()
    for n in (1, 2, 3):
        np.testing.assert_array_equal(fam.site(n), ghz.site(n))


def test_projector_family_m4_d2():
    fam = projector_family(ProjectorFamilySpec(4, 2, (0.6, 0.8)))
    assert check_consistency(fam, tol=0.0).residuals == (0.0, 0.0, 0.0)


def test_projector_spec_validation():
    with pytest.raises(ValidationError):
        ProjectorFamilySpec(3, 2, (0.6, 0.7))
    with pytest.raises(ValueError):
        ProjectorFamilySpec(2, 3, (0.6, 0.8, 0.0))
    with pytest.raises(DimensionError):
        ProjectorFamilySpec(3, 2, (1.0,))


@pytest.mark.parametrize("seed", range(25))
def test_random_projector_families_pass(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, 6))
    d = int(rng.integers(1, m + 1))
    fam = projector_family(ProjectorFamilySpec.random(rng, m, d))
    assert check_normalization(fam, 1e-12).passed
    assert check_consistency(fam, tol=1e-12).passed


@pytest.mark.parametrize("seed", range(6))
def test_projector_rho_is_diagonal(seed):
    rng = np.random.default_rng(seed)
    m, d = 3, 2 + seed % 2
    spec = ProjectorFamilySpec.random(rng, m, d)
    n = 1 + seed % 4
    rho = reduced_density_matrix(projector_family(spec), n).matrix
    expected = np.zeros(d**n)
    for ell, c in enumerate(spec.first_site_coefficients):
        expected[sum(ell * d**p for p in range(n))] = abs(c) ** 2
    np.testing.assert_allclose(rho, np.diag(expected), atol=1e-14)


def test_closed_form_examples():
    assert ghz_expectation_closed_form([Z, Z]) == 1
    assert ghz_expectation_closed_form([I2] * 5) == 1
    assert ghz_expectation_closed_form([X, X]) == 0
    with pytest.raises(DimensionError):
        ghz_expectation_closed_form([np.eye(3)])
    with pytest.raises(ValueError):
        ghz_expectation_closed_form([])


def test_closed_form_matches_both_routes():
    rng = np.random.default_rng(7)
    fam = ghz_family()
    for _ in range(50):
        n = int(rng.integers(1, 7))
        factors = [crand(rng, 2, 2) for _ in range(n)]
        x = LocalObservable.product(factors)
        want = ghz_expectation_closed_form(factors)
        for got in (evaluate_naive(fam, x).value, evaluate_transfer(fam, x).value):
            assert abs(got - want) <= 1e-12 + 1e-10 * abs(want)
