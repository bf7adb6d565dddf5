import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import CDEG, F_EIGS
from helpers import random_poly, scalar
from hankel_hurwitz.eig_oracle import finite_spectrum
from hankel_hurwitz.errors import EmptyPolynomial, ZeroColumn
from hankel_hurwitz.instances import random_column_reduced
from hankel_hurwitz.matpoly import (
    MatrixPolynomial,
    adjoint_vee,
    column_degrees,
    column_profile,
    evaluate,
    reversal,
)


def test_example_profile(example_f):
    prof = column_profile(example_f)
    assert prof.cdeg == CDEG
    assert prof.column_reduced
    assert prof.degree_sum == 8


def test_identity_profile():
    prof = column_profile(MatrixPolynomial.identity(3))
    assert prof.cdeg == (0, 0, 0)
    np.testing.assert_array_equal(prof.hcdc, np.eye(3))
    assert prof.column_reduced


def test_scalar_profile():
    prof = column_profile(scalar(1, 3, 2))
    assert prof.cdeg == (2,)
    np.testing.assert_array_equal(prof.hcdc, [[1]])


def test_not_column_reduced():
    # both columns lead with the same vector
    F = MatrixPolynomial(np.array([[[1, 1], [1, 1]], [[0, 1], [2, 0]]], dtype=complex))
    assert not column_profile(F).column_reduced


def test_zero_column_rejected():
    F = MatrixPolynomial(np.array([[[1, 0], [0, 0]], [[1, 0], [1, 0]]], dtype=complex))
    with pytest.raises(ZeroColumn):
        column_degrees(F)


def test_rejects_bad_input():
    with pytest.raises(EmptyPolynomial):
        MatrixPolynomial(np.zeros((0, 2, 2)))
    with pytest.raises(ValueError):
        MatrixPolynomial(np.full((1, 2, 2), np.nan))


def test_zero_tol_is_relative_per_column():
    F = MatrixPolynomial(np.array([[[1e-14, 0], [0, 0]], [[1, 0], [0, 1]]], dtype=complex))
    assert column_degrees(F) == (0, 0)
    assert column_degrees(F, zero_tol=1e-15) == (1, 0)


def test_adjoint_vee_trivial():
    I3 = MatrixPolynomial.identity(3)
    np.testing.assert_array_equal(adjoint_vee(I3).coeffs, I3.coeffs)
    np.testing.assert_array_equal(adjoint_vee(scalar(1j, 1)).coeffs.ravel(), [-1j, 1])


def test_adjoint_vee_pointwise(rng):
    F = random_poly(rng, 3, 4)
    Fv = adjoint_vee(F)
    for z in rng.standard_normal(20) + 1j * rng.standard_normal(20):
        assert np.abs(Fv(z) - F(np.conj(z)).conj().T).max() < 1e-12 * max(1, np.abs(F(z)).max())


def test_reversal_trivial():
    np.testing.assert_array_equal(reversal(scalar(1, 3, 2)).coeffs.ravel(), [2, 3, 1])
    np.testing.assert_array_equal(reversal(MatrixPolynomial.identity(2)).coeffs, np.eye(2)[None])


def test_reversal_pointwise(rng):
    F = random_poly(rng, 2, 5)
    R = reversal(F)
    for z in [0.3 + 0.7j, -2.0, 1.5j]:
        lhs, rhs = R(z), z ** 5 * F(1 / z)
        assert np.linalg.norm(lhs - rhs) < 1e-10 * np.linalg.norm(rhs)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 2**32 - 1))
def test_involutions(p, n, seed):
    F = random_poly(np.random.default_rng(seed), p, n)
    np.testing.assert_array_equal(reversal(reversal(F)).coeffs, F.coeffs)
    np.testing.assert_array_equal(adjoint_vee(adjoint_vee(F)).coeffs, F.coeffs)


def test_evaluate():
    np.testing.assert_array_equal(evaluate(MatrixPolynomial.identity(2), 3 + 1j), np.eye(2))
    assert evaluate(scalar(1, 3, 2), -1)[0, 0] == 0


def test_example_singular_at_eigenvalues(example_f):
    for lam in F_EIGS:
        sv = np.linalg.svd(evaluate(example_f, lam), compute_uv=False)
        assert sv[-1] < 1e-2 * sv[0]


def test_degree_sum_matches_spectrum(rng):
    for _ in range(25):
        F = random_column_reduced(rng, int(rng.integers(1, 5)), 4)
        prof = column_profile(F)
        assert prof.column_reduced
        assert finite_spectrum(F).finite_eigs.size == prof.degree_sum


def test_profile_scale_invariant(example_f):
    a, b = column_profile(example_f), column_profile(example_f * (-3.5 + 2j))
    assert a.cdeg == b.cdeg and a.column_reduced == b.column_reduced
    np.testing.assert_allclose(b.hcdc, (-3.5 + 2j) * a.hcdc)


def test_polynomial_product():
    P = scalar(1, 1) @ scalar(1, 2)
    np.testing.assert_array_equal(P.coeffs.ravel(), [1, 3, 2])
