import numpy as np
import pytest

from golden import F_EIGS
from helpers import scalar
from hankel_hurwitz.eig_oracle import companion_pencil, finite_spectrum, sort_eigs
from hankel_hurwitz.errors import NotRegular
from hankel_hurwitz.instances import random_column_reduced, random_unitary
from hankel_hurwitz.matpoly import MatrixPolynomial, column_profile


def test_example_spectrum(example_f):
    rep = finite_spectrum(example_f)
    assert rep.gamma_infinity == 4
    assert rep.finite_eigs.size == 8
    assert np.abs(rep.finite_eigs - np.array(F_EIGS)).max() < 1e-3
    assert rep.inertia_imag_axis == (0, 8, 0)
    assert rep.hurwitz_stable


def test_diagonal():
    F = MatrixPolynomial.diagonal([[1, 1], [1, -2]])
    rep = finite_spectrum(F)
    np.testing.assert_allclose(np.sort(rep.finite_eigs.real), [-1, 2])
    assert rep.gamma_infinity == 0
    assert rep.inertia_imag_axis == (1, 1, 0)


def test_cubic():
    rep = finite_spectrum(scalar(1, 2, 2, 1))
    want = sort_eigs([-1, -0.5 + np.sqrt(3) / 2 * 1j, -0.5 - np.sqrt(3) / 2 * 1j])
    np.testing.assert_allclose(rep.finite_eigs, want, atol=1e-12)
    assert rep.inertia_imag_axis == (0, 3, 0)


def test_pencil_determinant(example_f):
    C, E = companion_pencil(example_f)
    for z in (0.3 + 1j, -2.0):
        lhs = np.linalg.det(z * E - C)
        rhs = np.linalg.det(example_f(z))
        assert abs(lhs - rhs) < 1e-9 * abs(rhs)


def test_singular_polynomial():
    c = np.array([[[1, 1], [1, 1]], [[1, 1], [1, 1]]], dtype=complex)
    with pytest.raises(NotRegular):
        finite_spectrum(MatrixPolynomial(c))


def test_count_and_unitary_invariance(rng):
    for _ in range(25):
        F = random_column_reduced(rng, int(rng.integers(1, 5)), 4)
        a = finite_spectrum(F).finite_eigs
        assert a.size == column_profile(F).degree_sum
        b = finite_spectrum(F.left_multiply(random_unitary(rng, F.p))).finite_eigs
        np.testing.assert_allclose(np.sort_complex(a), np.sort_complex(b), atol=1e-8 * max(1, np.abs(a).max()))


def test_sort_keeps_pairs():
    z = np.array([-1 - 2j, -1 + 1e-17 + 2j, -3])
    np.testing.assert_array_equal(sort_eigs(z), [-3, -1 + 1e-17 + 2j, -1 - 2j])
