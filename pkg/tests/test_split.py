import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import FD, FS
from helpers import scalar
from hankel_hurwitz.errors import DegreeZero, NotNormalized
from hankel_hurwitz.instances import random_column_reduced
from hankel_hurwitz.matpoly import MatrixPolynomial, column_profile
from hankel_hurwitz.normalize import qr_normalize
from hankel_hurwitz.split import dominant_subordinate, split, split_column


def _col(*c):
    return np.array(c, dtype=complex)[:, None]


@pytest.mark.parametrize(
    "f, dom, sub",
    [
        ((1, 3, 2), (1, 2), (3, 0)),
        ((1, 2, 2, 1), (1, 2), (2, 1)),
        ((5,), (5,), (0,)),
    ],
)
def test_split_column(f, dom, sub):
    d, s = split_column(_col(*f))
    np.testing.assert_array_equal(np.trim_zeros(d.ravel(), "f"), np.trim_zeros(np.array(dom, complex), "f"))
    np.testing.assert_array_equal(np.atleast_1d(s.ravel())[-len(sub):], np.array(sub, complex))


def test_example_parts(example_f):
    fd, fs = dominant_subordinate(example_f)
    np.testing.assert_array_equal(fd.coeffs, FD)
    np.testing.assert_array_equal(fs.coeffs, FS)


def test_example_integers(example_f):
    sr = split(qr_normalize(example_f).f_norm)
    assert (sr.m, sr.l, sr.t) == (1, 2, 1)
    assert sr.cdeg_fd == (1, 1, 1, 0)


def test_scalar_even():
    sr = split(scalar(1, 3, 2))
    assert sr.A[:, 0, 0].tolist() == [1, 2]
    assert sr.B[0, 0, 0] == 3
    assert (sr.m, sr.l, sr.t) == (1, 1, 0)


def test_rejects_unnormalized(example_f):
    with pytest.raises(NotNormalized):
        split(example_f)
    split(example_f, check_normalized=False)


def test_degree_zero():
    with pytest.raises(DegreeZero):
        split(MatrixPolynomial.identity(2))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_structure(p, n, seed):
    F = random_column_reduced(np.random.default_rng(seed), p, n)
    nrm = qr_normalize(F)
    sr = split(nrm.f_norm, cdeg=nrm.cdeg)
    G = nrm.f_norm
    recon = sr.dominant_term() + sr.subordinated_term()
    deg = max(recon.degree, G.degree)
    assert np.abs(recon.padded(deg).coeffs - G.padded(deg).coeffs).max() < 1e-12 * np.abs(G.coeffs).max()
    assert sr.cdeg_fd == tuple(c // 2 for c in nrm.cdeg)
    assert sr.fd.degree == sr.m
    prof = column_profile(sr.fd, cdeg=sr.cdeg_fd)
    np.testing.assert_array_equal(prof.hcdc, column_profile(G, cdeg=nrm.cdeg).hcdc)
    for coef in (sr.A, sr.B):
        for k in range(coef.shape[0]):
            for j, c in enumerate(sr.cdeg_fd):
                if k > c:
                    assert not coef[k][:, j].any()
