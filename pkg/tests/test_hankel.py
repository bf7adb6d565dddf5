import numpy as np
import pytest

from golden import H0, H1
from helpers import scalar
from hankel_hurwitz.eig_oracle import finite_spectrum
from hankel_hurwitz.errors import SequenceTooShort
from hankel_hurwitz.hankel import assemble_hankel, hankel_blocks, index_sets
from hankel_hurwitz.instances import monic_hermitian_instance, random_column_reduced
from hankel_hurwitz.markov import make_sequence
from hankel_hurwitz.matpoly import column_profile
from hankel_hurwitz.stability import analyze


def test_example_index_sets(example_f):
    idx = analyze(example_f).index_sets
    assert idx.tilde_labels(0) == (1, 2, 3, 4)
    assert idx.tilde_labels(1) == (1,)
    assert idx.labels(0) == (1, 2, 3)
    assert idx.labels(1) == ()


def test_example_matrices(example_f):
    h = analyze(example_f).hankel
    assert h.sizes == (5, 3)
    assert np.abs(h.h0 - H0).max() < 1e-9
    assert np.abs(h.h1 - H1).max() < 1e-9
    assert h.block_offsets_h0 == (0, 4, 5)


@pytest.mark.parametrize(
    "coeffs, h0, h1",
    [
        ((1, 3, 2), [[3]], [[6]]),
        ((1, 2, 2, 1), [[2, 3], [3, 6]], [[3]]),
        ((1, 1), [[1]], np.zeros((0, 0))),
    ],
)
def test_scalar_matrices(coeffs, h0, h1):
    h = analyze(scalar(*coeffs)).hankel
    np.testing.assert_allclose(h.h0, h0, atol=1e-13)
    np.testing.assert_allclose(h.h1, np.asarray(h1), atol=1e-13)


def test_odd_scalar_index_sets():
    idx = analyze(scalar(1, 2, 2, 1)).index_sets
    assert idx.tilde_labels(0) == idx.tilde_labels(1) == (1,)
    assert idx.labels(0) == (1,)


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5])
def test_monic_index_sets(rng, degree):
    F = monic_hermitian_instance(rng, 3, degree)
    idx = analyze(F).index_sets
    full = (0, 1, 2)
    m = degree // 2
    for i in range(m):
        assert idx.I(i) == full and idx.I_tilde(i) == full
    if degree % 2:
        assert idx.I_tilde(m) == full


def test_sizes_match_spectrum(rng):
    for _ in range(40):
        F = random_column_reduced(rng, int(rng.integers(1, 4)), int(rng.integers(1, 6)))
        a = analyze(F)
        total = sum(a.hankel.sizes)
        assert total == column_profile(F).degree_sum == finite_spectrum(F).finite_eigs.size


def test_antidiagonal_reextraction(rng):
    for _ in range(20):
        F = random_column_reduced(rng, 3, 5)
        a = analyze(F)
        sets0, sets1 = hankel_blocks(a.split, a.index_sets)
        for H, sets, offs, shift in (
            (a.hankel.h0, sets0, a.hankel.block_offsets_h0, 0),
            (a.hankel.h1, sets1, a.hankel.block_offsets_h1, 1),
        ):
            for i, ri in enumerate(sets):
                for j, cj in enumerate(sets):
                    block = H[offs[i]:offs[i + 1], offs[j]:offs[j + 1]]
                    np.testing.assert_array_equal(block, a.sequence[i + j + shift][np.ix_(ri, cj)])


def test_sequence_too_short(example_f):
    a = analyze(example_f)
    with pytest.raises(SequenceTooShort):
        assemble_hankel(make_sequence(a.sequence.params[:2]), a.index_sets, a.split)
