"""Random test instances, most of them with a Hermitian Markov sequence.

* :func:`diagonal_instance` -- ``diag(f_1, ..., f_p)`` with real scalar ``f_i``
  of mixed degrees; its Markov parameters are real diagonal.
* :func:`unitary_mix` -- ``V F`` for a random unitary ``V``; normalization
  undoes ``V``, so the Markov sequence is unchanged.
* :func:`congruence_instance` -- dominant part ``V^{-*} diag(d_i)`` and
  subordinated part ``V diag(s_i)`` built from the splits of real scalars;
  the Markov parameters ``V diag(.) V^*`` are Hermitian but not diagonal.
* :func:`monic_hermitian_instance` -- ``U diag(f_i) U^*`` with monic ``f_i``.
* :func:`random_column_reduced` -- generic complex input, no Hermitian structure.
"""
from __future__ import annotations

import numpy as np
from scipy.stats import unitary_group

from .matpoly import MatrixPolynomial
from .split import lift, split_column


def random_unitary(rng: np.random.Generator, p: int) -> np.ndarray:
    if p == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return unitary_group.rvs(p, random_state=rng)


def real_poly(
    rng: np.random.Generator,
    degree: int,
    stable: bool | None = None,
    axis_gap: float = 1e-3,
    scale: float = 2.0,
) -> np.ndarray:
    """Real polynomial (descending coefficients) from random roots.

    Roots have ``|Re| >= axis_gap``.  ``stable=True`` puts every root in the
    open left half-plane, ``False`` forces at least one into the right one,
    ``None`` picks signs at random.
    """
    roots = []
    while len(roots) < degree:
        re = rng.uniform(axis_gap, scale)
        if stable is None:
            re *= rng.choice([-1.0, 1.0])
        elif stable:
            re = -re
        else:
            re *= rng.choice([-1.0, 1.0])
        if degree - len(roots) >= 2 and rng.random() < 0.5:
            im = rng.uniform(0.1, scale)
            roots += [re + 1j * im, re - 1j * im]
        else:
            roots.append(re + 0j)
    if stable is False and degree and all(r.real < 0 for r in roots):
        roots[0] = complex(-roots[0].real, roots[0].imag)
        if roots[0].imag and len(roots) > 1:
            roots[1] = roots[0].conjugate()
    lead = rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0])
    return lead * np.real(np.poly(roots)) if degree else np.array([lead])


def _degrees(rng, p: int, max_degree: int, min_degree: int = 0) -> list[int]:
    degs = list(rng.integers(min_degree, max_degree + 1, size=p))
    if max(degs) == 0:
        degs[int(rng.integers(p))] = int(rng.integers(1, max_degree + 1))
    return [int(d) for d in degs]


def diagonal_instance(
    rng: np.random.Generator, p: int, max_degree: int, stable: bool | None = None
) -> MatrixPolynomial:
    degs = _degrees(rng, p, max_degree)
    if stable is None:
        polys = [real_poly(rng, d) for d in degs]
    elif stable:
        polys = [real_poly(rng, d, stable=True) for d in degs]
    else:
        bad = int(np.argmax(degs))
        polys = [real_poly(rng, d, stable=(False if k == bad else None)) for k, d in enumerate(degs)]
    return MatrixPolynomial.diagonal(polys)


def unitary_mix(rng: np.random.Generator, F: MatrixPolynomial) -> MatrixPolynomial:
    return F.left_multiply(random_unitary(rng, F.p))


def _well_conditioned(rng, p: int, max_cond: float = 20.0) -> np.ndarray:
    while True:
        V = rng.standard_normal((p, p)) + 1j * rng.standard_normal((p, p))
        if np.linalg.cond(V) < max_cond:
            return V


def congruence_instance(
    rng: np.random.Generator, p: int, max_degree: int, stable: bool | None = None
) -> MatrixPolynomial:
    """Nonmonic, non-diagonal instance with Hermitian Markov parameters ``V diag(.) V^*``."""
    scalars = diagonal_instance(rng, p, max_degree, stable)
    degs = [max(i for i in range(scalars.degree + 1) if scalars.coeff(i)[k, k] != 0) for k in range(p)]
    n = max(degs) // 2
    d = np.zeros((n + 1, p, p), dtype=complex)
    s = np.zeros_like(d)
    for k, c in enumerate(degs):
        col = np.array([scalars.coeff(e)[k, k] for e in range(c, -1, -1)])
        dom, sub = split_column(col)
        d[n + 1 - dom.shape[0]:, k, k] = dom[:, 0]
        s[n + 1 - sub.shape[0]:, k, k] = sub[:, 0]
    V = _well_conditioned(rng, p)
    fd = MatrixPolynomial(d).left_multiply(np.linalg.inv(V).conj().T)
    fs = MatrixPolynomial(s).left_multiply(V)
    parity = [bool(c % 2) for c in degs]
    return lift(fd, parity) + lift(fs, parity, drop=1)


def monic_hermitian_instance(
    rng: np.random.Generator, p: int, degree: int, stable: bool | None = None
) -> MatrixPolynomial:
    polys = []
    for k in range(p):
        st = stable if (stable is not False or k == 0) else None
        f = real_poly(rng, degree, stable=st)
        polys.append(f / f[0])
    U = random_unitary(rng, p)
    D = MatrixPolynomial.diagonal(polys)
    return MatrixPolynomial(np.einsum("ij,kjl,ml->kim", U, D.coeffs, U.conj()))


def random_column_reduced(
    rng: np.random.Generator,
    p: int,
    max_degree: int,
    hermitian_s0: bool = False,
) -> MatrixPolynomial:
    """Complex Gaussian coefficients below random column degrees.

    With ``hermitian_s0`` every column degree is at least 1 and the second
    highest column coefficients are chosen as ``H F_hcdc`` for a Hermitian
    ``H``, which makes ``s_0`` Hermitian.
    """
    degs = _degrees(rng, p, max_degree, min_degree=1 if hermitian_s0 else 0)
    n = max(degs)
    c = np.zeros((n + 1, p, p), dtype=complex)
    for k, d in enumerate(degs):
        c[n - d:, :, k] = rng.standard_normal((d + 1, p)) + 1j * rng.standard_normal((d + 1, p))
    if hermitian_s0:
        hcdc = np.column_stack([c[n - d, :, k] for k, d in enumerate(degs)])
        X = rng.standard_normal((p, p)) + 1j * rng.standard_normal((p, p))
        H = X + X.conj().T
        B0 = H @ hcdc
        for k, d in enumerate(degs):
            c[n - d + 1, :, k] = B0[:, k]
    return MatrixPolynomial(c)
