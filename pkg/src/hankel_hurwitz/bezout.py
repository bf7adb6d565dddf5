"""Anderson-Jury Bezoutian and the congruence check against the Hankel pair.

For ``L(z) = F(iz) = Dt(z) - i St(z)`` and ``L1 = Dt + i St`` the matrix
``-i B(L1^vee, L1; L^vee, L)``, reduced to its finite core, is congruent to
``diag(H0, H1)``; equal inertias are an independent check of the Hankel
construction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotACommonMultiple, NotHermitianSequence
from .matpoly import MatrixPolynomial, adjoint_vee, column_degrees
from .split import SplitResult, lift
from .stability import Inertia, Tolerances, analyze, hermitian_inertia


@dataclass(frozen=True)
class BezoutQuadruple:
    l_poly: MatrixPolynomial
    l1_poly: MatrixPolynomial
    d_tilde: MatrixPolynomial
    s_tilde: MatrixPolynomial


@dataclass(frozen=True)
class BezoutMatrix:
    full: np.ndarray
    finite: np.ndarray
    rows: tuple[int, ...]
    cols: tuple[int, ...]


def column_index_set(cdeg, p: int) -> tuple[int, ...]:
    """0-based ``{j p + i : 0 <= j < cdeg_i}``, sorted."""
    return tuple(sorted(j * p + i for i, c in enumerate(cdeg) for j in range(c)))


def anderson_jury(
    mt: MatrixPolynomial,
    lt: MatrixPolynomial,
    m_: MatrixPolynomial,
    l_: MatrixPolynomial,
    tol: float = 1e-10,
) -> np.ndarray:
    """Block matrix ``B`` with ``sum_jk z^j B_jk w^k = (mt(z) lt(w) - m_(z) l_(w)) / (z - w)``.

    The quotient is formed exactly in coefficient space: with ``P_ab`` the
    coefficient of ``z^a w^b`` in the numerator, ``B_jk = sum_r P_{j+1+r, k-r}``.

    Raises
    ------
    NotACommonMultiple
        If ``mt lt`` and ``m_ l_`` differ by more than ``tol`` relatively.
    """
    left, right = mt @ lt, m_ @ l_
    n = max(left.degree, right.degree)
    diff = left.padded(n).coeffs - right.padded(n).coeffs
    scale = max(np.abs(left.coeffs).max(), np.abs(right.coeffs).max(), 1e-300)
    if np.abs(diff).max() > tol * scale:
        raise NotACommonMultiple(
            f"mt*lt - m_*l_ has relative size {np.abs(diff).max() / scale:.3g}"
        )
    n1 = max(mt.degree, m_.degree)
    n2 = max(lt.degree, l_.degree)
    p = mt.p
    Ma = mt.padded(n1).ascending()
    Mb = m_.padded(n1).ascending()
    La = lt.padded(n2).ascending()
    Lb = l_.padded(n2).ascending()
    # P[a, b] = Ma[a] La[b] - Mb[a] Lb[b]
    P = np.einsum("aij,bjk->abik", Ma, La) - np.einsum("aij,bjk->abik", Mb, Lb)
    B = np.zeros((n1, n2, p, p), dtype=complex)
    for j in range(n1):
        for k in range(n2):
            for r in range(k + 1):
                if j + 1 + r <= n1:
                    B[j, k] += P[j + 1 + r, k - r]
    return B.transpose(0, 2, 1, 3).reshape(n1 * p, n2 * p)


def bezout_quadruple(sr: SplitResult) -> BezoutQuadruple:
    """``Dt(z) = F_d(-z^2) alpha(iz)``, ``St(z) = z^-1 F_s(-z^2) alpha(iz)``, ``L``, ``L1``."""
    dt = lift(sr.fd, sr.parity, sign=-1, unit=1j)
    st = lift(sr.fs, sr.parity, sign=-1, unit=1j, drop=1)
    return BezoutQuadruple(l_poly=dt - 1j * st, l1_poly=dt + 1j * st, d_tilde=dt, s_tilde=st)


def finite_bezoutian(quad: BezoutQuadruple, tol: float = 1e-10) -> BezoutMatrix:
    L, L1 = quad.l_poly, quad.l1_poly
    full = anderson_jury(adjoint_vee(L1), L1, adjoint_vee(L), L, tol)
    p = L.p
    rows = column_index_set(column_degrees(L1), p)
    cols = column_index_set(column_degrees(L), p)
    return BezoutMatrix(full=full, finite=full[np.ix_(rows, cols)], rows=rows, cols=cols)


@dataclass(frozen=True)
class BezoutCheck:
    inertia_bezout: Inertia
    inertia_hankel_direct_sum: Inertia
    match: bool
    bezout: BezoutMatrix

    def to_dict(self) -> dict:
        return {
            "inertia_bezout": dict(zip(("pi", "nu", "delta"), self.inertia_bezout.as_tuple())),
            "inertia_hankel_direct_sum": dict(
                zip(("pi", "nu", "delta"), self.inertia_hankel_direct_sum.as_tuple())
            ),
            "match": self.match,
            "finite_size": list(self.bezout.finite.shape),
        }


def bezout_inertia_check(F: MatrixPolynomial, tol: Tolerances = Tolerances(), cdeg=None) -> BezoutCheck:
    a = analyze(F, tol, cdeg)
    if not a.sequence.is_hermitian:
        raise NotHermitianSequence(
            f"Markov sequence deviates from Hermitian by {a.sequence.hermitian_deviation:.3g}"
        )
    bz = finite_bezoutian(bezout_quadruple(a.split))
    ib = hermitian_inertia(-1j * bz.finite, tol.inertia_tol, tol.hermitian_tol)
    h = a.hankel
    n0, n1 = h.sizes
    direct = np.zeros((n0 + n1, n0 + n1), dtype=complex)
    direct[:n0, :n0] = h.h0
    direct[n0:, n0:] = h.h1
    ih = hermitian_inertia(direct, tol.inertia_tol, tol.hermitian_tol)
    return BezoutCheck(ib, ih, ib == ih, bz)
