"""Finite spectrum of a regular matrix polynomial from its companion pencil.

Used as ground truth for the Hankel test.  The pencil
``z diag(A_0, I, ..., I) - C`` of size ``n p`` is handed to LAPACK's QZ
(``scipy.linalg.eig`` with homogeneous eigenvalues); pairs ``(alpha, beta)``
with negligible ``beta`` are eigenvalues at infinity.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NotRegular, SolverFailure
from .matpoly import MatrixPolynomial

DEFAULT_AXIS_TOL = 1e-9
DEFAULT_INF_TOL = 1e-12


@dataclass(frozen=True)
class SpectrumReport:
    finite_eigs: np.ndarray
    gamma_infinity: int
    inertia_imag_axis: tuple[int, int, int]  # (right, left, on axis)

    @property
    def hurwitz_stable(self) -> bool:
        return self.inertia_imag_axis[0] == 0 and self.inertia_imag_axis[2] == 0

    def to_dict(self) -> dict:
        return {
            "finite_eigs": [[float(z.real), float(z.imag)] for z in self.finite_eigs],
            "gamma_infinity": self.gamma_infinity,
            "inertia_imag_axis": dict(
                zip(("gamma_plus", "gamma_minus", "gamma_zero"), self.inertia_imag_axis)
            ),
            "hurwitz_stable": self.hurwitz_stable,
        }


def companion_pencil(F: MatrixPolynomial) -> tuple[np.ndarray, np.ndarray]:
    """First Frobenius companion pair ``(C, E)`` with ``det(z E - C) ~ det F(z)``."""
    n, p = F.degree, F.p
    N = n * p
    E = np.eye(N, dtype=complex)
    E[:p, :p] = F.coeffs[0]
    C = np.zeros((N, N), dtype=complex)
    if n == 0:
        return -F.coeffs[0], np.zeros((p, p), dtype=complex)
    C[:p, :] = -np.hstack(list(F.coeffs[1:]))
    C[p:, : N - p] = np.eye(N - p)
    return C, E


def sort_eigs(z: np.ndarray) -> np.ndarray:
    """Ascending real part, then descending imaginary part.

    Real parts are compared after rounding to 8 decimals so conjugate pairs
    stay together despite rounding noise.
    """
    z = np.asarray(z, dtype=complex)
    order = np.lexsort((-z.imag, np.round(z.real, 8)))
    return z[order]


def axis_inertia(eigs: np.ndarray, axis_tol: float = DEFAULT_AXIS_TOL) -> tuple[int, int, int]:
    re = np.asarray(eigs).real
    return (
        int(np.sum(re > axis_tol)),
        int(np.sum(re < -axis_tol)),
        int(np.sum(np.abs(re) <= axis_tol)),
    )


def finite_spectrum(
    F: MatrixPolynomial,
    axis_tol: float = DEFAULT_AXIS_TOL,
    inf_tol: float = DEFAULT_INF_TOL,
) -> SpectrumReport:
    """Finite eigenvalues (with multiplicity), ``gamma_infinity`` and the axis inertia.

    Raises
    ------
    NotRegular
        If some generalized eigenvalue pair has both components negligible.
    SolverFailure
        If QZ does not converge.
    """
    C, E = companion_pencil(F)
    if F.degree == 0:
        if abs(np.linalg.det(C)) == 0:
            raise NotRegular("constant polynomial is singular")
        return SpectrumReport(np.zeros(0, dtype=complex), 0, (0, 0, 0))
    try:
        ab = scipy.linalg.eig(C, E, right=False, homogeneous_eigvals=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise SolverFailure(str(exc)) from exc
    alpha, beta = ab
    scale = max(np.abs(C).max(), np.abs(E).max(), 1.0)
    mag = np.hypot(np.abs(alpha), np.abs(beta))
    if np.any(mag <= 1e2 * np.finfo(float).eps * scale):
        raise NotRegular("companion pencil is singular: det F vanishes identically")
    infinite = np.abs(beta) <= inf_tol * mag
    eigs = sort_eigs(alpha[~infinite] / beta[~infinite])
    return SpectrumReport(
        finite_eigs=eigs,
        gamma_infinity=int(np.sum(infinite)),
        inertia_imag_axis=axis_inertia(eigs, axis_tol),
    )
