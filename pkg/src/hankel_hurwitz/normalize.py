"""Unitary left normalization of the highest column degree coefficient."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotColumnReduced
from .matpoly import DEFAULT_ZERO_TOL, MatrixPolynomial, column_profile, truncate_columns


@dataclass(frozen=True)
class NormalizedPolynomial:
    q: np.ndarray
    f_norm: MatrixPolynomial
    cdeg: tuple[int, ...]


def qr_normalize(
    F: MatrixPolynomial,
    zero_tol: float = DEFAULT_ZERO_TOL,
    cdeg=None,
) -> NormalizedPolynomial:
    """Replace ``F`` by ``Q^* F`` where ``F_hcdc = Q R`` is a Householder QR.

    Diagonal phases of ``R`` are absorbed into ``Q`` so that ``R`` has a real
    positive diagonal; the result is therefore unique, and ``V F`` normalizes
    to the same polynomial as ``F`` for any unitary ``V``.  Rounding residue
    below the diagonal of the new ``hcdc`` is set to exact zero.
    """
    prof = column_profile(F, zero_tol, cdeg)
    if not prof.column_reduced:
        raise NotColumnReduced(
            f"highest column degree coefficient is singular (condition {prof.hcdc_condition:.3g})"
        )
    F = truncate_columns(F, prof.cdeg)
    q, r = np.linalg.qr(prof.hcdc)
    phase = np.diag(r) / np.abs(np.diag(r))
    q = q * phase  # Q diag(phase), R -> diag(conj(phase)) R

    c = np.einsum("ji,kjl->kil", q.conj(), F.coeffs)
    n = F.degree
    for k, d in enumerate(prof.cdeg):
        lead = c[n - d, :, k]
        lead[k + 1:] = 0
        lead[k] = lead[k].real
    return NormalizedPolynomial(q=q, f_norm=MatrixPolynomial(c), cdeg=prof.cdeg)
