"""Column-wise even/odd splitting into dominant and subordinated parts.

Each column ``f`` of degree ``c`` is written ``f(z) = f_e(z^2) + z f_o(z^2)``.
For even ``c`` the dominant part is ``f_e`` and the subordinated part is the
shifted odd part ``z f_o(z)``; for odd ``c`` the roles are ``f_o`` and ``f_e``.
Either way the dominant part collects the coefficients of ``z^c, z^(c-2), ...``
and the subordinated part those of ``z^(c-1), z^(c-3), ...``, both of degree
``c // 2`` in the new variable.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegreeZero, NotNormalized, ZeroColumn
from .matpoly import DEFAULT_ZERO_TOL, MatrixPolynomial, column_degrees


def split_column(f) -> tuple[np.ndarray, np.ndarray]:
    """Split a vector polynomial given as descending coefficients of shape ``(c+1, p)``.

    Returns the dominant and subordinated parts as descending coefficient arrays
    of shape ``(c//2 + 1, p)``.
    """
    f = np.asarray(f, dtype=complex)
    if f.ndim == 1:
        f = f[:, None]
    nz = np.flatnonzero(np.any(f != 0, axis=1))
    if nz.size == 0:
        raise ZeroColumn("cannot split an identically zero column")
    f = f[nz[0]:]
    c = f.shape[0] - 1
    h = c // 2
    dom = f[0::2]
    sub = np.zeros((h + 1, f.shape[1]), dtype=complex)
    odd = f[1::2]
    sub[: odd.shape[0]] = odd
    return dom, sub


def lift(
    P: MatrixPolynomial,
    parity,
    sign: complex = 1,
    unit: complex = 1,
    drop: int = 0,
) -> MatrixPolynomial:
    """``z^(-drop) P(sign z^2) alpha(unit z)`` with ``alpha = diag(1 or unit z)`` by parity.

    With ``sign = unit = 1`` this gives ``D = F_d(z^2) alpha(z)`` (``drop=0``) and
    ``S = z^(-1) F_s(z^2) alpha(z)`` (``drop=1``).  The negative power is applied
    as an exact index shift; the discarded coefficients are structurally zero.
    """
    asc = P.ascending()
    n = 2 * P.degree + 1
    out = np.zeros((n + 1, P.p, P.p), dtype=complex)
    powers = sign ** np.arange(asc.shape[0])
    for k, odd in enumerate(parity):
        col = asc[:, :, k] * powers[:, None]
        if odd:
            out[1::2][: col.shape[0], :, k] = unit * col
        else:
            out[0::2][: col.shape[0], :, k] = col
    if drop:
        if np.any(out[:drop]):
            raise ValueError("shift would discard nonzero coefficients")
        out = out[drop:]
    return MatrixPolynomial(out[::-1]).trimmed()


@dataclass(frozen=True)
class SplitResult:
    """Dominant/subordinated parts and their column degree coefficient matrices.

    ``A[k]`` holds, in column ``j``, the coefficient of ``z^(cdeg_fd[j] - k)`` of
    the dominant part (zero once ``k > cdeg_fd[j]``); ``B`` likewise for the
    subordinated part.
    """

    fd: MatrixPolynomial
    fs: MatrixPolynomial
    cdeg: tuple[int, ...]
    cdeg_fd: tuple[int, ...]
    parity: tuple[bool, ...]
    m: int
    t: int
    l: int
    A: np.ndarray
    B: np.ndarray
    source: MatrixPolynomial = field(repr=False)

    @property
    def p(self) -> int:
        return self.fd.p

    @property
    def all_even(self) -> bool:
        return not any(self.parity)

    def dominant_term(self) -> MatrixPolynomial:
        """``D(z) = F_d(z^2) alpha(z)``."""
        return lift(self.fd, self.parity)

    def subordinated_term(self) -> MatrixPolynomial:
        """``S(z) = z^(-1) F_s(z^2) alpha(z)``."""
        return lift(self.fs, self.parity, drop=1)


def dominant_subordinate(
    F: MatrixPolynomial, cdeg=None, zero_tol: float = DEFAULT_ZERO_TOL
) -> tuple[MatrixPolynomial, MatrixPolynomial]:
    """Assemble ``(F_d, F_s)`` column by column (no normalization required)."""
    if cdeg is None:
        cdeg = column_degrees(F, zero_tol)
    m = max(cdeg) // 2
    fd = np.zeros((m + 1, F.p, F.p), dtype=complex)
    fs = np.zeros_like(fd)
    n = F.degree
    for k, c in enumerate(cdeg):
        col = F.coeffs[n - c:, :, k]
        dom, sub = split_column(col)
        fd[m + 1 - dom.shape[0]:, :, k] = dom
        fs[m + 1 - sub.shape[0]:, :, k] = sub
    return MatrixPolynomial(fd), MatrixPolynomial(fs)


def _degree_coefficients(P: MatrixPolynomial, cdeg_p, count: int) -> np.ndarray:
    out = np.zeros((count, P.p, P.p), dtype=complex)
    for j, c in enumerate(cdeg_p):
        for k in range(min(c, count - 1) + 1):
            out[k, :, j] = P.coeff(c - k)[:, j]
    return out


def split(
    F: MatrixPolynomial,
    zero_tol: float = DEFAULT_ZERO_TOL,
    cdeg=None,
    check_normalized: bool = True,
) -> SplitResult:
    """Split a column reduced, normalized ``F`` (see :func:`qr_normalize`).

    Raises
    ------
    DegreeZero
        If every column has degree 0.
    NotNormalized
        If ``F_hcdc`` is not upper triangular with real positive diagonal
        (skipped when ``check_normalized`` is false).
    """
    if cdeg is None:
        cdeg = column_degrees(F, zero_tol)
    cdeg = tuple(cdeg)
    n = max(cdeg)
    if n == 0:
        raise DegreeZero("splitting needs a polynomial of degree at least 1")
    F = F.trimmed() if F.degree > n else F
    if check_normalized:
        hcdc = np.column_stack([F.coeff(c)[:, k] for k, c in enumerate(cdeg)])
        scale = np.abs(hcdc).max()
        d = np.diag(hcdc)
        if (
            np.abs(np.tril(hcdc, -1)).max(initial=0) > zero_tol * scale
            or np.any(np.abs(d.imag) > zero_tol * scale)
            or np.any(d.real <= zero_tol * scale)
        ):
            raise NotNormalized("F_hcdc must be upper triangular with positive real diagonal")

    fd, fs = dominant_subordinate(F, cdeg)
    parity = tuple(bool(c % 2) for c in cdeg)
    cdeg_fd = tuple(c // 2 for c in cdeg)
    m = n // 2
    l = 2 * m - 1 if not any(parity) else 2 * m
    t = l // 2
    A = _degree_coefficients(fd, cdeg_fd, m + 1)
    B = _degree_coefficients(fs, cdeg_fd, t + 1)
    for arr in (A, B):
        arr.setflags(write=False)
    return SplitResult(
        fd=fd, fs=fs, cdeg=cdeg, cdeg_fd=cdeg_fd, parity=parity,
        m=m, t=t, l=l, A=A, B=B, source=F,
    )
