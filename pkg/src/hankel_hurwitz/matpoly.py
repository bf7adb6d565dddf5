"""Dense complex matrix polynomials and their column structure.

A ``MatrixPolynomial`` stores ``F(z) = A_0 z^n + A_1 z^(n-1) + ... + A_n`` as a
read-only complex array of shape ``(n + 1, p, p)``, highest power first.  The
stored ``n`` is the *nominal* degree; leading zero coefficients are kept so that
coefficient-list operations such as :func:`reversal` are exact involutions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyPolynomial, ZeroColumn

DEFAULT_ZERO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex, copy=True)
        if c.ndim == 2 and c.size:
            # a bare p x p matrix is a constant polynomial
            c = c[None]
        if c.ndim != 3 or c.shape[0] == 0 or c.shape[1] == 0:
            raise EmptyPolynomial(f"expected (n+1, p, p) coefficients, got shape {c.shape}")
        if c.shape[1] != c.shape[2]:
            raise ValueError(f"coefficients must be square, got {c.shape[1]}x{c.shape[2]}")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def scalar(cls, coeffs: Sequence[complex]) -> "MatrixPolynomial":
        """1x1 polynomial from a descending coefficient list."""
        return cls(np.asarray(coeffs, dtype=complex).reshape(-1, 1, 1))

    @classmethod
    def diagonal(cls, polys: Sequence[Sequence[complex]]) -> "MatrixPolynomial":
        """``diag(f_1, ..., f_p)`` from descending coefficient lists of any lengths."""
        p = len(polys)
        n = max(len(f) for f in polys) - 1
        c = np.zeros((n + 1, p, p), dtype=complex)
        for k, f in enumerate(polys):
            f = np.asarray(f, dtype=complex)
            c[n + 1 - len(f):, k, k] = f
        return cls(c)

    @classmethod
    def identity(cls, p: int) -> "MatrixPolynomial":
        return cls(np.eye(p, dtype=complex)[None])

    @property
    def p(self) -> int:
        return self.coeffs.shape[1]

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def coeff(self, power: int) -> np.ndarray:
        """Coefficient matrix of ``z**power`` (zero outside ``0..n``)."""
        if power < 0 or power > self.degree:
            return np.zeros((self.p, self.p), dtype=complex)
        return self.coeffs[self.degree - power]

    def ascending(self) -> np.ndarray:
        return self.coeffs[::-1]

    def trimmed(self) -> "MatrixPolynomial":
        """Drop leading zero coefficients (keeps at least the constant term)."""
        nz = np.flatnonzero(np.any(self.coeffs != 0, axis=(1, 2)))
        start = nz[0] if nz.size else self.degree
        return MatrixPolynomial(self.coeffs[start:])

    def padded(self, degree: int) -> "MatrixPolynomial":
        extra = degree - self.degree
        if extra < 0:
            raise ValueError("cannot pad to a smaller degree")
        pad = np.zeros((extra, self.p, self.p), dtype=complex)
        return MatrixPolynomial(np.concatenate([pad, self.coeffs]))

    def left_multiply(self, m: np.ndarray) -> "MatrixPolynomial":
        return MatrixPolynomial(np.einsum("ij,kjl->kil", m, self.coeffs))

    def __call__(self, z: complex) -> np.ndarray:
        return evaluate(self, z)

    def __add__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        n = max(self.degree, other.degree)
        return MatrixPolynomial(self.padded(n).coeffs + other.padded(n).coeffs)

    def __sub__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        n = max(self.degree, other.degree)
        return MatrixPolynomial(self.padded(n).coeffs - other.padded(n).coeffs)

    def __matmul__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        a, b = self.ascending(), other.ascending()
        out = np.zeros((a.shape[0] + b.shape[0] - 1, self.p, other.p), dtype=complex)
        for i in range(a.shape[0]):
            out[i:i + b.shape[0]] += np.einsum("ij,kjl->kil", a[i], b)
        return MatrixPolynomial(out[::-1])

    def __mul__(self, scale: complex) -> "MatrixPolynomial":
        return MatrixPolynomial(self.coeffs * scale)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"MatrixPolynomial(p={self.p}, degree={self.degree})"


@dataclass(frozen=True)
class ColumnProfile:
    """Column degrees and highest column degree coefficient matrix of ``F``.

    ``cdeg[k] == -1`` never occurs for profiles returned by
    :func:`column_profile`, which rejects zero columns instead.
    """

    cdeg: tuple[int, ...]
    hcdc: np.ndarray
    column_reduced: bool
    hcdc_condition: float
    parity: tuple[bool, ...]  # True where cdeg is odd

    @property
    def degree_sum(self) -> int:
        return sum(self.cdeg)


def column_degrees(F: MatrixPolynomial, zero_tol: float = DEFAULT_ZERO_TOL) -> tuple[int, ...]:
    """Largest exponent per column with an entry above ``zero_tol`` times the column scale."""
    asc = np.abs(F.ascending())  # (n+1, p, p)
    scale = asc.max(axis=(0, 1))
    cdeg = []
    for k in range(F.p):
        if scale[k] == 0:
            raise ZeroColumn(f"column {k + 1} is identically zero")
        live = np.flatnonzero(asc[:, :, k].max(axis=1) > zero_tol * scale[k])
        cdeg.append(int(live[-1]))
    return tuple(cdeg)


def column_profile(
    F: MatrixPolynomial,
    zero_tol: float = DEFAULT_ZERO_TOL,
    cdeg: Sequence[int] | None = None,
) -> ColumnProfile:
    """Column degrees, ``F_hcdc`` and column reducedness of ``F``.

    Parameters
    ----------
    F : MatrixPolynomial
    zero_tol : float
        Relative threshold, per column, below which coefficients count as zero.
        Also the rank threshold ``sigma_min > zero_tol * sigma_max`` for ``F_hcdc``.
    cdeg : sequence of int, optional
        Explicit column degrees overriding detection.

    Raises
    ------
    ZeroColumn
        If a column of ``F`` vanishes identically.
    """
    if cdeg is None:
        cdeg = column_degrees(F, zero_tol)
    else:
        cdeg = tuple(int(c) for c in cdeg)
        if len(cdeg) != F.p:
            raise ValueError(f"expected {F.p} column degrees, got {len(cdeg)}")
        if any(c < 0 or c > F.degree for c in cdeg):
            raise ValueError(f"column degrees {cdeg} outside 0..{F.degree}")
    hcdc = np.column_stack([F.coeff(c)[:, k] for k, c in enumerate(cdeg)])
    sv = np.linalg.svd(hcdc, compute_uv=False)
    reduced = bool(sv[0] > 0 and sv[-1] > zero_tol * sv[0])
    cond = float(sv[0] / sv[-1]) if sv[-1] > 0 else float("inf")
    hcdc.setflags(write=False)
    return ColumnProfile(
        cdeg=cdeg,
        hcdc=hcdc,
        column_reduced=reduced,
        hcdc_condition=cond,
        parity=tuple(bool(c % 2) for c in cdeg),
    )


def truncate_columns(F: MatrixPolynomial, cdeg: Sequence[int]) -> MatrixPolynomial:
    """Zero every coefficient of column ``k`` above power ``cdeg[k]``."""
    c = np.array(F.coeffs)
    n = F.degree
    for k, d in enumerate(cdeg):
        c[: n - d, :, k] = 0
    return MatrixPolynomial(c)


def adjoint_vee(F: MatrixPolynomial) -> MatrixPolynomial:
    """``F^vee(z) = sum_k A_k^* z^(n-k)``, so that ``F^vee(z) = F(conj(z))^*``."""
    return MatrixPolynomial(np.conj(np.swapaxes(F.coeffs, 1, 2)))


def reversal(F: MatrixPolynomial) -> MatrixPolynomial:
    """``z^n F(1/z)`` with ``n`` the nominal degree of ``F``."""
    return MatrixPolynomial(F.coeffs[::-1])


def evaluate(F: MatrixPolynomial, z: complex) -> np.ndarray:
    """Horner evaluation at a complex point."""
    out = np.zeros((F.p, F.p), dtype=complex)
    for a in F.coeffs:
        out = out * z + a
    return out
