"""Inertia of Hermitian matrices and the Hankel-based Hurwitz test."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .errors import NotHermitian, NotHermitianSequence
from .hankel import HankelPair, IndexSets, assemble_hankel, index_sets
from .markov import DEFAULT_HERMITIAN_TOL, MarkovSequence, markov_parameters
from .matpoly import DEFAULT_ZERO_TOL, MatrixPolynomial
from .normalize import NormalizedPolynomial, qr_normalize
from .split import SplitResult, split


@dataclass(frozen=True)
class Tolerances:
    zero_tol: float = DEFAULT_ZERO_TOL
    """Relative threshold for zero coefficients and rank of ``F_hcdc``."""
    inertia_tol: float = 1e-10
    """Eigenvalues within ``inertia_tol * ||H||`` of zero count as zero."""
    hermitian_tol: float = DEFAULT_HERMITIAN_TOL
    axis_tol: float = 1e-9
    """Finite eigenvalues with ``|Re| <= axis_tol`` lie on the imaginary axis."""
    symmetrize: bool = False

    def with_tol(self, tol: float) -> "Tolerances":
        return replace(self, zero_tol=tol, inertia_tol=tol)


class Verdict(str, Enum):
    STABLE = "Stable"
    NOT_STABLE = "NotStable"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class Inertia:
    pi: int
    nu: int
    delta: int

    @property
    def size(self) -> int:
        return self.pi + self.nu + self.delta

    @property
    def positive_definite(self) -> bool:
        return self.nu == 0 and self.delta == 0

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.pi + other.pi, self.nu + other.nu, self.delta + other.delta)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.pi, self.nu, self.delta


def _count(values: np.ndarray, threshold: float) -> Inertia:
    return Inertia(
        pi=int(np.sum(values > threshold)),
        nu=int(np.sum(values < -threshold)),
        delta=int(np.sum(np.abs(values) <= threshold)),
    )


def hermitian_eigs(M: np.ndarray, hermitian_tol: float = DEFAULT_HERMITIAN_TOL) -> np.ndarray:
    """Ascending eigenvalues of ``(M + M^*) / 2`` after checking ``M`` is Hermitian."""
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return np.zeros(0)
    scale = max(1.0, float(np.linalg.norm(M, 2)))
    if np.linalg.norm(M - M.conj().T, 2) > hermitian_tol * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(0.5 * (M + M.conj().T))


def hermitian_inertia(
    M: np.ndarray, tol: float = 1e-10, hermitian_tol: float = DEFAULT_HERMITIAN_TOL
) -> Inertia:
    """``(pi, nu, delta)`` with eigenvalues inside ``tol * ||M||`` counted as zero.

    The 0x0 matrix has inertia ``(0, 0, 0)`` and is positive definite by convention.
    """
    eigs = hermitian_eigs(M, hermitian_tol)
    if eigs.size == 0:
        return Inertia(0, 0, 0)
    return _count(eigs, tol * np.abs(eigs).max())


def matrix_inertia(M: np.ndarray, tol: float = 0.0) -> Inertia:
    """Inertia of a general square matrix by the sign of eigenvalue real parts."""
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return Inertia(0, 0, 0)
    return _count(np.linalg.eigvals(M).real, tol)


@dataclass(frozen=True)
class Analysis:
    """Every intermediate object of the Hankel pipeline for one polynomial."""

    normalized: NormalizedPolynomial
    split: SplitResult
    sequence: MarkovSequence
    index_sets: IndexSets
    hankel: HankelPair


def analyze(F: MatrixPolynomial, tol: Tolerances = Tolerances(), cdeg=None) -> Analysis:
    """normalize -> split -> Markov parameters -> index sets -> Hankel pair.

    No Hermitian requirement is imposed here.
    """
    nrm = qr_normalize(F, tol.zero_tol, cdeg)
    sr = split(nrm.f_norm, tol.zero_tol, cdeg=nrm.cdeg)
    seq = markov_parameters(sr, tol.hermitian_tol)
    if tol.symmetrize:
        seq = seq.symmetrized(tol.hermitian_tol)
    idx = index_sets(sr)
    return Analysis(nrm, sr, seq, idx, assemble_hankel(seq, idx, sr))


@dataclass
class StabilityReport:
    verdict: Verdict
    inertia_f: tuple[int, int, int] | None
    h0_inertia: Inertia | None
    h1_inertia: Inertia | None
    h0_eigs: list[float]
    h1_eigs: list[float]
    hermitian_deviation: float
    diagnostics: list[str] = field(default_factory=list)
    cdeg: tuple[int, ...] = ()
    analysis: Analysis | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        def inertia(i):
            return None if i is None else {"pi": i.pi, "nu": i.nu, "delta": i.delta}

        out = {
            "verdict": self.verdict.value,
            "inertia_f": None if self.inertia_f is None else dict(
                zip(("gamma_plus", "gamma_minus", "gamma_zero"), self.inertia_f)
            ),
            "h0_inertia": inertia(self.h0_inertia),
            "h1_inertia": inertia(self.h1_inertia),
            "h0_eigs": [float(x) for x in self.h0_eigs],
            "h1_eigs": [float(x) for x in self.h1_eigs],
            "hermitian_deviation": float(self.hermitian_deviation),
            "column_degrees": list(self.cdeg),
            "diagnostics": list(self.diagnostics),
        }
        if self.analysis is not None:
            a = self.analysis
            out["sizes"] = {"h0": a.hankel.sizes[0], "h1": a.hankel.sizes[1]}
        return out


def _verdict(i0: Inertia, i1: Inertia) -> Verdict:
    if i0.positive_definite and i1.positive_definite:
        return Verdict.STABLE
    if i0.nu > 0 or i1.nu > 0:
        return Verdict.NOT_STABLE
    return Verdict.INDETERMINATE


def hurwitz_check(F: MatrixPolynomial, tol: Tolerances = Tolerances(), cdeg=None) -> StabilityReport:
    """Hurwitz stability from the positive definiteness of ``H0`` and ``H1``.

    A non-Hermitian Markov sequence, or a Hankel matrix with eigenvalues inside
    the zero band and none negative, yields ``Indeterminate``.
    """
    a = analyze(F, tol, cdeg)
    seq = a.sequence
    cd = a.split.cdeg
    if not seq.is_hermitian:
        return StabilityReport(
            verdict=Verdict.INDETERMINATE, inertia_f=None, h0_inertia=None, h1_inertia=None,
            h0_eigs=[], h1_eigs=[], hermitian_deviation=seq.hermitian_deviation,
            diagnostics=[
                f"Markov sequence is not Hermitian (deviation {seq.hermitian_deviation:.3g} "
                f">= {tol.hermitian_tol:.3g}); the Hankel criterion does not apply",
            ],
            cdeg=cd, analysis=a,
        )
    h0, h1 = a.hankel.h0, a.hankel.h1
    e0 = hermitian_eigs(h0, tol.hermitian_tol)
    e1 = hermitian_eigs(h1, tol.hermitian_tol)
    i0 = hermitian_inertia(h0, tol.inertia_tol, tol.hermitian_tol)
    i1 = hermitian_inertia(h1, tol.inertia_tol, tol.hermitian_tol)
    verdict = _verdict(i0, i1)
    diagnostics = []
    inertia_f = None
    if i0.delta == 0 and i1.delta == 0:
        inertia_f = (i0.nu + i1.nu, i0.pi + i1.pi, 0)
    else:
        diagnostics.append(
            "a Hankel matrix is singular within tolerance; the inertia of F is not determined "
            "by H0, H1 alone (consult the eigenvalue oracle)"
        )
    return StabilityReport(
        verdict=verdict, inertia_f=inertia_f, h0_inertia=i0, h1_inertia=i1,
        h0_eigs=sorted(e0.tolist(), reverse=True), h1_eigs=sorted(e1.tolist(), reverse=True),
        hermitian_deviation=seq.hermitian_deviation, diagnostics=diagnostics,
        cdeg=cd, analysis=a,
    )


@dataclass(frozen=True)
class PolynomialInertia:
    """``(gamma'_+, gamma'_-, gamma'_0)`` of ``F`` relative to the imaginary axis.

    When ``determinate`` is false the triple holds the bounds
    ``gamma'_+ >= nu(H0)+nu(H1)``, ``gamma'_- >= pi(H0)+pi(H1)``,
    ``gamma'_0 <= delta(H0)+delta(H1)`` instead of exact counts.
    """

    triple: tuple[int, int, int]
    determinate: bool


def polynomial_inertia(F: MatrixPolynomial, tol: Tolerances = Tolerances(), cdeg=None) -> PolynomialInertia:
    a = analyze(F, tol, cdeg)
    if not a.sequence.is_hermitian:
        raise NotHermitianSequence(
            f"Markov sequence deviates from Hermitian by {a.sequence.hermitian_deviation:.3g}"
        )
    i0 = hermitian_inertia(a.hankel.h0, tol.inertia_tol, tol.hermitian_tol)
    i1 = hermitian_inertia(a.hankel.h1, tol.inertia_tol, tol.hermitian_tol)
    s = i0 + i1
    if s.delta == 0:
        return PolynomialInertia((s.nu, s.pi, 0), True)
    return PolynomialInertia((s.nu, s.pi, s.delta), False)
