"""Hurwitz stability of column reduced matrix polynomials from block Hankel matrices."""
from .bezout import BezoutCheck, bezout_inertia_check
from .eig_oracle import SpectrumReport, finite_spectrum
from .errors import HankelHurwitzError
from .hankel import HankelPair, IndexSets, assemble_hankel, index_sets
from .markov import MarkovSequence, laurent_oracle, markov_parameters, sa_residual
from .matpoly import ColumnProfile, MatrixPolynomial, column_profile
from .normalize import NormalizedPolynomial, qr_normalize
from .perturb import PerturbConfig, PerturbResult, run_experiment, sample_perturbation
from .split import SplitResult, dominant_subordinate, split
from .stability import (
    Inertia,
    StabilityReport,
    Tolerances,
    Verdict,
    analyze,
    hermitian_inertia,
    hurwitz_check,
    polynomial_inertia,
)

__all__ = [
    "BezoutCheck", "ColumnProfile", "HankelHurwitzError", "HankelPair", "IndexSets",
    "Inertia", "MarkovSequence", "MatrixPolynomial", "NormalizedPolynomial", "PerturbConfig",
    "PerturbResult", "SpectrumReport", "SplitResult", "StabilityReport", "Tolerances", "Verdict",
    "analyze", "assemble_hankel", "bezout_inertia_check", "column_profile", "dominant_subordinate",
    "finite_spectrum", "hermitian_inertia", "hurwitz_check", "index_sets", "laurent_oracle",
    "markov_parameters", "polynomial_inertia", "qr_normalize", "run_experiment",
    "sample_perturbation", "sa_residual", "split",
]
