"""Monte Carlo robustness of the Hankel test under structured coefficient noise.

Each sample perturbs the coefficient of ``z^i`` by ``eps * dP_i`` where column
``k`` of ``dP_i`` is random only when ``cdeg_k >= i``, so column degrees are
kept.  The Hankel pipeline is then run without the Hermitian requirement and
compared with the companion-pencil spectrum:

* ``f_unstable``  -- the perturbed polynomial has a finite eigenvalue with ``Re >= 0``;
* ``h_escaped``   -- ``H0`` or ``H1`` has an eigenvalue with ``Re <= 0``;
* ``cat_i``       -- ``f_unstable`` and not ``h_escaped``;
* ``cat_ii``      -- ``h_escaped`` and not ``f_unstable``;
* ``cat_iii``     -- both.

``cat_i + cat_ii`` counts samples where "stable iff every Hankel eigenvalue is
in the open right half-plane" fails.

Relative eigenvalue errors ``|lam_k(perturbed) - lam_k| / |lam_k|`` use a
greedy nearest-distance matching between perturbed and reference eigenvalues.
"""
from __future__ import annotations

import csv
import io
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .eig_oracle import finite_spectrum, sort_eigs
from .errors import HankelHurwitzError
from .matpoly import MatrixPolynomial, column_profile
from .stability import Tolerances, analyze

log = logging.getLogger(__name__)

MATCHING = "greedy-nearest"
CSV_COLUMNS = (
    "eps", "sample_index", "f_unstable", "h_escaped", "cat_i", "cat_ii", "cat_iii",
    "r_f_mean", "r_h0_mean", "r_h1_mean",
)
THREADS_ENV = "HANKEL_HURWITZ_THREADS"


@dataclass(frozen=True)
class PerturbConfig:
    eps_grid: tuple[float, ...]
    samples_per_eps: int = 1000
    seed: int = 0
    entry_kind: str = "real"
    tolerances: Tolerances = Tolerances()
    workers: int | None = None

    def __post_init__(self):
        grid = tuple(float(e) for e in self.eps_grid)
        if not grid or any(e < 0 for e in grid):
            raise ValueError("eps_grid must be a nonempty list of nonnegative values")
        if list(grid) != sorted(grid):
            raise ValueError("eps_grid must be sorted ascending")
        if self.samples_per_eps < 1:
            raise ValueError("samples_per_eps must be at least 1")
        if self.entry_kind not in ("real", "complex"):
            raise ValueError("entry_kind must be 'real' or 'complex'")
        object.__setattr__(self, "eps_grid", grid)


def sample_perturbation(
    F: MatrixPolynomial,
    eps: float,
    rng: np.random.Generator,
    entry_kind: str = "real",
    cdeg=None,
) -> MatrixPolynomial:
    """``F + eps * dF`` with column ``k`` of the ``z^i`` coefficient of ``dF`` live iff ``cdeg_k >= i``."""
    if cdeg is None:
        cdeg = column_profile(F).cdeg
    n, p = F.degree, F.p
    shape = (n + 1, p, p)
    delta = rng.uniform(-1.0, 1.0, size=shape).astype(complex)
    if entry_kind == "complex":
        delta += 1j * rng.uniform(-1.0, 1.0, size=shape)
    powers = np.arange(n, -1, -1)[:, None]  # row r of coeffs multiplies z^(n-r)
    mask = powers <= np.asarray(cdeg)[None, :]
    delta *= mask[:, None, :]
    if eps == 0:
        return F
    return MatrixPolynomial(F.coeffs + eps * delta)


def greedy_match(reference: np.ndarray, perturbed: np.ndarray) -> np.ndarray:
    """For each reference eigenvalue, the perturbed one assigned by greedy nearest distance."""
    dist = np.abs(reference[:, None] - perturbed[None, :])
    out = np.empty_like(reference, dtype=complex)
    for _ in range(reference.size):
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        out[i] = perturbed[j]
        dist[i, :] = np.inf
        dist[:, j] = np.inf
    return out


def relative_errors(reference: np.ndarray, perturbed: np.ndarray) -> np.ndarray:
    if reference.size != perturbed.size:
        raise ValueError("eigenvalue counts differ")
    matched = greedy_match(reference, perturbed)
    return np.abs(matched - reference) / np.abs(reference)


@dataclass(frozen=True)
class Reference:
    f_eigs: np.ndarray
    h0_eigs: np.ndarray
    h1_eigs: np.ndarray


def _eigs(H: np.ndarray) -> np.ndarray:
    # same routine for reference and samples, so eps = 0 reproduces errors of exactly 0
    return np.linalg.eigvals(H) if H.size else np.zeros(0, complex)


def reference_spectra(F: MatrixPolynomial, tol: Tolerances = Tolerances()) -> Reference:
    """Unperturbed eigenvalues; Hankel ones sorted by descending real part."""
    a = analyze(F, tol)
    spec = finite_spectrum(F, tol.axis_tol)
    h0, h1 = _eigs(a.hankel.h0), _eigs(a.hankel.h1)
    return Reference(spec.finite_eigs, h0[np.argsort(-h0.real)], h1[np.argsort(-h1.real)])


@dataclass(frozen=True)
class SampleRecord:
    eps_index: int
    eps: float
    sample_index: int
    ok: bool
    f_unstable: bool = False
    h_escaped: bool = False
    r_f: np.ndarray | None = None
    r_h0: np.ndarray | None = None
    r_h1: np.ndarray | None = None
    error: str = ""

    @property
    def cat_i(self) -> bool:
        return self.ok and self.f_unstable and not self.h_escaped

    @property
    def cat_ii(self) -> bool:
        return self.ok and self.h_escaped and not self.f_unstable

    @property
    def cat_iii(self) -> bool:
        return self.ok and self.f_unstable and self.h_escaped


@dataclass(frozen=True)
class EpsRecord:
    eps: float
    samples: int
    failures: int
    f_unstable: int
    h_escaped: int
    cat_i: int
    cat_ii: int
    cat_iii: int
    r_f: np.ndarray
    r_h0: np.ndarray
    r_h1: np.ndarray

    @property
    def violations(self) -> int:
        return self.cat_i + self.cat_ii

    def to_dict(self) -> dict:
        return {
            "eps": self.eps, "samples": self.samples, "failures": self.failures,
            "f_unstable": self.f_unstable, "h_escaped": self.h_escaped,
            "cat_i": self.cat_i, "cat_ii": self.cat_ii, "cat_iii": self.cat_iii,
            "violations": self.violations,
            "r_f": self.r_f.tolist(), "r_h0": self.r_h0.tolist(), "r_h1": self.r_h1.tolist(),
        }


@dataclass
class PerturbResult:
    config: PerturbConfig
    reference: Reference
    records: list[EpsRecord]
    samples: list[SampleRecord] = field(repr=False)
    metadata: dict = field(default_factory=dict)

    def csv_rows(self) -> list[dict]:
        rows = []
        for s in self.samples:
            if not s.ok:
                continue
            rows.append({
                "eps": repr(s.eps), "sample_index": s.sample_index,
                "f_unstable": int(s.f_unstable), "h_escaped": int(s.h_escaped),
                "cat_i": int(s.cat_i), "cat_ii": int(s.cat_ii), "cat_iii": int(s.cat_iii),
                "r_f_mean": repr(float(np.mean(s.r_f))),
                "r_h0_mean": repr(float(np.mean(s.r_h0))),
                "r_h1_mean": repr(float(np.mean(s.r_h1))) if s.r_h1.size else "nan",
            })
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(self.csv_rows())
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "metadata": self.metadata,
            "records": [r.to_dict() for r in self.records],
        }


def _sample_rng(seed: int, eps_index: int, sample_index: int) -> np.random.Generator:
    return np.random.default_rng([seed, eps_index, sample_index])


def _run_sample(F, cdeg, ref: Reference, cfg: PerturbConfig, e: int, eps: float, s: int) -> SampleRecord:
    tol = cfg.tolerances
    rng = _sample_rng(cfg.seed, e, s)
    Ft = sample_perturbation(F, eps, rng, cfg.entry_kind, cdeg)
    try:
        spec = finite_spectrum(Ft, tol.axis_tol)
        a = analyze(Ft, tol, cdeg=cdeg)
        e0, e1 = _eigs(a.hankel.h0), _eigs(a.hankel.h1)
        f_unstable = spec.inertia_imag_axis[0] + spec.inertia_imag_axis[2] > 0
        h_escaped = bool(np.any(e0.real <= 0) or np.any(e1.real <= 0))
        return SampleRecord(
            e, eps, s, True, bool(f_unstable), h_escaped,
            relative_errors(ref.f_eigs, sort_eigs(spec.finite_eigs)),
            relative_errors(ref.h0_eigs, e0),
            relative_errors(ref.h1_eigs, e1),
        )
    except (HankelHurwitzError, np.linalg.LinAlgError, ValueError) as exc:
        log.warning("sample eps=%g #%d failed: %s", eps, s, exc)
        return SampleRecord(e, eps, s, False, error=str(exc))


def worker_count(requested: int | None = None) -> int:
    cap = os.environ.get(THREADS_ENV)
    n = requested if requested is not None else 1
    if cap:
        n = min(n, int(cap)) if requested is not None else int(cap)
    return max(1, n)


def _aggregate(eps: float, recs: list[SampleRecord], ref: Reference) -> EpsRecord:
    good = [r for r in recs if r.ok]

    def mean(attr, size):
        if not good:
            return np.full(size, np.nan)
        return np.mean([getattr(r, attr) for r in good], axis=0) if size else np.zeros(0)

    return EpsRecord(
        eps=eps, samples=len(good), failures=len(recs) - len(good),
        f_unstable=sum(r.f_unstable for r in good),
        h_escaped=sum(r.h_escaped for r in good),
        cat_i=sum(r.cat_i for r in good),
        cat_ii=sum(r.cat_ii for r in good),
        cat_iii=sum(r.cat_iii for r in good),
        r_f=mean("r_f", ref.f_eigs.size),
        r_h0=mean("r_h0", ref.h0_eigs.size),
        r_h1=mean("r_h1", ref.h1_eigs.size),
    )


def run_experiment(F: MatrixPolynomial, config: PerturbConfig) -> PerturbResult:
    """Perturb ``F`` ``samples_per_eps`` times at each ``eps`` and tally the outcomes.

    Deterministic for a given seed: sample ``s`` at grid position ``e`` draws
    from ``default_rng([seed, e, s])`` whatever the worker count.
    """
    tol = config.tolerances
    prof = column_profile(F, tol.zero_tol)
    ref = reference_spectra(F, tol)
    jobs = [
        (e, eps, s)
        for e, eps in enumerate(config.eps_grid)
        for s in range(config.samples_per_eps)
    ]
    workers = worker_count(config.workers)

    def job(args):
        return _run_sample(F, prof.cdeg, ref, config, *args)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(job, jobs))
    else:
        samples = [job(j) for j in jobs]

    records = []
    for e, eps in enumerate(config.eps_grid):
        records.append(_aggregate(eps, [r for r in samples if r.eps_index == e], ref))
    metadata = {
        "matching": MATCHING,
        "entry_kind": config.entry_kind,
        "seed": config.seed,
        "samples_per_eps": config.samples_per_eps,
        "eps_grid": list(config.eps_grid),
        "reference_f_eigs": [[z.real, z.imag] for z in ref.f_eigs],
        "reference_h0_eigs": ref.h0_eigs.real.tolist(),
        "reference_h1_eigs": ref.h1_eigs.real.tolist(),
    }
    return PerturbResult(config, ref, records, samples, metadata)
