"""Markov parameters of a split column reduced matrix polynomial.

The parameters ``s_0, ..., s_l`` are defined by the expansion at infinity

    F_s(z) F_d(z)^{-1} = sum_k (-1)^k z^{-k} s_k.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import SingularLeadingBlock
from .split import SplitResult

DEFAULT_HERMITIAN_TOL = 1e-8


@dataclass(frozen=True)
class MarkovSequence:
    params: np.ndarray  # (l + 1, p, p)
    l: int
    hermitian_deviation: float
    is_hermitian: bool

    @property
    def p(self) -> int:
        return self.params.shape[1]

    def __getitem__(self, k: int) -> np.ndarray:
        return self.params[k]

    def __len__(self) -> int:
        return self.params.shape[0]

    def symmetrized(self, hermitian_tol: float = DEFAULT_HERMITIAN_TOL) -> "MarkovSequence":
        """Replace every ``s_k`` by ``(s_k + s_k^*) / 2``."""
        s = 0.5 * (self.params + np.conj(np.swapaxes(self.params, 1, 2)))
        return make_sequence(s, hermitian_tol)


def hermitian_deviation(params: np.ndarray) -> float:
    """``max_k ||s_k - s_k^*|| / max(1, ||s_k||)`` in the spectral norm."""
    dev = 0.0
    for s in params:
        d = np.linalg.norm(s - s.conj().T, 2) / max(1.0, np.linalg.norm(s, 2))
        dev = max(dev, float(d))
    return dev


def make_sequence(params: np.ndarray, hermitian_tol: float = DEFAULT_HERMITIAN_TOL) -> MarkovSequence:
    params = np.array(params, dtype=complex)
    params.setflags(write=False)
    dev = hermitian_deviation(params)
    return MarkovSequence(
        params=params, l=params.shape[0] - 1, hermitian_deviation=dev,
        is_hermitian=dev < hermitian_tol,
    )


def _right_solver(A0: np.ndarray, tol: float):
    d = np.abs(np.diag(A0))
    if d.min() <= tol * max(d.max(), np.abs(A0).max()):
        raise SingularLeadingBlock(f"leading block has a diagonal entry of size {d.min():.3g}")

    def apply(X):
        # X A0^{-1} via the transposed triangular system A0^T Y^T = X^T
        return solve_triangular(A0, X.T, trans="T", lower=False).T

    return apply


def markov_parameters(
    sr: SplitResult,
    hermitian_tol: float = DEFAULT_HERMITIAN_TOL,
    singular_tol: float = 1e-14,
) -> MarkovSequence:
    """Recurrence for ``s_0, ..., s_l`` from the column degree coefficients.

    Columns of ``A_j`` that are structurally zero (``j > cdeg_fd``) are skipped
    in the products.
    """
    A, B, m, t, l = sr.A, sr.B, sr.m, sr.t, sr.l
    p = sr.p
    solve = _right_solver(np.triu(A[0]), singular_tol)
    cd = np.asarray(sr.cdeg_fd)
    active = [np.flatnonzero(cd >= j) for j in range(m + 1)]
    # signed blocks (-1)^j A_j restricted to their live columns
    signed = [None] + [((-1) ** j) * A[j][:, active[j]] for j in range(1, m + 1)]

    s = np.zeros((l + 1, p, p), dtype=complex)
    s[0] = solve(B[0])
    for k in range(1, l + 1):
        if k <= t:
            rhs = ((-1) ** k) * B[k]
            jmax = k
        else:
            rhs = np.zeros((p, p), dtype=complex)
            jmax = m
        acc = np.zeros((p, p), dtype=complex)
        for j in range(1, min(jmax, m) + 1):
            if active[j].size:
                acc[:, active[j]] += s[k - j] @ signed[j]
        s[k] = solve(rhs - acc)
    return make_sequence(s, hermitian_tol)


def laurent_oracle(sr: SplitResult, k_max: int) -> np.ndarray:
    """``s_0, ..., s_{k_max}`` by matching coefficients of ``F_s = R F_d``.

    Works on the monomial coefficients of ``F_d`` and ``F_s`` directly: for
    column ``j`` the powers ``z^(c_j), ..., z^(c_j - k_max)`` of ``R F_d`` must
    equal those of ``F_s``, which gives one square linear system for all
    Laurent coefficients at once.  Independent of :func:`markov_parameters`;
    meant as a test oracle.
    """
    fd, fs = sr.fd, sr.fs
    p, m = sr.p, fd.degree
    K = k_max
    D = fd.coeffs  # D[r] multiplies z^(m - r)
    E = fs.padded(max(m, fs.degree)).coeffs[-(m + 1):]
    size = p * (K + 1)
    M = np.zeros((size, size), dtype=complex)
    rhs = np.zeros((p, size), dtype=complex)
    col = 0
    for j, c in enumerate(sr.cdeg_fd):
        for step in range(K + 1):
            q = m - c + step  # descending index of z^(c - step)
            for u in range(K + 1):
                r = q - u
                if 0 <= r <= m:
                    M[u * p:(u + 1) * p, col] = D[r][:, j]
            if q <= m:
                rhs[:, col] = E[q][:, j]
            col += 1
    # X M = rhs  <=>  M^T X^T = rhs^T
    try:
        X = np.linalg.solve(M.T, rhs.T).T
    except np.linalg.LinAlgError as exc:
        raise SingularLeadingBlock("dominant part is not column reduced") from exc
    x = X.reshape(p, K + 1, p).transpose(1, 0, 2)
    signs = (-1.0) ** np.arange(K + 1)
    return x * signs[:, None, None]


def sa_residual(seq: MarkovSequence, sr: SplitResult, relative: bool = True) -> float:
    """Largest residual of the two block identities linking ``s`` to ``A, B``.

    The first identity is the block Hankel system for ``s_{t+1}, ..., s_l``; the
    second is the block Toeplitz system reproducing ``B_0, ..., B_t``.  With
    ``relative`` each residual is divided by the larger Frobenius norm of its
    two sides; otherwise the plain Frobenius norm is returned.
    """
    s, A, B, m, t = seq.params, sr.A, sr.B, sr.m, sr.t
    p = sr.p

    def resid(lhs, rhs):
        diff = float(np.linalg.norm(lhs - rhs))
        if not relative:
            return diff
        scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs))
        return 0.0 if scale == 0 else diff / scale

    res = 0.0
    if m >= 1:
        first = t - m + 1
        hank = np.block([[s[first + i + j] for j in range(m)] for i in range(m)])
        stack = np.vstack([((-1) ** (m - j)) * A[m - j] for j in range(m)])
        rhs = -np.vstack([s[t + 1 + i] for i in range(m)]) @ A[0]
        res = max(res, resid(hank @ stack, rhs))
    Ahat = np.zeros((t + 1, p, p), dtype=complex)
    Ahat[: min(t, m) + 1] = A[: min(t, m) + 1]
    toep = np.block([
        [s[j - i] if j >= i else np.zeros((p, p)) for j in range(t + 1)]
        for i in range(t + 1)
    ])
    stackA = np.vstack([((-1) ** (t - j)) * Ahat[t - j] for j in range(t + 1)])
    stackB = np.vstack([((-1) ** (t - j)) * B[t - j] for j in range(t + 1)])
    res = max(res, resid(stackB, toep @ stackA))
    return res
