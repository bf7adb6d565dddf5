"""Column index sets of the dominant part and the two rectangular block Hankel matrices.

Index sets are reported with 1-based column labels; internally everything is
0-based.  Submatrix extraction uses the row set on the left and the column set
on the right, i.e. block ``(i, j)`` of ``H0`` is ``s_{i+j}[Itilde_i, Itilde_j]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SequenceTooShort
from .markov import MarkovSequence
from .split import SplitResult


@dataclass(frozen=True)
class IndexSets:
    """``I_i`` for ``i = -1..m``, their even/odd parts, and ``Itilde_i`` for ``i = 0..m``.

    Stored 0-based.  ``I(i)`` etc. accept the mathematical index ``i``; the
    ``*_labels`` helpers return 1-based tuples.
    """

    m: int
    i_sets: tuple[tuple[int, ...], ...]  # position i + 1 holds I_i
    e_sets: tuple[tuple[int, ...], ...]
    o_sets: tuple[tuple[int, ...], ...]
    tilde_sets: tuple[tuple[int, ...], ...]  # position i holds Itilde_i

    def I(self, i: int) -> tuple[int, ...]:
        if i > self.m:
            return ()
        return self.i_sets[i + 1]

    def I_e(self, i: int) -> tuple[int, ...]:
        return () if i > self.m else self.e_sets[i + 1]

    def I_o(self, i: int) -> tuple[int, ...]:
        return () if i > self.m else self.o_sets[i + 1]

    def I_tilde(self, i: int) -> tuple[int, ...]:
        return () if i > self.m else self.tilde_sets[i]

    def labels(self, i: int) -> tuple[int, ...]:
        return tuple(k + 1 for k in self.I(i))

    def tilde_labels(self, i: int) -> tuple[int, ...]:
        return tuple(k + 1 for k in self.I_tilde(i))


@dataclass(frozen=True)
class HankelPair:
    h0: np.ndarray
    h1: np.ndarray
    block_offsets_h0: tuple[int, ...]
    block_offsets_h1: tuple[int, ...]
    all_even: bool

    @property
    def sizes(self) -> tuple[int, int]:
        return self.h0.shape[0], self.h1.shape[0]


def index_sets(sr: SplitResult) -> IndexSets:
    m = sr.m
    cd = sr.cdeg_fd
    odd = sr.parity
    i_sets, e_sets, o_sets = [], [], []
    for i in range(-1, m + 1):
        members = [k for k in range(sr.p) if i < cd[k]]
        i_sets.append(tuple(members))
        e_sets.append(tuple(k for k in members if not odd[k]))
        o_sets.append(tuple(k for k in members if odd[k]))
    tilde = []
    for i in range(0, m + 1):
        tilde.append(tuple(sorted(set(e_sets[i + 1]) | set(o_sets[i]))))
    return IndexSets(
        m=m, i_sets=tuple(i_sets), e_sets=tuple(e_sets), o_sets=tuple(o_sets),
        tilde_sets=tuple(tilde),
    )


def _offsets(sets) -> tuple[int, ...]:
    return tuple(int(v) for v in np.cumsum([0] + [len(s) for s in sets]))


def _block_hankel(params, sets, shift: int) -> np.ndarray:
    offs = _offsets(sets)
    out = np.zeros((offs[-1], offs[-1]), dtype=complex)
    for i, ri in enumerate(sets):
        if not ri:
            continue
        for j, cj in enumerate(sets):
            if cj:
                out[offs[i]:offs[i + 1], offs[j]:offs[j + 1]] = params[i + j + shift][np.ix_(ri, cj)]
    return out


def hankel_blocks(sr: SplitResult, idx: IndexSets) -> tuple[list, list]:
    """Row/column index sets of the diagonal blocks of ``H0`` and ``H1``."""
    m = sr.m
    n0 = m if sr.all_even else m + 1
    return [idx.I_tilde(i) for i in range(n0)], [idx.I(i) for i in range(m)]


def assemble_hankel(seq: MarkovSequence, idx: IndexSets, sr: SplitResult) -> HankelPair:
    """``H0 = (s_{i+j}[Itilde_i, Itilde_j])`` and ``H1 = (s_{i+j+1}[I_i, I_j])``.

    ``H0`` runs over ``i, j < m`` when every column degree of ``F`` is even and
    over ``i, j <= m`` otherwise; ``H1`` always runs over ``i, j < m``.  A 0x0
    ``H1`` results when ``m = 0``.
    """
    sets0, sets1 = hankel_blocks(sr, idx)
    need = max(2 * (len(sets0) - 1), 2 * (len(sets1) - 1) + 1, 0)
    if len(seq) <= need:
        raise SequenceTooShort(f"need s_0..s_{need}, have {len(seq)} parameters")
    return HankelPair(
        h0=_block_hankel(seq.params, sets0, 0),
        h1=_block_hankel(seq.params, sets1, 1),
        block_offsets_h0=_offsets(sets0),
        block_offsets_h1=_offsets(sets1),
        all_even=sr.all_even,
    )
