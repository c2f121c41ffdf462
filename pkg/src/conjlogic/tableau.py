"""Batched application of transformations to many propositions at once.

Two layouts back the two hot paths:

* :class:`ReductionTableau` keeps one packed row per proposition and applies
  whole passes to every row (used by the joint reduction, where gate masks
  are derived from one row but must transform all of them).
* :class:`ExpansionBatch` keeps one packed *column* per system position with
  one bit per batch member (used to push the 2^k prediction combinations
  back through an inverted transcript in a single replay).

Both delegate the word-level work to the selected kernel backend.
"""

from __future__ import annotations

import numpy as np

from . import backend
from .clifford import CzChoice, PassOp, TheoryVariant, Transcript, _iter_bits
from .pauli import Proposition


def _words_needed(bits: int) -> int:
    return (bits + 63) // 64


def int_to_words(value: int, words: int) -> np.ndarray:
    return np.frombuffer(value.to_bytes(words * 8, "little"), dtype=np.uint64).copy()


def words_to_int(arr: np.ndarray) -> int:
    return int.from_bytes(arr.tobytes(), "little")


def _positions_array(mask: int, descending: bool) -> np.ndarray:
    return np.fromiter(_iter_bits(mask, descending), dtype=np.int64)


class ReductionTableau:
    """Row-major packed tableau over a fixed set of propositions."""

    def __init__(self, props: list[Proposition], kernels=None):
        if not props:
            raise ValueError("tableau needs at least one proposition")
        n = props[0].n
        for p in props:
            if p.n != n:
                raise ValueError("propositions describe different system counts")
        self.kernels = kernels if kernels is not None else backend.kernels
        self.n = n
        self.words = _words_needed(n)
        self.xs = np.zeros((len(props), self.words), dtype=np.uint64)
        self.zs = np.zeros((len(props), self.words), dtype=np.uint64)
        self.signs = np.zeros(len(props), dtype=np.uint8)
        for r, p in enumerate(props):
            self.xs[r] = int_to_words(p.x, self.words)
            self.zs[r] = int_to_words(p.z, self.words)
            self.signs[r] = p.sign

    @property
    def nrows(self) -> int:
        return len(self.signs)

    def row_x(self, r: int) -> int:
        return words_to_int(self.xs[r])

    def row_z(self, r: int) -> int:
        return words_to_int(self.zs[r])

    def sign(self, r: int) -> int:
        return int(self.signs[r])

    def proposition(self, r: int) -> Proposition:
        return Proposition(self.n, self.row_x(r), self.row_z(r), self.sign(r))

    def apply(self, op: PassOp, variant: TheoryVariant, cz: CzChoice) -> None:
        quantum = variant is TheoryVariant.QUANTUM
        mask = int_to_words(op.mask, self.words)
        if op.kind == "CZ":
            self.kernels.row_cz_pass(
                self.xs, self.zs, self.signs, op.pivot, mask, cz is CzChoice.TILDE
            )
        else:
            self.kernels.row_axis_pass(
                self.xs, self.zs, self.signs, mask, backend.AXIS_CODE[op.kind], quantum
            )

    def xor_rows(self, dst: int, src: int) -> None:
        self.kernels.row_xor(self.xs, self.zs, self.signs, dst, src)


class ExpansionBatch:
    """Column-major packed batch of propositions sharing one system count."""

    def __init__(self, n: int, nrows: int, kernels=None):
        self.kernels = kernels if kernels is not None else backend.kernels
        self.n = n
        self.nrows = nrows
        self.row_words = _words_needed(nrows)
        self.xc = np.zeros((n, self.row_words), dtype=np.uint64)
        self.zc = np.zeros((n, self.row_words), dtype=np.uint64)
        self.sc = np.zeros(self.row_words, dtype=np.uint64)

    @classmethod
    def subset_space(
        cls, n: int, pivots: list[int], signs: list[int], kernels=None
    ) -> "ExpansionBatch":
        """Batch member ``r`` holds an X at ``pivots[i]`` for every set bit
        ``i`` of ``r``; its sign is the XOR of the matching ``signs``."""
        k = len(pivots)
        batch = cls(n, 1 << k, kernels)
        for i, pivot in enumerate(pivots):
            pattern = _subset_pattern(i, batch.nrows)
            batch.xc[pivot] = pattern
            if signs[i]:
                batch.sc ^= pattern
        return batch

    @classmethod
    def from_propositions(cls, props: list[Proposition], kernels=None) -> "ExpansionBatch":
        if not props:
            raise ValueError("batch needs at least one proposition")
        n = props[0].n
        words = _words_needed(n)
        batch = cls(n, len(props), kernels)
        xr = np.zeros((len(props), words), dtype=np.uint64)
        zr = np.zeros((len(props), words), dtype=np.uint64)
        for r, p in enumerate(props):
            if p.n != n:
                raise ValueError("propositions describe different system counts")
            xr[r] = int_to_words(p.x, words)
            zr[r] = int_to_words(p.z, words)
            if p.sign:
                batch.sc[r >> 6] |= np.uint64(1 << (r & 63))
        batch.xc = batch.kernels.bit_transpose(xr, n)
        batch.zc = batch.kernels.bit_transpose(zr, n)
        return batch

    def replay(
        self, transcript: Transcript, variant: TheoryVariant, cz: CzChoice
    ) -> None:
        """Apply the transcript to every batch member simultaneously."""
        quantum = variant is TheoryVariant.QUANTUM
        tilde = cz is CzChoice.TILDE
        for op in transcript.ops:
            if op.max_target() >= self.n:
                raise ValueError(f"gate target out of range for n={self.n}")
            positions = _positions_array(op.mask, op.descending)
            if op.kind == "CZ":
                self.kernels.col_cz_pass(
                    self.xc, self.zc, self.sc, op.pivot, positions, tilde
                )
            else:
                self.kernels.col_axis_pass(
                    self.xc, self.zc, self.sc, positions, backend.AXIS_CODE[op.kind], quantum
                )

    def propositions(self) -> list[Proposition]:
        xr = self.kernels.bit_transpose(self.xc, self.nrows)
        zr = self.kernels.bit_transpose(self.zc, self.nrows)
        sign_bits = np.unpackbits(
            self.sc.view(np.uint8), bitorder="little"
        )[: self.nrows]
        return [
            Proposition(
                self.n,
                words_to_int(xr[r]),
                words_to_int(zr[r]),
                int(sign_bits[r]),
            )
            for r in range(self.nrows)
        ]


def _subset_pattern(i: int, nrows: int) -> np.ndarray:
    """Bit ``r`` is set iff bit ``i`` of the row index ``r`` is set."""
    words = _words_needed(nrows)
    if (1 << i) >= 64:
        block = (np.arange(words, dtype=np.uint64) >> np.uint64(i - 6)) & np.uint64(1)
        return block * np.uint64(0xFFFFFFFFFFFFFFFF)
    word = 0
    for b in range(64):
        if (b >> i) & 1:
            word |= 1 << b
    if nrows < 64:
        word &= (1 << nrows) - 1
    return np.full(words, np.uint64(word), dtype=np.uint64)
