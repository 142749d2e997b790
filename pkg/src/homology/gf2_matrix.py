"""
Dense bit-packed matrices over the two-element field.

Rows are packed 64 columns per ``uint64`` word (column j lives in word j // 64,
bit j % 64). Row reduction XORs whole word slices, so each elimination step
is a single vectorized numpy operation over the affected rows.
"""

import logging
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

WORD_BITS = 64
_ONE = np.uint64(1)
_UNPACK_CHUNK = 4096


def _words(cols: int) -> int:
    return max(1, (cols + WORD_BITS - 1) // WORD_BITS)


class Gf2Matrix:
    """
    Bit-packed GF(2) matrix.

    Attributes:
        rows: number of rows
        cols: number of columns
        data: ``(rows, words)`` array of ``uint64``
    """

    def __init__(self, rows: int, cols: int, data: Optional[np.ndarray] = None):
        self.rows = int(rows)
        self.cols = int(cols)
        if data is None:
            data = np.zeros((self.rows, _words(self.cols)), dtype=np.uint64)
        if data.shape != (self.rows, _words(self.cols)) or data.dtype != np.uint64:
            raise ValueError(f"Packed data of shape {data.shape} does not fit {rows}x{cols}")
        self.data = data

    @classmethod
    def from_entries(
        cls, rows: int, cols: int, row_idx: Sequence[int], col_idx: Sequence[int]
    ) -> "Gf2Matrix":
        """Matrix with ones at the given coordinates (repeated coordinates cancel)."""
        matrix = cls(rows, cols)
        if len(row_idx):
            r = np.asarray(row_idx, dtype=np.int64)
            c = np.asarray(col_idx, dtype=np.int64)
            bits = np.left_shift(_ONE, (c % WORD_BITS).astype(np.uint64))
            np.bitwise_xor.at(matrix.data, (r, c // WORD_BITS), bits)
        return matrix

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> "Gf2Matrix":
        dense = np.asarray(dense) % 2
        r, c = np.nonzero(dense)
        return cls.from_entries(dense.shape[0], dense.shape[1], r, c)

    def nonzero(self) -> Tuple[np.ndarray, np.ndarray]:
        """Row and column indices of the set bits, in row-major order."""
        rows, cols = [], []
        little = self.data.astype("<u8", copy=False)
        for start in range(0, self.rows, _UNPACK_CHUNK):
            block = little[start:start + _UNPACK_CHUNK]
            bits = np.unpackbits(block.view(np.uint8), axis=1, bitorder="little")[:, : self.cols]
            r, c = np.nonzero(bits)
            rows.append(r.astype(np.int64) + start)
            cols.append(c.astype(np.int64))
        if not rows:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        return np.concatenate(rows), np.concatenate(cols)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.uint8)
        r, c = self.nonzero()
        dense[r, c] = 1
        return dense

    def transpose(self) -> "Gf2Matrix":
        r, c = self.nonzero()
        return Gf2Matrix.from_entries(self.cols, self.rows, c, r)

    def select_rows(self, keep: Iterable[int]) -> "Gf2Matrix":
        idx = np.asarray(list(keep), dtype=np.int64)
        return Gf2Matrix(len(idx), self.cols, self.data[idx].copy())

    def get(self, i: int, j: int) -> int:
        return int((self.data[i, j // WORD_BITS] >> np.uint64(j % WORD_BITS)) & _ONE)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def rank(self) -> int:
        """
        Rank by Gaussian elimination.

        Works on a copy. The matrix is transposed first when that makes the
        column scan shorter, which leaves the rank unchanged.
        """
        if self.rows == 0 or self.cols == 0:
            return 0
        if self.cols > self.rows:
            return self.transpose()._eliminate()
        return self._eliminate()

    def _eliminate(self) -> int:
        data = self.data.copy()
        rows = self.rows
        rank = 0
        for col in range(self.cols):
            if rank == rows:
                break
            w = col // WORD_BITS
            bit = np.uint64(col % WORD_BITS)
            hits = np.flatnonzero((data[rank:, w] >> bit) & _ONE)
            if hits.size == 0:
                continue
            pivot = rank + int(hits[0])
            if pivot != rank:
                data[[rank, pivot]] = data[[pivot, rank]]
            others = rank + hits[1:]
            if others.size:
                data[others, w:] ^= data[rank, w:]
            rank += 1
        logger.debug(f"GF(2) rank {rank} for {self.rows}x{self.cols}")
        return rank

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.rows}x{self.cols})"
