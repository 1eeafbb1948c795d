"""Linear components space of an S-box and GF(2) row reduction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .sbox import SBox, component_spectra


@dataclass(frozen=True)
class LinearCode:
    """Subspace of GF(2)^length given by a canonical reduced row echelon basis.

    Rows are bitmasks with the first coordinate in the most significant bit.
    Basis rows are sorted by decreasing pivot, and every pivot column is zero
    in all other rows, which makes the basis unique per subspace.
    """

    length: int
    basis: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def codewords(self) -> Iterator[int]:
        """All 2^k codewords, zero included."""
        words = [0]
        for row in self.basis:
            words += [w ^ row for w in words]
        return iter(words)

    def __contains__(self, word: int) -> bool:
        for row in self.basis:
            if word >> (row.bit_length() - 1) & 1:
                word ^= row
        return word == 0

    def rows_as_bits(self) -> list[str]:
        return [format(row, f"0{self.length}b") for row in self.basis]

    def matrix(self) -> np.ndarray:
        return np.array(
            [[(row >> (self.length - 1 - j)) & 1 for j in range(self.length)] for row in self.basis],
            dtype=np.uint8,
        ).reshape(self.dimension, self.length)


def span_basis(vectors: Iterable[int], length: int) -> LinearCode:
    pivots: dict[int, int] = {}
    for v in vectors:
        v = int(v)
        while v:
            p = v.bit_length() - 1
            if p not in pivots:
                pivots[p] = v
                break
            v ^= pivots[p]
    # back-substitute, lowest pivots first so each row is already reduced
    for p in sorted(pivots):
        row = pivots[p]
        for q in sorted(pivots):
            if q < p and (row >> q) & 1:
                row ^= pivots[q]
        pivots[p] = row
    return LinearCode(length, tuple(pivots[p] for p in sorted(pivots, reverse=True)))


def affine_mask_flags(H: SBox) -> np.ndarray:
    """Boolean vector over masks 1..2^n-1: True where the component is affine."""
    return np.abs(component_spectra(H)).max(axis=1) == 1 << H.n


def linear_components(H: SBox) -> list[int]:
    flags = affine_mask_flags(H)
    return [int(v) + 1 for v in np.flatnonzero(flags)]


def lcs_code(H: SBox) -> LinearCode:
    return span_basis(linear_components(H), H.n)


def lcs_dimension(H: SBox) -> int:
    return lcs_code(H).dimension
