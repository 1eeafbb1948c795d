"""S-boxes built from pairs of bipermutive CA, and their vectorial measures.

An S-box is a flat lookup table.  Inputs and outputs are packed as
integers with the first coordinate in the most significant bit, so for an
OCA S-box the left ``b`` output bits come from ``F`` and the right ``b``
from ``G``; a component mask uses the same layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .boolfun import LocalRule, degree, fwht, nonlinearity_from_spectrum
from .ca import _check_pair, _square_entries
from .errors import DomainError


@dataclass(frozen=True)
class SBox:
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.n:
            raise DomainError(f"S-box table must have {1 << self.n} entries, got {len(self.table)}")
        if any(not 0 <= y < 1 << self.n for y in self.table):
            raise DomainError(f"S-box entries must be < {1 << self.n}")

    @classmethod
    def from_table(cls, table: Sequence[int]) -> "SBox":
        size = len(table)
        return cls(size.bit_length() - 1, tuple(int(v) for v in table))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def to_hex(self) -> str:
        width = (self.n + 3) // 4
        return " ".join(f"{y:0{width}x}" for y in self.table)


def identity_sbox(n: int) -> SBox:
    return SBox(n, tuple(range(1 << n)))


def from_oca(f: LocalRule, g: LocalRule) -> SBox:
    """H(x) = F(x) || G(x) for the CA F, G on 2(d-1) cells."""
    _check_pair(f, g)
    b = f.n_vars - 1
    table = (_square_entries(f) << b) | _square_entries(g)
    return SBox(2 * b, tuple(int(v) for v in table.ravel()))


_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _parity(values: np.ndarray) -> np.ndarray:
    v = values.astype(np.int64)
    acc = np.zeros(v.shape, dtype=np.uint8)
    while v.any():
        acc ^= _POPCOUNT8[v & 0xFF] & 1
        v = v >> 8
    return acc


def component_tables(H: SBox, masks: Sequence[int] | np.ndarray | None = None) -> np.ndarray:
    """Truth tables of v.H(x) as rows, one per mask (all nonzero masks by default)."""
    if masks is None:
        masks = np.arange(1, 1 << H.n, dtype=np.int64)
    masks = np.asarray(masks, dtype=np.int64)
    return _parity(masks[:, None] & H.as_array()[None, :])


def component_spectra(H: SBox) -> np.ndarray:
    """Walsh spectra of all nonzero components; row ``v - 1`` belongs to mask ``v``."""
    return fwht(1 - 2 * component_tables(H).astype(np.int64))


def component(H: SBox, v: int) -> LocalRule:
    if v == 0:
        raise DomainError("the zero mask does not define a component function")
    if not 0 < v < 1 << H.n:
        raise DomainError(f"mask {v} out of range for n={H.n}")
    return LocalRule.from_bits(component_tables(H, [v])[0])


def sbox_nonlinearity(H: SBox) -> int:
    spectra = component_spectra(H)
    return nonlinearity_from_spectrum(spectra, H.n)


def sbox_degree(H: SBox) -> int:
    return max(degree(component(H, 1 << (H.n - 1 - i))) for i in range(H.n))


def is_bijective(H: SBox) -> bool:
    return len(set(H.table)) == len(H.table)


def is_bijective_by_components(H: SBox) -> bool:
    """Every component balanced, i.e. every Walsh spectrum vanishes at mask 0."""
    return bool((component_spectra(H)[:, 0] == 0).all())


def is_multipermutation(f: LocalRule, g: LocalRule) -> bool:
    """Pairwise block distance >= 3 between the tuples (x, y, F(x||y), G(x||y)).

    Two distinct tuples at distance <= 2 agree on some pair of positions, so
    the property holds iff the projection onto every pair of the four
    positions is injective.
    """
    _check_pair(f, g)
    N = 1 << (f.n_vars - 1)
    rows, cols = np.divmod(np.arange(N * N), N)
    tuples = (rows, cols, _square_entries(f).ravel(), _square_entries(g).ravel())
    for a, b in combinations(tuples, 2):
        if np.unique(a * N + b).size != N * N:
            return False
    return True


def multipermutation_distance(f: LocalRule, g: LocalRule) -> int:
    """Minimum block distance over all pairs of tuples, by brute force."""
    _check_pair(f, g)
    N = 1 << (f.n_vars - 1)
    Lf, Lg = _square_entries(f), _square_entries(g)
    tuples = [(x, y, int(Lf[x, y]), int(Lg[x, y])) for x in range(N) for y in range(N)]
    best = 4
    for s, t in combinations(tuples, 2):
        best = min(best, sum(a != b for a, b in zip(s, t)))
    return best
