"""Single-output Boolean functions and their cryptographic measures.

Truth tables are packed into Python integers: bit ``k`` of ``table`` is the
value of the function on the input whose binary expansion is ``k``, read
with the first variable ``x1`` as the most significant bit.  This is also
Wolfram's rule numbering, so a rule number *is* its packed truth table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, EncodingError
from .gf2poly import BinaryPolynomial


@dataclass(frozen=True)
class LocalRule:
    n_vars: int
    table: int

    def __post_init__(self):
        if self.n_vars < 0:
            raise DomainError(f"n_vars must be nonnegative, got {self.n_vars}")
        if not 0 <= self.table < 1 << (1 << self.n_vars):
            raise EncodingError(
                f"truth table {self.table} does not fit {1 << self.n_vars} entries"
            )

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "LocalRule":
        size = len(bits)
        n = size.bit_length() - 1
        if size == 0 or 1 << n != size:
            raise DomainError(f"truth table length {size} is not a power of two")
        table = 0
        for k, bit in enumerate(bits):
            if bit & 1:
                table |= 1 << k
        return cls(n, table)

    @property
    def number(self) -> int:
        """Wolfram rule number."""
        return self.table

    @property
    def size(self) -> int:
        return 1 << self.n_vars

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.table >> k) & 1 for k in range(self.size))

    def __call__(self, *x: int) -> int:
        if len(x) != self.n_vars:
            raise DomainError(f"expected {self.n_vars} inputs, got {len(x)}")
        k = 0
        for xi in x:
            k = (k << 1) | (xi & 1)
        return (self.table >> k) & 1

    def as_array(self) -> np.ndarray:
        """Truth table as a uint8 vector."""
        k = np.arange(self.size, dtype=np.uint64)
        if self.n_vars <= 6:
            return ((np.uint64(self.table) >> k) & np.uint64(1)).astype(np.uint8)
        return np.array(self.bits, dtype=np.uint8)


@dataclass(frozen=True)
class AnfForm:
    n_vars: int
    coeffs: int

    def monomials(self) -> list[tuple[int, ...]]:
        """Monomials as tuples of 1-based variable indices, by degree then index."""
        out = []
        for u in range(1 << self.n_vars):
            if (self.coeffs >> u) & 1:
                out.append(tuple(
                    i + 1 for i in range(self.n_vars)
                    if (u >> (self.n_vars - 1 - i)) & 1
                ))
        out.sort(key=lambda m: (len(m), m))
        return out

    def __str__(self) -> str:
        terms = ["*".join(f"x{i}" for i in m) if m else "1" for m in self.monomials()]
        return "+".join(terms) if terms else "0"


def from_rule_number(number: int, d: int) -> LocalRule:
    if d < 1:
        raise DomainError(f"diameter must be positive, got {d}")
    bound = 1 << (1 << d)
    if not 0 <= number < bound:
        raise EncodingError(f"rule number {number} out of range for d={d}: must be < 2^{1 << d} = {bound}")
    return LocalRule(d, number)


def walsh_transform(f: LocalRule) -> np.ndarray:
    """Walsh spectrum via the in-place butterfly."""
    return fwht(1 - 2 * f.as_array().astype(np.int64))


def fwht(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the last axis.

    Works on stacked inputs, e.g. a ``(m, 2**n)`` matrix of signed truth
    tables transforms every row at once.
    """
    a = np.array(values, dtype=np.int64, copy=True)
    size = a.shape[-1]
    lead = a.shape[:-1]
    h = 1
    while h < size:
        a = a.reshape(lead + (size // (2 * h), 2, h))
        lo = a[..., 0, :].copy()
        hi = a[..., 1, :]
        a[..., 0, :] += hi
        a[..., 1, :] = lo - hi
        h *= 2
    return a.reshape(lead + (size,))


def walsh_direct(f: LocalRule) -> np.ndarray:
    """Direct double sum, kept as an oracle for the fast transform."""
    out = np.zeros(f.size, dtype=np.int64)
    for a in range(f.size):
        s = 0
        for x in range(f.size):
            s += -1 if ((f.table >> x) & 1) ^ (bin(a & x).count("1") & 1) else 1
        out[a] = s
    return out


def nonlinearity_from_spectrum(spectrum: np.ndarray, n_vars: int) -> int:
    return (1 << n_vars >> 1) - int(np.abs(spectrum).max()) // 2 if n_vars else 0


def nonlinearity(f: LocalRule) -> int:
    return nonlinearity_from_spectrum(walsh_transform(f), f.n_vars)


def _mobius(table: int, n: int) -> int:
    # butterfly on packed bits: for each variable, fold the lower half into the upper half
    size = 1 << n
    for i in range(n):
        step = 1 << i
        mask = 0
        for block in range(0, size, 2 * step):
            mask |= ((1 << step) - 1) << block
        table ^= (table & mask) << step
    return table


def anf(f: LocalRule) -> AnfForm:
    return AnfForm(f.n_vars, _mobius(f.table, f.n_vars))


def anf_to_rule(a: AnfForm) -> LocalRule:
    return LocalRule(a.n_vars, _mobius(a.coeffs, a.n_vars))


def degree(f: LocalRule) -> int:
    coeffs = anf(f).coeffs
    return max((bin(u).count("1") for u in range(f.size) if (coeffs >> u) & 1), default=0)


def is_balanced(f: LocalRule) -> bool:
    return f.n_vars > 0 and bin(f.table).count("1") == f.size // 2


def is_affine(f: LocalRule) -> bool:
    return degree(f) <= 1


def is_linear(f: LocalRule) -> bool:
    return is_affine(f) and not f.table & 1


def is_bipermutive(f: LocalRule) -> Optional[LocalRule]:
    """Return the generating function g if f = x1 + g(x2..x_{d-1}) + x_d.

    The check is constructive: flipping the first or the last input must
    flip the output everywhere.  ``g`` is read off as ``f(0, y, 0)``.
    """
    d = f.n_vars
    if d < 2:
        raise DomainError(f"bipermutivity needs at least 2 variables, got {d}")
    first = 1 << (d - 1)
    for k in range(f.size):
        out = (f.table >> k) & 1
        if out == (f.table >> (k ^ first)) & 1 or out == (f.table >> (k ^ 1)) & 1:
            return None
    m = d - 2
    g = 0
    for y in range(1 << m):
        g |= ((f.table >> (y << 1)) & 1) << y
    return LocalRule(m, g)


def rule_polynomial(f: LocalRule) -> BinaryPolynomial:
    """Polynomial 1 + a2 X + ... + X^b of a linear bipermutive rule."""
    if not is_linear(f) or is_bipermutive(f) is None:
        raise DomainError(f"rule {f.number} (d={f.n_vars}) is not linear bipermutive")
    coeffs = anf(f).coeffs
    d = f.n_vars
    # coefficient of x_i sits at ANF index with only bit (d - i) set
    return BinaryPolynomial.from_coeffs((coeffs >> (1 << (d - i))) & 1 for i in range(1, d + 1))


def bipermutive_rule(g: LocalRule) -> LocalRule:
    """Build x1 + g(x2..x_{d-1}) + x_d from a generating function g."""
    m = g.n_vars
    d = m + 2
    table = 0
    for k in range(1 << d):
        x1 = k >> (d - 1)
        xd = k & 1
        mid = (k >> 1) & ((1 << m) - 1)
        if x1 ^ ((g.table >> mid) & 1) ^ xd:
            table |= 1 << k
    return LocalRule(d, table)
