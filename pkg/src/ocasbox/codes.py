"""Recognizing polynomial and cyclic codes among linear codes.

A codeword ``(c1, ..., cn)`` is read as ``c1 + c2 X + ... + cn X^(n-1)``.
Masks keep the first coordinate in the most significant bit, so turning a
mask into a polynomial reverses its bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .gf2poly import (
    BinaryPolynomial,
    poly_divides,
    poly_gcd,
    poly_gcd_all,
    x_pow_plus_one,
)
from .lcs import LinearCode, span_basis

__all__ = [
    "CodeClassification",
    "classify_code",
    "generator_matrix",
    "generator_code",
    "mask_to_poly",
    "poly_divides",
    "poly_gcd",
    "poly_to_mask",
]


def mask_to_poly(mask: int, n: int) -> BinaryPolynomial:
    return BinaryPolynomial(int(format(mask, f"0{n}b")[::-1], 2))


def poly_to_mask(p: BinaryPolynomial, n: int) -> int:
    if p.value >> n:
        raise DomainError(f"polynomial {p} does not fit length {n}")
    return int(format(p.value, f"0{n}b")[::-1], 2)


def generator_matrix(g: BinaryPolynomial, n: int) -> np.ndarray:
    """k x n matrix whose row i holds the coefficients of X^i g(X)."""
    if g.is_zero or not 0 < g.degree < n:
        raise DomainError(f"generator {g} needs 0 < degree < {n}")
    k = n - g.degree
    G = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        for j, c in enumerate(g.coeffs):
            G[i, i + j] = c
    return G


def generator_code(g: BinaryPolynomial, n: int) -> LinearCode:
    """The polynomial code spanned by the rows of ``generator_matrix``."""
    G = generator_matrix(g, n)
    rows = [int("".join(map(str, row)), 2) for row in G]
    return span_basis(rows, n)


@dataclass(frozen=True)
class CodeClassification:
    is_polynomial: bool
    generator: Optional[BinaryPolynomial]
    is_cyclic: bool
    # gcd of the basis polynomials, reported even when it is not a generator
    basis_gcd: Optional[BinaryPolynomial] = None


def classify_code(C: LinearCode) -> CodeClassification:
    """Decide whether C is a polynomial code, and whether it is cyclic.

    Every word of the polynomial code generated by g is a multiple of g,
    so the gcd of a basis is a multiple of g; with ``deg g = n - k`` the
    multiples of the gcd already fill k dimensions and the two codes agree.
    """
    if C.dimension == 0:
        return CodeClassification(False, None, False)
    n, k = C.length, C.dimension
    g = poly_gcd_all([mask_to_poly(row, n) for row in C.basis])
    if g.degree != n - k:
        return CodeClassification(False, None, False, g)
    if g.degree == 0:
        # the full space: generated by the constant 1, which divides X^n + 1
        return CodeClassification(True, g, True, g)
    assert generator_code(g, n) == C
    return CodeClassification(True, g, poly_divides(g, x_pow_plus_one(n)), g)


def rotate_left(word: int, n: int) -> int:
    """Cyclic shift: the first coordinate becomes the last."""
    return ((word << 1) | (word >> (n - 1))) & ((1 << n) - 1)
