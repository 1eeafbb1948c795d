"""Polynomials over GF(2) stored as integer bitmasks.

Bit ``i`` of ``value`` is the coefficient of ``X^i``.  Every nonzero
polynomial over GF(2) is monic, so no normalization beyond the integer
itself is needed; the zero polynomial is ``BinaryPolynomial(0)`` and has
no degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError


@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise DomainError(f"polynomial bitmask must be nonnegative, got {self.value}")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "BinaryPolynomial":
        """Build from coefficients listed by increasing power of X."""
        value = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                value |= 1 << i
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> "BinaryPolynomial":
        """Inverse of ``str``: accepts forms like ``"1+X+X^4"`` or ``"0"``."""
        text = text.replace(" ", "")
        if text == "0":
            return cls(0)
        value = 0
        for term in text.split("+"):
            if term == "1":
                e = 0
            elif term == "X":
                e = 1
            elif term.startswith("X^") and term[2:].isdigit():
                e = int(term[2:])
            else:
                raise DomainError(f"cannot parse polynomial term {term!r}")
            value ^= 1 << e
        return cls(value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def degree(self) -> int:
        if self.value == 0:
            raise DomainError("the zero polynomial has no degree")
        return self.value.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients by increasing power, up to the leading one."""
        return tuple((self.value >> i) & 1 for i in range(self.value.bit_length()))

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(_mul(self.value, other.value))

    def __divmod__(self, other: "BinaryPolynomial"):
        q, r = _divmod(self.value, other.value)
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __mod__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return divmod(self, other)[0]

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        terms = []
        for i in range(self.value.bit_length()):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else "X" if i == 1 else f"X^{i}")
        return "+".join(terms)


def _mul(a: int, b: int) -> int:
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DomainError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_gcd(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    """Greatest common divisor by Euclid's algorithm."""
    if p.is_zero and q.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    a, b = p.value, q.value
    while b:
        a, b = b, _divmod(a, b)[1]
    return BinaryPolynomial(a)


def poly_gcd_all(polys: Sequence[BinaryPolynomial]) -> BinaryPolynomial:
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise DomainError("gcd of an all-zero family is undefined")
    g = nonzero[0]
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
    return g


def poly_divides(p: BinaryPolynomial, q: BinaryPolynomial) -> bool:
    """True iff ``p`` divides ``q``."""
    if p.is_zero:
        raise DomainError("the zero polynomial divides nothing")
    return _divmod(q.value, p.value)[1] == 0


def x_pow_plus_one(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)
