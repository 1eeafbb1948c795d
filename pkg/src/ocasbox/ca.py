"""No-boundary cellular automata and the Latin squares they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolfun import LocalRule, is_bipermutive, is_linear, rule_polynomial
from .errors import DomainError
from .gf2poly import poly_gcd


@dataclass(frozen=True)
class CellularAutomaton:
    rule: LocalRule
    input_len: int

    def __post_init__(self):
        if self.output_len < 1:
            raise DomainError(
                f"input length {self.input_len} too short for diameter {self.rule.n_vars}"
            )

    @property
    def diameter(self) -> int:
        return self.rule.n_vars

    @property
    def output_len(self) -> int:
        return self.input_len - (self.rule.n_vars - 1)

    def apply_int(self, x: int) -> int:
        """Same as ``apply`` on packed integers (first cell = most significant bit)."""
        d = self.rule.n_vars
        window = (1 << d) - 1
        out = 0
        for i in range(self.output_len):
            idx = (x >> (self.input_len - d - i)) & window
            out = (out << 1) | ((self.rule.table >> idx) & 1)
        return out


def apply(ca: CellularAutomaton, cells: Sequence[int]) -> tuple[int, ...]:
    if len(cells) != ca.input_len:
        raise DomainError(f"expected {ca.input_len} cells, got {len(cells)}")
    d = ca.diameter
    out = []
    for i in range(ca.output_len):
        k = 0
        for c in cells[i:i + d]:
            k = (k << 1) | (c & 1)
        out.append((ca.rule.table >> k) & 1)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class LatinSquare:
    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        return isinstance(other, LatinSquare) and np.array_equal(self.entries, other.entries)

    def to_text(self) -> str:
        width = len(str(self.order - 1))
        return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in self.entries)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.entries) + "\n"


def _square_entries(rule: LocalRule) -> np.ndarray:
    d = rule.n_vars
    b = d - 1
    n = 2 * b
    x = np.arange(1 << n, dtype=np.int64)
    table = rule.as_array()
    out = np.zeros_like(x)
    window = (1 << d) - 1
    for i in range(b):
        out = (out << 1) | table[(x >> (n - d - i)) & window]
    return out.reshape(1 << b, 1 << b)


def latin_square(rule: LocalRule) -> LatinSquare:
    """Cayley table of the CA on 2b cells: left half indexes rows, right half columns."""
    if rule.n_vars < 2 or is_bipermutive(rule) is None:
        raise DomainError(f"rule {rule.number} (d={rule.n_vars}) is not bipermutive")
    return LatinSquare(_square_entries(rule))


def _as_array(square) -> np.ndarray:
    return square.entries if isinstance(square, LatinSquare) else np.asarray(square)


def is_latin(square) -> bool:
    a = _as_array(square)
    n = a.shape[0]
    if a.shape != (n, n):
        return False
    want = np.arange(n)
    return bool(
        (np.sort(a, axis=1) == want).all() and (np.sort(a, axis=0) == want[:, None]).all()
    )


def are_orthogonal(l1, l2) -> bool:
    """Superposition check: every ordered symbol pair occurs exactly once."""
    a, b = _as_array(l1), _as_array(l2)
    if a.shape != b.shape:
        raise DomainError(f"order mismatch: {a.shape} vs {b.shape}")
    n = a.shape[0]
    seen = np.zeros(n * n, dtype=bool)
    for p in (a * n + b).ravel():
        if seen[p]:
            return False
        seen[p] = True
    return True


def _check_pair(f: LocalRule, g: LocalRule) -> None:
    if f.n_vars != g.n_vars:
        raise DomainError(f"diameter mismatch: {f.n_vars} vs {g.n_vars}")
    for r in (f, g):
        if r.n_vars < 2 or is_bipermutive(r) is None:
            raise DomainError(f"rule {r.number} (d={r.n_vars}) is not bipermutive")


def is_oca_pair(f: LocalRule, g: LocalRule) -> bool:
    _check_pair(f, g)
    return are_orthogonal(latin_square(f), latin_square(g))


def linear_orthogonality_by_coprimality(f: LocalRule, g: LocalRule) -> bool:
    _check_pair(f, g)
    for r in (f, g):
        if not is_linear(r):
            raise DomainError(f"rule {r.number} is not linear")
    return poly_gcd(rule_polynomial(f), rule_polynomial(g)).value == 1
