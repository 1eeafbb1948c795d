"""Exhaustive search over pairs of bipermutive rules of one diameter.

Every unordered pair of distinct rules is visited once.  Pairs of two
linear rules are dropped, then the orthogonality of the induced Latin
squares is checked, and each surviving pair yields two S-boxes, ``F||G``
and ``G||F``, which are analyzed and reported as separate records.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .boolfun import LocalRule, bipermutive_rule, degree, fwht, nonlinearity
from .ca import _check_pair, _square_entries, is_oca_pair
from .codes import CodeClassification, classify_code
from .errors import ConfigurationError, DomainError
from .gf2poly import BinaryPolynomial
from .lcs import span_basis
from .sbox import SBox, component_spectra, from_oca

log = logging.getLogger(__name__)

MIN_DIAMETER = 3
MAX_DIAMETER = 6
REPORT_SCHEMA = "ocasbox.search-report/1"
WORKERS_ENV = "OCASBOX_WORKERS"

CSV_COLUMNS = [
    "d", "rule_f", "rule_g", "nl_f", "nl_g", "sbox_nl", "sbox_degree",
    "lcs_dim", "is_polynomial", "generator_bitmask", "is_cyclic",
]


def default_workers() -> int:
    value = os.environ.get(WORKERS_ENV)
    if value is None:
        return 1
    try:
        workers = int(value)
    except ValueError:
        raise ConfigurationError(f"{WORKERS_ENV}={value!r} is not an integer") from None
    if workers < 1:
        raise ConfigurationError(f"{WORKERS_ENV} must be positive, got {workers}")
    return workers


def check_diameter(d: int) -> None:
    if not MIN_DIAMETER <= d <= MAX_DIAMETER:
        raise ConfigurationError(
            f"diameter {d} not supported; choose {MIN_DIAMETER} <= d <= {MAX_DIAMETER}"
        )


def enumerate_bipermutive(d: int) -> list[LocalRule]:
    check_diameter(d)
    m = d - 2
    rules = [bipermutive_rule(LocalRule(m, g)) for g in range(1 << (1 << m))]
    return sorted(rules, key=lambda r: r.number)


def generator_label(c: CodeClassification) -> str:
    """Histogram key: the generator, or the basis gcd marked as not a generator."""
    if c.is_polynomial:
        return str(c.generator)
    if c.basis_gcd is None:
        return "none"
    return f"nonpoly:{c.basis_gcd}"


@dataclass(frozen=True)
class PairRecord:
    d: int
    rule_f: int
    rule_g: int
    nl_f: int
    nl_g: int
    sbox_nl: int
    sbox_degree: int
    lcs_dim: int
    lcs_basis: tuple[int, ...]
    classification: CodeClassification

    @property
    def bucket(self) -> tuple[int, int]:
        return (min(self.nl_f, self.nl_g), max(self.nl_f, self.nl_g))

    def to_dict(self) -> dict:
        c = self.classification
        return {
            "d": self.d,
            "rule_f": self.rule_f,
            "rule_g": self.rule_g,
            "nl_f": self.nl_f,
            "nl_g": self.nl_g,
            "sbox_nl": self.sbox_nl,
            "sbox_degree": self.sbox_degree,
            "lcs_dim": self.lcs_dim,
            "lcs_basis": [format(v, f"0{2 * (self.d - 1)}b") for v in self.lcs_basis],
            "is_polynomial": c.is_polynomial,
            "generator": None if c.generator is None else c.generator.value,
            "generator_str": None if c.generator is None else str(c.generator),
            "basis_gcd": None if c.basis_gcd is None else c.basis_gcd.value,
            "is_cyclic": c.is_cyclic,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PairRecord":
        def poly(v):
            return None if v is None else BinaryPolynomial(v)

        return cls(
            d=data["d"],
            rule_f=data["rule_f"],
            rule_g=data["rule_g"],
            nl_f=data["nl_f"],
            nl_g=data["nl_g"],
            sbox_nl=data["sbox_nl"],
            sbox_degree=data["sbox_degree"],
            lcs_dim=data["lcs_dim"],
            lcs_basis=tuple(int(v, 2) for v in data["lcs_basis"]),
            classification=CodeClassification(
                data["is_polynomial"], poly(data["generator"]), data["is_cyclic"], poly(data["basis_gcd"])
            ),
        )

    def csv_row(self) -> list:
        c = self.classification
        return [
            self.d, self.rule_f, self.rule_g, self.nl_f, self.nl_g, self.sbox_nl,
            self.sbox_degree, self.lcs_dim, int(c.is_polynomial),
            "" if c.generator is None else c.generator.value, int(c.is_cyclic),
        ]


@dataclass
class SearchReport:
    diameter: int
    pairs_enumerated: int
    oca_pairs: int
    records: list[PairRecord] = field(default_factory=list)

    @property
    def aggregation(self) -> Counter:
        return Counter((r.bucket, r.lcs_dim, generator_label(r.classification)) for r in self.records)

    def table_rows(self) -> list[dict]:
        """One row per (nl bucket, dim), columns d, nl(f,g), #OCA, dim, #dim plus generators."""
        by_bucket = Counter(r.bucket for r in self.records)
        by_dim = Counter((r.bucket, r.lcs_dim) for r in self.records)
        gens: dict[tuple, Counter] = {}
        for (bucket, dim, label), count in self.aggregation.items():
            gens.setdefault((bucket, dim), Counter())[label] += count
        rows = []
        for bucket, dim in sorted(by_dim, key=lambda k: (k[0], -k[1])):
            rows.append({
                "d": self.diameter,
                "nl": bucket,
                "oca": by_bucket[bucket],
                "dim": dim,
                "count": by_dim[(bucket, dim)],
                "generators": sorted(gens[(bucket, dim)].items(), key=lambda kv: (-kv[1], kv[0])),
            })
        return rows

    def generator_histogram(self) -> Counter:
        return Counter(generator_label(r.classification) for r in self.records)

    def format_table(self) -> str:
        header = ["d", "nl(f,g)", "#OCA", "dim", "#dim", "generators"]
        body = []
        for row in self.table_rows():
            gens = ", ".join(f"{label} ({n})" for label, n in row["generators"])
            body.append([
                str(row["d"]), "({},{})".format(*row["nl"]), str(row["oca"]),
                str(row["dim"]), str(row["count"]), gens,
            ])
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + body]
        lines.append(
            f"# d={self.diameter}: {self.pairs_enumerated} pairs enumerated, "
            f"{self.oca_pairs} nonlinear OCA pairs, {len(self.records)} S-boxes"
        )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "diameter": self.diameter,
            "n": 2 * (self.diameter - 1),
            "pairs_enumerated": self.pairs_enumerated,
            "oca_pairs": self.oca_pairs,
            "records": [r.to_dict() for r in self.records],
            "aggregate": [
                {"nl": list(bucket), "lcs_dim": dim, "generator": label, "count": count}
                for (bucket, dim, label), count in sorted(self.aggregation.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        data = json.loads(text)
        if data.get("schema") != REPORT_SCHEMA:
            raise DomainError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            data["diameter"], data["pairs_enumerated"], data["oca_pairs"],
            [PairRecord.from_dict(r) for r in data["records"]],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            w.writerow(r.csv_row())
        return buf.getvalue()


def analyze_sbox(d: int, f: LocalRule, g: LocalRule, nl_f: int, nl_g: int, H: SBox) -> PairRecord:
    spectra = component_spectra(H)
    peak = np.abs(spectra).max(axis=1)
    n = H.n
    sbox_nl = (1 << (n - 1)) - int(peak.max()) // 2
    members = [int(v) + 1 for v in np.flatnonzero(peak == 1 << n)]
    code = span_basis(members, n)
    if len(members) != (1 << code.dimension) - 1:
        raise AssertionError(f"linear components of ({f.number}, {g.number}) are not closed under XOR")
    return PairRecord(
        d=d,
        rule_f=f.number,
        rule_g=g.number,
        nl_f=nl_f,
        nl_g=nl_g,
        sbox_nl=sbox_nl,
        # every coordinate is the local rule on its own window of distinct inputs
        sbox_degree=max(degree(f), degree(g)),
        lcs_dim=code.dimension,
        lcs_basis=code.basis,
        classification=classify_code(code),
    )


def analyze_pair(f: LocalRule, g: LocalRule) -> Optional[PairRecord]:
    """Full pipeline for the S-box F||G; None if both rules are linear or not orthogonal."""
    _check_pair(f, g)
    if f == g:
        raise DomainError("analyze_pair needs two distinct rules")
    nl_f, nl_g = nonlinearity(f), nonlinearity(g)
    if nl_f == 0 and nl_g == 0:
        return None
    if not is_oca_pair(f, g):
        return None
    return analyze_sbox(f.n_vars, f, g, nl_f, nl_g, from_oca(f, g))


class _Context:
    """Per-diameter tables shared read-only by every worker."""

    def __init__(self, d: int):
        self.d = d
        self.b = d - 1
        self.N = 1 << self.b
        self.rules = enumerate_bipermutive(d)
        tables = np.stack([r.as_array() for r in self.rules]).astype(np.int64)
        spectra = fwht(1 - 2 * tables)
        self.nls = ((1 << (d - 1)) - np.abs(spectra).max(axis=1) // 2).astype(int).tolist()
        dtype = np.uint8 if self.N <= 256 else np.uint16
        self.squares = np.stack([_square_entries(r).ravel() for r in self.rules]).astype(dtype)

    def row_partners(self, i: int, block: int = 4096) -> list[int]:
        """Indices j > i whose pair with rule i passes the nonlinearity and orthogonality gates."""
        m = len(self.rules)
        N = self.N
        out = []
        left = self.squares[i].astype(np.int32) * N
        for start in range(i + 1, m, block):
            stop = min(start + block, m)
            js = np.arange(start, stop)
            if self.nls[i] == 0:
                js = js[np.asarray(self.nls[start:stop]) != 0]
            if js.size == 0:
                continue
            cells = np.sort(left[None, :] + self.squares[js].astype(np.int32), axis=1)
            ok = (np.diff(cells, axis=1) != 0).all(axis=1)
            out.extend(int(j) for j in js[ok])
        return out

    def record(self, i: int, j: int) -> PairRecord:
        f, g = self.rules[i], self.rules[j]
        table = (self.squares[i].astype(np.int64) << self.b) | self.squares[j]
        H = SBox(2 * self.b, tuple(int(v) for v in table))
        return analyze_sbox(self.d, f, g, self.nls[i], self.nls[j], H)


_CTX: Optional[_Context] = None


def _init_worker(d: int) -> None:
    global _CTX
    _CTX = _Context(d)


def _run_rows(rows: range) -> tuple[int, int, list[PairRecord]]:
    ctx = _CTX
    m = len(ctx.rules)
    visited = 0
    oca = 0
    records = []
    for i in rows:
        visited += m - 1 - i
        for j in ctx.row_partners(i):
            oca += 1
            records.append(ctx.record(i, j))
            records.append(ctx.record(j, i))
    return visited, oca, records


def partition_rows(m: int, chunks: int) -> list[range]:
    """Split rows of the pair triangle into contiguous ranges of about equal pair counts."""
    total = m * (m - 1) // 2
    bounds = [0]
    acc = 0
    target = 1
    for i in range(m):
        acc += m - 1 - i
        if target < chunks and acc * chunks >= total * target:
            bounds.append(i + 1)
            target += 1
    bounds.append(m)
    return [range(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]


def run_search(d: int, workers: int = 1) -> SearchReport:
    check_diameter(d)
    if workers < 1:
        raise ConfigurationError(f"workers must be positive, got {workers}")
    m = 1 << (1 << (d - 2))
    if workers == 1:
        _init_worker(d)
        parts = [_run_rows(range(m))]
    else:
        chunks = partition_rows(m, workers * 4)
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(d,)) as pool:
            parts = list(pool.map(_run_rows, chunks))
    visited = sum(p[0] for p in parts)
    oca = sum(p[1] for p in parts)
    records = sorted((r for p in parts for r in p[2]), key=lambda r: (r.rule_f, r.rule_g))
    log.info("d=%d: %d pairs, %d OCA pairs, %d records", d, visited, oca, len(records))
    return SearchReport(d, visited, oca, records)

