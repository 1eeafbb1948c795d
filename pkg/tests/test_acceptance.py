"""Exit criteria for the reproduction, one test group per criterion.

Every assertion is an exact match; the only numeric thresholds are the
stated runtimes.  A per-criterion PASS/FAIL summary is printed at the end
of the pytest run (see conftest.py).
"""

import itertools
import time
from collections import Counter

import numpy as np
import pytest

from ocasbox.boolfun import LocalRule, anf, anf_to_rule, is_linear, walsh_direct, walsh_transform
from ocasbox.ca import is_oca_pair, linear_orthogonality_by_coprimality
from ocasbox.codes import classify_code, generator_code
from ocasbox.gf2poly import BinaryPolynomial
from ocasbox.lcs import linear_components, span_basis
from ocasbox.sbox import from_oca, is_bijective, is_multipermutation, multipermutation_distance
from ocasbox.search import enumerate_bipermutive, run_search

P = BinaryPolynomial.parse
criterion = pytest.mark.criterion

# generators listed for the 64 exceptional d=5 S-boxes, reported but not asserted
REFERENCE_EXCEPTIONAL = {P("X+X^4+X^5"), P("1+X^4+X^5"), P("1+X+X^4"), P("1+X+X^6")}


def rules_by_number(d):
    return {r.number: r for r in enumerate_bipermutive(d)}


# ---------------------------------------------------------------- criterion 1

@pytest.fixture(scope="module")
def timed_report4():
    start = time.perf_counter()
    report = run_search(4, workers=1)
    return report, time.perf_counter() - start


@criterion(1)
def test_c1_d4_counts(timed_report4):
    report, _ = timed_report4
    assert report.pairs_enumerated == 120
    assert len(report.records) == 32


@criterion(1)
def test_c1_d4_rows(timed_report4):
    report, _ = timed_report4
    assert all(r.bucket == (4, 4) for r in report.records)
    assert all(r.sbox_nl == 0 for r in report.records)
    assert all(r.lcs_dim == 3 for r in report.records)


@criterion(1)
def test_c1_d4_runtime(timed_report4, note):
    _, seconds = timed_report4
    note(f"d=4 search: {seconds:.3f} s single-threaded")
    assert seconds < 1.0


# ---------------------------------------------------------------- criterion 2

@criterion(2)
def test_c2_d5_counts(report5):
    assert report5.pairs_enumerated == 32640
    assert len(report5.records) == 1536


@criterion(2)
def test_c2_d5_table(report5):
    by_bucket_dim = Counter((r.bucket, r.lcs_dim) for r in report5.records)
    assert by_bucket_dim == {((4, 4), 4): 768, ((8, 8), 4): 704, ((8, 8), 3): 64}


@criterion(2)
def test_c2_d5_runtime(timed_report5, note):
    _, seconds = timed_report5
    note(f"d=5 search: {seconds:.2f} s single-threaded")
    assert seconds < 60.0


# ---------------------------------------------------------------- criterion 3

@criterion(3)
def test_c3_all_sboxes_linear(report4, report5):
    records = report4.records + report5.records
    assert len(records) == 32 + 1536
    assert all(r.sbox_nl == 0 for r in records)


# ---------------------------------------------------------------- criterion 4

@criterion(4)
def test_c4_d4_cyclic_1_plus_x3(report4):
    for r in report4.records:
        c = r.classification
        assert c.is_polynomial and c.is_cyclic and c.generator == P("1+X^3")


@criterion(4)
def test_c4_d5_dim4_cyclic_1_plus_x4(report5):
    dim4 = [r for r in report5.records if r.lcs_dim == 4]
    assert Counter(r.bucket for r in dim4) == {(4, 4): 768, (8, 8): 704}
    for r in dim4:
        c = r.classification
        assert c.is_polynomial and c.is_cyclic and c.generator == P("1+X^4")


@criterion(4)
def test_c4_d5_exceptional_histogram(report5, note):
    rest = [r for r in report5.records if r.lcs_dim == 3]
    assert len(rest) == 64
    derived = Counter(
        r.classification.generator if r.classification.is_polynomial else r.classification.basis_gcd
        for r in rest
    )
    hist = ", ".join(
        f"{g}{'' if any(r.classification.generator == g for r in rest) else ' [basis gcd, not a generator]'}: {n}"
        for g, n in sorted(derived.items())
    )
    note(f"d=5 dim-3 generator histogram: {hist}")
    listed = sorted(REFERENCE_EXCEPTIONAL)
    note(
        "reference generators g1..g4 found among derived: "
        + ", ".join(f"{g}={'yes' if g in derived else 'no'}" for g in listed)
    )
    assert sum(derived.values()) == 64


@criterion(4)
def test_c4_d5_exceptional_are_polynomial_codes(report5):
    rest = [r for r in report5.records if r.lcs_dim == 3]
    not_polynomial = [r for r in rest if not r.classification.is_polynomial]
    assert not not_polynomial, (
        f"{len(not_polynomial)} of {len(rest)} dim-3 LCS are not polynomial codes; "
        f"basis gcds: {sorted({str(r.classification.basis_gcd) for r in not_polynomial})}"
    )


# ---------------------------------------------------------------- criterion 5

@criterion(5)
def test_c5_d3_no_records():
    report = run_search(3)
    assert report.records == []


# ---------------------------------------------------------------- criterion 6

@criterion(6)
def test_c6_walsh_exhaustive_small():
    for n in range(1, 4):
        for t in range(1 << (1 << n)):
            f = LocalRule(n, t)
            w = walsh_transform(f)
            assert np.array_equal(w, walsh_direct(f))
            assert int((w * w).sum()) == 1 << (2 * n)


@criterion(6)
def test_c6_walsh_exhaustive_n4():
    xs = np.arange(16)
    signs = np.array([[(-1) ** bin(a & x).count("1") for a in xs] for x in xs])
    direct = (1 - 2 * ((np.arange(1 << 16)[:, None] >> xs[None, :]) & 1)) @ signs
    for t in range(1 << 16):
        assert np.array_equal(walsh_transform(LocalRule(4, t)), direct[t])
    assert ((direct * direct).sum(axis=1) == 256).all()


@criterion(6)
def test_c6_walsh_random_5_to_8():
    rng = np.random.default_rng(20231016)
    for n in range(5, 9):
        for _ in range(8):
            bits = rng.integers(0, 2, size=1 << n)
            f = LocalRule.from_bits(bits.tolist())
            w = walsh_transform(f)
            assert np.array_equal(w, walsh_direct(f))
            assert int((w * w).sum()) == 1 << (2 * n)


@criterion(6)
def test_c6_mobius_involution():
    for n in range(0, 5):
        for t in range(1 << (1 << n)):
            f = LocalRule(n, t)
            assert anf_to_rule(anf(f)) == f


@criterion(6)
@pytest.mark.parametrize("d", [3, 4, 5])
def test_c6_coprimality_iff_orthogonality(d):
    linear = [r for r in enumerate_bipermutive(d) if is_linear(r)]
    assert len(linear) == 1 << (d - 2)
    for f, g in itertools.combinations(linear, 2):
        assert linear_orthogonality_by_coprimality(f, g) == is_oca_pair(f, g)


@criterion(6)
@pytest.mark.parametrize("d", [3, 4])
def test_c6_bijectivity_iff_orthogonality(d):
    rules = enumerate_bipermutive(d)
    for f, g in itertools.product(rules, repeat=2):
        assert is_bijective(from_oca(f, g)) == is_oca_pair(f, g)


@criterion(6)
def test_c6_multipermutation_d4(report4):
    rules = rules_by_number(4)
    for r in report4.records:
        f, g = rules[r.rule_f], rules[r.rule_g]
        assert is_multipermutation(f, g)
        assert multipermutation_distance(f, g) >= 3


@criterion(6)
def test_c6_lcs_closure(report4, report5):
    for d, report in ((4, report4), (5, report5)):
        rules = rules_by_number(d)
        for r in report.records:
            members = linear_components(from_oca(rules[r.rule_f], rules[r.rule_g]))
            C = span_basis(members, 2 * (d - 1))
            assert len(members) == (1 << C.dimension) - 1
            assert C.dimension == r.lcs_dim


@criterion(6)
def test_c6_code_round_trip():
    for n in range(2, 9):
        for value in range(2, 1 << n):
            g = BinaryPolynomial(value)
            c = classify_code(generator_code(g, n))
            assert c.is_polynomial and c.generator == g


# ---------------------------------------------------------------- criterion 7

@criterion(7)
def test_c7_determinism(report5):
    reference = report5.to_json()
    for workers in (2, 8):
        assert run_search(5, workers=workers).to_json() == reference
