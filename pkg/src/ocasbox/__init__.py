"""S-boxes from pairs of orthogonal cellular automata.

Build the S-box of a pair of bipermutive local rules, measure its
nonlinearity, extract its linear components space, and recognize that
space as a polynomial or cyclic code.
"""

from .boolfun import (
    AnfForm,
    LocalRule,
    anf,
    anf_to_rule,
    degree,
    from_rule_number,
    is_affine,
    is_balanced,
    is_bipermutive,
    is_linear,
    nonlinearity,
    rule_polynomial,
    walsh_transform,
)
from .ca import (
    CellularAutomaton,
    LatinSquare,
    apply,
    are_orthogonal,
    is_latin,
    is_oca_pair,
    latin_square,
    linear_orthogonality_by_coprimality,
)
from .codes import CodeClassification, classify_code, generator_matrix
from .errors import ConfigurationError, DomainError, EncodingError, OcaError
from .gf2poly import BinaryPolynomial, poly_divides, poly_gcd
from .lcs import LinearCode, lcs_dimension, linear_components, span_basis
from .sbox import (
    SBox,
    component,
    from_oca,
    is_bijective,
    is_multipermutation,
    sbox_degree,
    sbox_nonlinearity,
)
from .search import PairRecord, SearchReport, analyze_pair, enumerate_bipermutive, run_search

__version__ = "0.1.0"
