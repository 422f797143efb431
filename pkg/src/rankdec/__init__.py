"""rankdec: rank-metric (Gabidulin) codes and key-equation solvers.

Exact arithmetic over F_{q^m}, linearized polynomials with their
symbolic (composition) product, the symbolic extended Euclidean
algorithm, Gabidulin encoding/decoding up to half the minimum rank
distance, and a basis of all key-equation solutions for radii beyond
half distance, cross-checked by a Gaussian-elimination oracle.
"""

from .field import (
    ContextMismatchError,
    FieldCtx,
    FieldElement,
    expand,
    frobenius,
    irreducible_polynomial,
    rank_over_fq,
)
from .linalg import MatrixFq, MatrixFqm, kernel_fqm, solve_fq
from .linpoly import LinPoly, min_subspace_poly
from .seea import SeeaStep, SeeaTrace, seea, seea_until_degree
from .gabidulin import GabidulinCode, word_add, word_sub
from .keyeq import (
    DecodingFailure,
    KeyEqBasis,
    ZeroSyndromeError,
    combine,
    oracle_solutions,
    satisfies_key_equation,
    solution_basis,
    solve_unique,
    span_equal,
    syndrome_matrix,
)
from .decoder import (
    BudgetExceededError,
    DecodeOutcome,
    RecoveryError,
    decode_beyond,
    decode_bmd,
    recover_error,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ContextMismatchError",
    "DecodeOutcome",
    "DecodingFailure",
    "FieldCtx",
    "FieldElement",
    "GabidulinCode",
    "KeyEqBasis",
    "LinPoly",
    "MatrixFq",
    "MatrixFqm",
    "RecoveryError",
    "SeeaStep",
    "SeeaTrace",
    "ZeroSyndromeError",
    "combine",
    "decode_beyond",
    "decode_bmd",
    "expand",
    "frobenius",
    "irreducible_polynomial",
    "kernel_fqm",
    "min_subspace_poly",
    "oracle_solutions",
    "rank_over_fq",
    "recover_error",
    "satisfies_key_equation",
    "seea",
    "seea_until_degree",
    "solution_basis",
    "solve_fq",
    "solve_unique",
    "span_equal",
    "syndrome_matrix",
    "word_add",
    "word_sub",
]
