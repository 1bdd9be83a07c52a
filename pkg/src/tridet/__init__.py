"""Linear-time determinants and pivot-based factorizations for tridiagonal matrices."""

from .core import (
    MinorSequence,
    SignedLogValue,
    TridiagonalMatrix,
    make_matrix,
    parse_matrix_text,
    format_matrix_text,
    to_dense,
)
from .factorization import Convention, LUFactors, is_positive_definite, lu_factorize
from .generators import Family, closed_form_det, gen_example
from .oracle import dense_det_exact, dense_det_float
from .recurrences import (
    Algorithm,
    DetResult,
    PivotSequence,
    det_hybrid,
    det_hybrid_scaled,
    det_three_term,
    det_two_term,
    minor_sequence,
    pivot_sequence,
)
from .symbolic import Polynomial, RationalFunction, det_detgtri, poly_eval_at_zero, ratfn_arith

__all__ = [
    "Algorithm",
    "Convention",
    "DetResult",
    "Family",
    "LUFactors",
    "MinorSequence",
    "PivotSequence",
    "Polynomial",
    "RationalFunction",
    "SignedLogValue",
    "TridiagonalMatrix",
    "closed_form_det",
    "dense_det_exact",
    "dense_det_float",
    "det_detgtri",
    "det_hybrid",
    "det_hybrid_scaled",
    "det_three_term",
    "det_two_term",
    "format_matrix_text",
    "gen_example",
    "is_positive_definite",
    "lu_factorize",
    "make_matrix",
    "minor_sequence",
    "parse_matrix_text",
    "pivot_sequence",
    "poly_eval_at_zero",
    "ratfn_arith",
    "to_dense",
]

__version__ = "0.1.0"
