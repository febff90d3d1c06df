"""Greedy sum-of-squares decomposition, Cl(0,3) factoring and the New Mean statistics."""

from cliffstat.ssgs import (
    ScaledDecomposition,
    SquareDecomposition,
    decompose,
    decompose_decimal,
    isqrt_floor,
    minimal_term_count_value,
    reconstruct,
)
from cliffstat.clifford import (
    BasisProduct,
    Multivector,
    basis_product,
    conjugate,
    from_decomposition,
    geometric_product,
    scalar_part,
)
from cliffstat.stats import (
    CoefficientMatrix,
    RepresentationOverflow,
    SetSummary,
    coefficient_matrix,
    column_variances,
    lambda_,
    new_mean_clifford,
    new_mean_direct,
    summarize,
)

__all__ = [
    "BasisProduct",
    "CoefficientMatrix",
    "Multivector",
    "RepresentationOverflow",
    "ScaledDecomposition",
    "SetSummary",
    "SquareDecomposition",
    "basis_product",
    "coefficient_matrix",
    "column_variances",
    "conjugate",
    "decompose",
    "decompose_decimal",
    "from_decomposition",
    "geometric_product",
    "isqrt_floor",
    "lambda_",
    "minimal_term_count_value",
    "new_mean_clifford",
    "new_mean_direct",
    "reconstruct",
    "scalar_part",
    "summarize",
]
