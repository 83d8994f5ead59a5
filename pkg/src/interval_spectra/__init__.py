"""Inner and outer bounds on the eigenvalue sets of symmetric interval matrices."""

from .bands import Band, BandSet
from .eig import EigenPairs, spectral_radius_nonneg, sym_eigen, sym_eigvals
from .errors import DimensionCapError, IterationLimitError, ValidationError
from .intervals import (
    IntervalMatrix,
    IntervalScalar,
    Side,
    SymmetricIntervalMatrix,
    decompose,
    gram_product,
    interval_matvec,
    jordan_wielandt,
    vertex_matrix,
)
from .local import LocalResult, local_improvement
from .outer import outer_bounds, tighten_outer
from .submatrix import (
    FeasibilityVerdict,
    Mode,
    certify_exact,
    feasibility_certificate,
    restrict_to_gap_indices,
    select_matrix_with_zero_product,
    submatrix_bounds,
    submatrix_enum,
)
from .vertex import vertex_enum_bounds

__all__ = [
    "Band", "BandSet", "EigenPairs", "sym_eigen", "sym_eigvals", "spectral_radius_nonneg",
    "ValidationError", "DimensionCapError", "IterationLimitError",
    "IntervalScalar", "IntervalMatrix", "SymmetricIntervalMatrix", "Side",
    "vertex_matrix", "interval_matvec", "decompose", "jordan_wielandt", "gram_product",
    "outer_bounds", "tighten_outer", "LocalResult", "local_improvement", "vertex_enum_bounds",
    "Mode", "FeasibilityVerdict", "select_matrix_with_zero_product", "feasibility_certificate",
    "certify_exact", "restrict_to_gap_indices", "submatrix_enum", "submatrix_bounds",
]
