"""biquat: matrix theory over the complex quaternion (biquaternion) algebra.

Every question about biquaternion scalars and matrices -- inversion,
pseudoinversion, rank, right eigenvalues, similarity, determinants -- is
lowered to dense complex linear algebra through faithful complex
representations and lifted back.
"""

from . import clinalg, io, sampling
from .determinant import (
    CentralDet,
    cayley_hamilton_residual,
    central_charpoly,
    central_det,
    central_det_sqrt,
    charpoly_coefficient_scale,
    scaling_exponent_probe,
    triangular_central_det,
)
from .errors import (
    BiquatError,
    ConvergenceError,
    DegenerateWitnessError,
    DimensionError,
    InvalidPairError,
    NotInvertibleError,
    NotTriangularError,
    RankDeficientLiftError,
)
from .matrix import (
    BqMatrix,
    HalfRank,
    block_diagonal,
    frame_reconstruct,
    recon_frame,
    repr_factor,
    shuffle_permutations,
)
from .scalar import (
    E1,
    E2,
    E3,
    ONE,
    Biquaternion,
    CanonicalCase,
    ScalarFlags,
    format_biquaternion,
    parse_biquaternion,
    principal_sqrt,
)
from .spectral import (
    EigenPair,
    RegularEigenPair,
    adjoint_vector,
    derived_complex_eigenvalues,
    diagonalizable,
    regular_right_eigenpair,
    right_eigenpairs,
    similar,
    similar_to_complex,
)
from .verify import LawResult, VerifyReport, verify_suite

__version__ = "0.1.0"

__all__ = [
    "Biquaternion",
    "BqMatrix",
    "HalfRank",
    "EigenPair",
    "RegularEigenPair",
    "CanonicalCase",
    "ScalarFlags",
    "CentralDet",
    "LawResult",
    "VerifyReport",
    "ONE",
    "E1",
    "E2",
    "E3",
    "BiquatError",
    "DimensionError",
    "NotInvertibleError",
    "NotTriangularError",
    "DegenerateWitnessError",
    "RankDeficientLiftError",
    "InvalidPairError",
    "ConvergenceError",
    "adjoint_vector",
    "block_diagonal",
    "cayley_hamilton_residual",
    "central_charpoly",
    "central_det",
    "central_det_sqrt",
    "charpoly_coefficient_scale",
    "clinalg",
    "derived_complex_eigenvalues",
    "diagonalizable",
    "format_biquaternion",
    "frame_reconstruct",
    "io",
    "parse_biquaternion",
    "principal_sqrt",
    "recon_frame",
    "regular_right_eigenpair",
    "repr_factor",
    "right_eigenpairs",
    "sampling",
    "scaling_exponent_probe",
    "shuffle_permutations",
    "similar",
    "similar_to_complex",
    "triangular_central_det",
    "verify_suite",
]
