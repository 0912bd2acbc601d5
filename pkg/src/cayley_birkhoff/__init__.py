"""Exact Cayley-Hamilton verification and Birkhoff decomposition.

Everything here works over exact rationals and integers; there is no
floating point anywhere in the package.
"""

from .exact_arith import (
    QQ,
    ZZ,
    Rational,
    Ring,
    format_rational,
    parse_rational,
    rat_add,
    rat_cmp,
    rat_mul,
)
from .polyring import (
    Polynomial,
    commutes_with_coeffs,
    divide_left_linear,
    divide_right_linear,
    evaluate_left,
    evaluate_right,
    format_poly,
    linear_factor,
    poly_add,
    poly_mul,
    poly_ring,
)
from .matrix_alg import (
    CharPoly,
    DimensionError,
    SquareMatrix,
    UnsupportedRingError,
    adjugate,
    adjugate_identity_check,
    cayley_hamilton_check,
    char_poly,
    determinant,
    mat_identity,
    mat_mul,
    matrix_ring,
    reinterpret,
    reinterpret_inverse,
)
from .birkhoff import (
    AlternatingCycle,
    BirkhoffDecomposition,
    BistochasticMatrix,
    NotBistochasticError,
    Permutation,
    PerturbationMatrix,
    birkhoff_decompose,
    check_bistochastic,
    extract_step,
    find_alternating_cycle,
    perturbation_matrix,
    reconstruct,
    reduce_support,
    support_permutation,
)

__version__ = "0.1.0"
