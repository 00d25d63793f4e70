"""Exact determinants, characteristic polynomials, eigenvectors and inverses
of tridiagonal k-Toeplitz matrices over commutative rings."""

from .continuant import (
    ContinuantTable,
    alpha_extend,
    build_table,
    continuant_def_oracle,
    rotate,
    second_period_alpha,
    shifted_table,
)
from .determinant import (
    PeriodicDeterminants,
    det_auto,
    det_d1,
    det_d1_all,
    det_d1_shifted_all,
    det_d2,
    det_d3,
    det_d3_many,
    det_d4,
    det_general,
    det_reducible_factored,
    off_diagonal_products,
)
from .fibonacci import (
    FibPair,
    Mat2,
    fib_closed_form,
    fib_pair_dnc,
    fib_pair_recurrence,
    fib_sequence,
    fib_via_eigen_sum,
    lucas_u,
    mat2_power_via_fib,
)
from .inverse import (
    InverseEntry,
    InverseMatrix,
    inv_entry,
    inv_entry_general,
    inv_full,
    inv_full_general,
)
from .matrix import KToeplitzSpec, count_ops
from .ring import (
    CountingRing,
    IntegerRing,
    OpCount,
    PolynomialRing,
    Ring,
    ZMod,
    counted,
    ring_from_json,
    ring_power,
    ring_to_json,
)
from .spectral import (
    CharPoly,
    EigenPair,
    charpoly,
    charpoly_factored_special,
    eigencheck,
    eigenpair,
    eigvec_v,
    eigvec_w,
    lambda_scan,
)

__all__ = [
    "ContinuantTable",
    "KToeplitzSpec",
    "count_ops",
    "alpha_extend",
    "build_table",
    "continuant_def_oracle",
    "rotate",
    "second_period_alpha",
    "shifted_table",
    "PeriodicDeterminants",
    "det_auto",
    "det_d1",
    "det_d1_all",
    "det_d1_shifted_all",
    "det_d2",
    "det_d3",
    "det_d3_many",
    "det_d4",
    "det_general",
    "det_reducible_factored",
    "off_diagonal_products",
    "FibPair",
    "Mat2",
    "fib_closed_form",
    "fib_pair_dnc",
    "fib_pair_recurrence",
    "fib_sequence",
    "fib_via_eigen_sum",
    "lucas_u",
    "mat2_power_via_fib",
    "InverseEntry",
    "InverseMatrix",
    "inv_entry",
    "inv_entry_general",
    "inv_full",
    "inv_full_general",
    "CountingRing",
    "IntegerRing",
    "OpCount",
    "PolynomialRing",
    "Ring",
    "ZMod",
    "counted",
    "ring_from_json",
    "ring_power",
    "ring_to_json",
    "CharPoly",
    "EigenPair",
    "charpoly",
    "charpoly_factored_special",
    "eigencheck",
    "eigenpair",
    "eigvec_v",
    "eigvec_w",
    "lambda_scan",
]

__version__ = "0.1.0"
