"""Exact invariants of real quadratic fields F = Q(sqrt(D)), D prime = 1 mod 4.

The package computes, entirely in exact arithmetic, the data attached to the
rank-2 boundary motive of the Hilbert modular surface of such a field:
fundamental units, zeta_F(-1) and its derived constants, the cusp-resolution
cycle with its negative-definite intersection matrix, boundary cohomology,
the Hodge-de Rham extension class of log(eps~), and l-adic Frobenius matrices
built from Kummer cocycles.
"""

from .cusp import (
    CohomologyReport,
    CuspCycle,
    ExactMatrix,
    NotGreaterThanOne,
    NotSymmetric,
    QuadIrrational,
    boundary_cohomology,
    boundary_d02,
    cusp_cycle,
    hj_step,
    intersection_matrix,
    is_negative_definite,
)
from .galois import (
    BadDenominator,
    FFElem,
    FiniteField,
    NoSuchRoot,
    Ramified,
    RepMatrix,
    RootMismatch,
    frobenius_matrix,
    frobenius_matrix_3d,
    kummer_tau,
    least_generator,
    reduce_unit,
    root_of_unity,
    verify_power_law,
)
from .quadfield import (
    FieldCtx,
    FieldError,
    NarrowClassNotOne,
    NotOneMod4,
    NotPrime,
    QuadElem,
    chi_D,
    fundamental_unit,
    make_field,
    narrow_class_number,
    totally_positive_unit,
)
from .realisation import (
    GENERATORS,
    EisCoefficients,
    EpsPower,
    ExactComplex,
    HodgeClass,
    OneMotiveDescriptor,
    RealisationDatasheet,
    boundary_ledger,
    datasheet,
    eis_to_hodge,
    eisenstein_coefficients,
    epsilon_tilde_exponent,
    hodge_de_rham_class,
    kummer_one_motive,
)
from .zeta import (
    ZetaReport,
    covolume,
    gauss_sum_numeric,
    volume_constants,
    zeta_minus1,
    zeta_minus1_bernoulli,
    zeta_minus1_siegel,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # quadfield
    "FieldCtx", "FieldError", "NarrowClassNotOne", "NotOneMod4", "NotPrime",
    "QuadElem", "chi_D", "fundamental_unit", "make_field",
    "narrow_class_number", "totally_positive_unit",
    # zeta
    "ZetaReport", "covolume", "gauss_sum_numeric", "volume_constants",
    "zeta_minus1", "zeta_minus1_bernoulli", "zeta_minus1_siegel",
    # cusp
    "CohomologyReport", "CuspCycle", "ExactMatrix", "NotGreaterThanOne",
    "NotSymmetric", "QuadIrrational", "boundary_cohomology", "boundary_d02",
    "cusp_cycle", "hj_step", "intersection_matrix", "is_negative_definite",
    # realisation
    "GENERATORS", "EisCoefficients", "EpsPower", "ExactComplex", "HodgeClass",
    "OneMotiveDescriptor", "RealisationDatasheet", "boundary_ledger",
    "datasheet", "eis_to_hodge", "eisenstein_coefficients",
    "epsilon_tilde_exponent", "hodge_de_rham_class", "kummer_one_motive",
    # galois
    "BadDenominator", "FFElem", "FiniteField", "NoSuchRoot", "Ramified",
    "RepMatrix", "RootMismatch", "frobenius_matrix", "frobenius_matrix_3d",
    "kummer_tau", "least_generator", "reduce_unit", "root_of_unity",
    "verify_power_law",
]
