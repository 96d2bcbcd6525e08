"""Exact computations for one-generated nilpotent assosymmetric algebras.

Structure-constant algebras over the rationals or GF(p), their second
cohomology, central extensions, and isomorphism search, together with a
catalog of the low-dimensional classification and a command-line tool.
"""

__version__ = "0.1.0"

from .algebra import (
    DEFAULT_SEED,
    Algebra,
    CheckResult,
    annihilator,
    associator,
    base_change,
    check_assosymmetric,
    generated_subalgebra,
    is_homomorphism,
    is_one_generated,
    multiply,
    power_sequence,
    quotient_by_central_subspace,
    reduce_mod_p,
)
from .catalog import catalog_get, instances, names, sample_parameters
from .cohomology import (
    BilinearForm,
    check_extension_admissible,
    coboundary,
    coboundary_space,
    cocycle_annihilator,
    cocycle_space,
    cohomology_basis,
    format_form,
    is_cocycle,
    parse_form,
)
from .dsl import parse_algebra, parse_cocycles, serialize_algebra, serialize_cocycle
from .errors import (
    NilexError,
    FieldMismatchError,
    DimensionMismatchError,
    BadPrimeError,
    SingularMatrixError,
    NotInSpanError,
    NotACocycleError,
    NotCentralError,
    TrivialAnnihilatorError,
    MissingPlanError,
    IsomorphismFailure,
    UnknownAlgebraError,
    ExcludedParameterError,
    OffLocusError,
    ParseError,
)
from .extensions import ExtensionSpec, central_extension, recover_quotient, validate_extension
from .fields import GF, QQ
from .isomorphism import (
    certify_noniso,
    fingerprint,
    iso_by_generator_image,
    iso_search_fp,
    iso_search_rational,
    verify_witness,
)
from .linalg import Matrix, kernel_basis, rank, rational_reconstruction, rref

__all__ = [
    "DEFAULT_SEED",
    "NilexError",
    "FieldMismatchError",
    "DimensionMismatchError",
    "BadPrimeError",
    "SingularMatrixError",
    "NotInSpanError",
    "NotACocycleError",
    "NotCentralError",
    "TrivialAnnihilatorError",
    "MissingPlanError",
    "IsomorphismFailure",
    "UnknownAlgebraError",
    "ExcludedParameterError",
    "OffLocusError",
    "ParseError",
    "GF",
    "QQ",
    "Algebra",
    "BilinearForm",
    "CheckResult",
    "ExtensionSpec",
    "Matrix",
    "annihilator",
    "associator",
    "base_change",
    "catalog_get",
    "central_extension",
    "certify_noniso",
    "check_assosymmetric",
    "check_extension_admissible",
    "coboundary",
    "coboundary_space",
    "cocycle_annihilator",
    "cocycle_space",
    "cohomology_basis",
    "fingerprint",
    "format_form",
    "generated_subalgebra",
    "instances",
    "is_cocycle",
    "is_homomorphism",
    "is_one_generated",
    "iso_by_generator_image",
    "iso_search_fp",
    "iso_search_rational",
    "kernel_basis",
    "multiply",
    "names",
    "parse_algebra",
    "parse_cocycles",
    "parse_form",
    "power_sequence",
    "quotient_by_central_subspace",
    "rank",
    "rational_reconstruction",
    "recover_quotient",
    "reduce_mod_p",
    "rref",
    "sample_parameters",
    "serialize_algebra",
    "serialize_cocycle",
    "validate_extension",
    "verify_witness",
]
