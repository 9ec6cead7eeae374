"""fibercorr: exact verification of symmetric correspondences with integer
minimal equations on fiber products of surface covers.

From monodromy data the package builds the fiber-product cover, the
one-coordinate-change correspondence, and checks its minimal polynomial,
eigen multiplicities, subquotient action, dimension identities, torsion
exponents, and irreducibility facts, all in exact arithmetic.
"""

from .atlas import AtlasEntry, builtin_entries, check_entry
from .coverfile import CoverFile, GroupRecord, parse_cover_file, parse_document, serialize_cover
from .errors import (
    ActionRelationError,
    CoverFileError,
    EigenspaceNotInvariantError,
    Error,
    InvalidCoverError,
    ResourceLimitExceeded,
)
from .fiberprod import (
    Divisor,
    ProductCover,
    apply_D,
    bidegree,
    check_fixed_point_free,
    check_symmetric,
    correspondence_as_set,
    irreducibility_report,
    product_cover,
)
from .homology import (
    DimensionTable,
    TwistedComplex,
    cover_h1_dim,
    cover_h1_dim_cw,
    dimension_table,
    twisted_h1_dim,
    verify_formulas,
)
from .monodromy import (
    ComponentReport,
    MonodromyCover,
    components,
    genus_total,
    is_connected,
    monodromy_group,
    validate,
)
from .operators import (
    CorrespondenceOperator,
    EigenDecomposition,
    TorsionSystem,
    build_operator,
    eigen_decompose,
    expected_multiplicity,
    torsion_exponents,
    verify_equivariance,
    verify_min_equation,
    verify_subquotient_action,
)
from .perms import Perm, PermGroup, compose, parse_perm

__version__ = "0.1.0"

__all__ = [
    "ActionRelationError",
    "AtlasEntry",
    "ComponentReport",
    "CorrespondenceOperator",
    "CoverFile",
    "CoverFileError",
    "DimensionTable",
    "Divisor",
    "EigenDecomposition",
    "EigenspaceNotInvariantError",
    "Error",
    "GroupRecord",
    "InvalidCoverError",
    "MonodromyCover",
    "Perm",
    "PermGroup",
    "ProductCover",
    "ResourceLimitExceeded",
    "TorsionSystem",
    "TwistedComplex",
    "apply_D",
    "bidegree",
    "build_operator",
    "builtin_entries",
    "check_entry",
    "check_fixed_point_free",
    "check_symmetric",
    "components",
    "compose",
    "correspondence_as_set",
    "cover_h1_dim",
    "cover_h1_dim_cw",
    "dimension_table",
    "eigen_decompose",
    "expected_multiplicity",
    "genus_total",
    "irreducibility_report",
    "is_connected",
    "monodromy_group",
    "parse_cover_file",
    "parse_document",
    "parse_perm",
    "product_cover",
    "serialize_cover",
    "torsion_exponents",
    "twisted_h1_dim",
    "validate",
    "verify_equivariance",
    "verify_formulas",
    "verify_min_equation",
    "verify_subquotient_action",
]
