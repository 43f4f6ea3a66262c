"""Exact computation with odd codifferentials on graded symmetric coalgebras.

The package works over the rationals throughout: cochains are finite
term dictionaries with Fraction coefficients, linear algebra is
fraction-free or rational Gauss-Jordan, and every reported number is the
result of an exact computation rather than a floating-point one.
"""

from .spaces import Bidim, GradedSpace, count_monomials, enumerate_monomials
from .cochains import (
    Cochain,
    bracket,
    compose,
    is_codifferential,
    iter_basis,
    random_cochain,
)
from .literals import (
    CochainExpr,
    InstantiationError,
    ParseError,
    instantiate,
    parse_bindings,
    parse_cochain,
    print_cochain,
)
from .cohomology import (
    CoboundaryBlocks,
    coboundary_blocks,
    coclass_coordinates,
    cohomology_bidim,
    cohomology_row,
    representatives,
)
from .structure import (
    SuperAlgebra,
    center,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    to_superalgebra,
)
from .extensions import ExtensionSplit, beta_shift, compatibility_conditions, split
from .transforms import (
    EvenAutomorphism,
    apply,
    invariants,
    search_witness,
    verify_isomorphism,
)
from .deformations import (
    JumpFamily,
    check_jump,
    deformation_directions,
    obstruction_vanishes,
)
from .catalog import (
    Catalog,
    CatalogEntry,
    CatalogRow,
    EquivalenceClaim,
    JumpClaim,
    StructureClaim,
    load_catalog,
)
from .verify import report_json, verify_claims, verify_tables

__version__ = "0.1.0"

__all__ = [
    "Bidim",
    "GradedSpace",
    "count_monomials",
    "enumerate_monomials",
    "Cochain",
    "bracket",
    "compose",
    "is_codifferential",
    "iter_basis",
    "random_cochain",
    "CochainExpr",
    "InstantiationError",
    "ParseError",
    "instantiate",
    "parse_bindings",
    "parse_cochain",
    "print_cochain",
    "CoboundaryBlocks",
    "coboundary_blocks",
    "coclass_coordinates",
    "cohomology_bidim",
    "cohomology_row",
    "representatives",
    "SuperAlgebra",
    "center",
    "derived_series",
    "is_nilpotent",
    "is_solvable",
    "lower_central_series",
    "to_superalgebra",
    "ExtensionSplit",
    "beta_shift",
    "compatibility_conditions",
    "split",
    "EvenAutomorphism",
    "apply",
    "invariants",
    "search_witness",
    "verify_isomorphism",
    "JumpFamily",
    "check_jump",
    "deformation_directions",
    "obstruction_vanishes",
    "Catalog",
    "CatalogEntry",
    "CatalogRow",
    "EquivalenceClaim",
    "JumpClaim",
    "StructureClaim",
    "load_catalog",
    "report_json",
    "verify_claims",
    "verify_tables",
    "__version__",
]
