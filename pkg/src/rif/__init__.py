"""Toolkit for regular k-uniform intersecting families.

Verification predicates, Johnson-scheme tables and the Delsarte LP, closed
form bounds, explicit constructions, search, and the ``rif`` command line.
"""

from rif._accel import HAVE_JIT, backend_name
from rif.bounds import (
    BoundEntry,
    BoundReport,
    bound_report,
    brc_obstruction,
    ekr_bound,
    existence_threshold,
    general_bound,
    hoffman_bound,
    hoffman_bound_eigen,
    lower_bound_regular,
    nonexistent,
    prop1_bound,
    tightness_integrality_check,
)
from rif.construct import (
    HalfFamilySpec,
    balanced_half_family,
    brace_daykin,
    complete_uniform,
    disjoint_sum,
    extend_family,
    fold_to_intersecting,
    neq2k_construction,
    product_family,
    projective_plane,
    prop3_construction,
)
from rif.core import (
    DegreeProfile,
    InnerDistribution,
    KSetFamily,
    degree_profile,
    diversity,
    inner_distribution,
    irregularity_ratio,
    is_intersecting,
    is_regular,
    is_subset_regular,
    make_family,
    max_pairwise_meet,
    meet_profile,
)
from rif.errors import RifError
from rif.io import dumps, loads, read_family, write_family
from rif.scheme import (
    LPOutcome,
    SchemeTables,
    dual_eigenvalue_closed,
    eigenvalue_P,
    gamma_coefficients,
    lp_max_regular_intersecting,
    macwilliams_transform,
    scheme_tables,
)
from rif.search import SearchResult, cyclic_orbit_search, dfs_search, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "HAVE_JIT",
    "backend_name",
    "BoundEntry",
    "BoundReport",
    "bound_report",
    "brc_obstruction",
    "ekr_bound",
    "existence_threshold",
    "general_bound",
    "hoffman_bound",
    "hoffman_bound_eigen",
    "lower_bound_regular",
    "nonexistent",
    "prop1_bound",
    "tightness_integrality_check",
    "HalfFamilySpec",
    "balanced_half_family",
    "brace_daykin",
    "complete_uniform",
    "disjoint_sum",
    "extend_family",
    "fold_to_intersecting",
    "neq2k_construction",
    "product_family",
    "projective_plane",
    "prop3_construction",
    "DegreeProfile",
    "InnerDistribution",
    "KSetFamily",
    "degree_profile",
    "diversity",
    "inner_distribution",
    "irregularity_ratio",
    "is_intersecting",
    "is_regular",
    "is_subset_regular",
    "make_family",
    "max_pairwise_meet",
    "meet_profile",
    "RifError",
    "dumps",
    "loads",
    "read_family",
    "write_family",
    "LPOutcome",
    "SchemeTables",
    "dual_eigenvalue_closed",
    "eigenvalue_P",
    "gamma_coefficients",
    "lp_max_regular_intersecting",
    "macwilliams_transform",
    "scheme_tables",
    "SearchResult",
    "cyclic_orbit_search",
    "dfs_search",
    "verify_certificate",
]
