"""Real m-Arf functions on Klein surfaces and the covering group behind them.

The package has four layers:

* :mod:`arfspin.topology` — admissible topological types (g, k, eps) of
  Klein surfaces and their decompositions along invariant curves;
* :mod:`arfspin.arf` — real m-Arf functions represented by their values
  on a symmetric generating set, with validation and Arf invariants;
* :mod:`arfspin.enumeration` — exhaustive enumeration, exact counting,
  and cross-checking against the closed-form counts;
* :mod:`arfspin.cover` — the m-fold covering group of the hyperbolic
  isometries, its level function, and a randomized identity suite.

The ``arfspin`` console script exposes all of it; see ``arfspin --help``.
"""
from .arf import (
    ArfValidationError,
    ArfValueSet,
    RealArfFunction,
    SpinModulus,
    ValidationCode,
    arf_invariant_symmetric,
    arf_invariant_with_holes,
    complete,
    spin_admissible,
    validate_hole_values,
    validate_real_value_set,
)
from .cover import (
    TOL,
    CoverElement,
    IdentityCheckResult,
    Isometry,
    canonical_lift,
    central,
    conjugation_sign_check,
    invert,
    level,
    make_hyperbolic,
    make_J,
    make_parabolic,
    multiply,
    run_identity_suite,
    twist_companion,
)
from .enumeration import (
    CSV_HEADER,
    CountReport,
    brute_force_counts,
    closed_form_count,
    enumerate_real_arf_functions,
    verify_range,
)
from .errors import BranchContinuationError, OutOfScopeError
from .topology import (
    BoundaryKind,
    Decomposition,
    TopologicalType,
    admissible_n_values,
    canonical_decomposition,
    is_valid_topological_type,
    make_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "ArfValidationError",
    "ArfValueSet",
    "BoundaryKind",
    "BranchContinuationError",
    "CountReport",
    "CoverElement",
    "CSV_HEADER",
    "Decomposition",
    "IdentityCheckResult",
    "Isometry",
    "OutOfScopeError",
    "RealArfFunction",
    "SpinModulus",
    "TOL",
    "TopologicalType",
    "ValidationCode",
    "admissible_n_values",
    "arf_invariant_symmetric",
    "arf_invariant_with_holes",
    "brute_force_counts",
    "canonical_decomposition",
    "canonical_lift",
    "central",
    "closed_form_count",
    "complete",
    "conjugation_sign_check",
    "enumerate_real_arf_functions",
    "invert",
    "is_valid_topological_type",
    "level",
    "make_decomposition",
    "make_hyperbolic",
    "make_J",
    "make_parabolic",
    "multiply",
    "run_identity_suite",
    "spin_admissible",
    "twist_companion",
    "validate_hole_values",
    "validate_real_value_set",
    "verify_range",
    "__version__",
]
