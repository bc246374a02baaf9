"""skewbrace: finite skew braces, their biquandles, and link coloring invariants.

Validate structure tables, derive biquandle operations, parse signed Gauss
codes, enumerate colorings, and compute the counting invariant together
with its two polynomial enhancements.
"""

from __future__ import annotations

from .backends import available_backends, current_backend, set_backend
from .biquandle import (
    AxiomReport,
    AxiomViolation,
    Biquandle,
    derive_biquandle,
    is_involutive,
    r_map,
    verify_biquandle_axioms,
    yb_map,
    yb_map_inverse,
)
from .bundled import bundled_brace_names, bundled_links, load_bundled_brace
from .closures import (
    EmptyGenerators,
    biquandle_closure,
    enumerate_ideals,
    group_closure,
    ideal_closure,
    is_ideal,
)
from .coloring import (
    brute_force_colorings,
    counting_invariant,
    derived_biquandle,
    enumerate_colorings,
)
from .gauss import (
    CrossingUsedWrong,
    GaussCodeError,
    GaussSyntaxError,
    LinkDiagram,
    SemiarcSystem,
    SignMismatch,
    build_constraints,
    format_gauss_code,
    parse_gauss_code,
    parse_link_file,
)
from .invariants import (
    ExponentProfile,
    Polynomial1,
    Polynomial2,
    both_polynomials,
    exponent_profile,
    ideal_polynomial,
    move_invariance_trials,
    sb_polynomial,
    specialize,
)
from .moves import InvalidLocation, apply_r1, apply_r2, gap_locations, random_move
from .tables import (
    DistributiveLawFails,
    FiniteGroup,
    IdentityMismatch,
    NoIdentity,
    NoInverse,
    NotAssociative,
    OperationTable,
    SkewBrace,
    ValidationError,
    format_brace_file,
    is_star_commutative,
    load_brace_file,
    parse_brace_file,
    validate_group,
    validate_skew_brace,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "available_backends",
    "current_backend",
    "set_backend",
    "OperationTable",
    "FiniteGroup",
    "SkewBrace",
    "ValidationError",
    "NotAssociative",
    "NoIdentity",
    "NoInverse",
    "DistributiveLawFails",
    "IdentityMismatch",
    "validate_group",
    "validate_skew_brace",
    "is_star_commutative",
    "parse_brace_file",
    "format_brace_file",
    "load_brace_file",
    "Biquandle",
    "AxiomReport",
    "AxiomViolation",
    "derive_biquandle",
    "derived_biquandle",
    "verify_biquandle_axioms",
    "yb_map",
    "yb_map_inverse",
    "r_map",
    "is_involutive",
    "EmptyGenerators",
    "group_closure",
    "biquandle_closure",
    "ideal_closure",
    "is_ideal",
    "enumerate_ideals",
    "LinkDiagram",
    "SemiarcSystem",
    "GaussCodeError",
    "GaussSyntaxError",
    "CrossingUsedWrong",
    "SignMismatch",
    "parse_gauss_code",
    "format_gauss_code",
    "build_constraints",
    "parse_link_file",
    "InvalidLocation",
    "apply_r1",
    "apply_r2",
    "gap_locations",
    "random_move",
    "enumerate_colorings",
    "counting_invariant",
    "brute_force_colorings",
    "Polynomial2",
    "Polynomial1",
    "ExponentProfile",
    "sb_polynomial",
    "ideal_polynomial",
    "both_polynomials",
    "specialize",
    "exponent_profile",
    "move_invariance_trials",
    "bundled_brace_names",
    "load_bundled_brace",
    "bundled_links",
]
