"""Exact HeLP-constraint enumeration of partial augmentation distributions for PSL(2,q)."""

from .cyclotomic import (
    CycSum,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    mobius,
    root_power_sum,
    subfield_trace,
    trace_root,
)
from .help_core import (
    ConstraintRow,
    ConstraintSystem,
    PADistribution,
    SolutionSet,
    VariableLayout,
    accumulated,
    build_constraints,
    char_at_distribution,
    check_wagner,
    distribution_from_vector,
    exceptional,
    exceptional_set,
    mu1_accumulated_form,
    mu_minus,
    multiplicity,
    power_distribution,
    relabel,
    tpa_distribution,
    tpa_set,
    variable_layout,
    verify_v4,
)
from .psl2 import (
    CharRestriction,
    ClassLabel,
    CyclicFrame,
    GroupContext,
    brauer_irreducibles,
    char_value,
    decompose_chi,
    make_context,
    make_frame,
    v_pair_count,
    v_set_count,
)
from .solver import (
    BoundsBox,
    EnumerationReport,
    RankDeficientError,
    SearchIncomplete,
    character_family,
    compare_sets,
    derive_bounds,
    enumerate_solutions,
    rank_check,
    solve_vpa,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsBox",
    "CharRestriction",
    "ClassLabel",
    "ConstraintRow",
    "ConstraintSystem",
    "CycSum",
    "CyclicFrame",
    "EnumerationReport",
    "GroupContext",
    "PADistribution",
    "RankDeficientError",
    "SearchIncomplete",
    "SolutionSet",
    "VariableLayout",
    "accumulated",
    "brauer_irreducibles",
    "build_constraints",
    "char_at_distribution",
    "char_value",
    "character_family",
    "check_wagner",
    "compare_sets",
    "cyclotomic_polynomial",
    "decompose_chi",
    "derive_bounds",
    "distribution_from_vector",
    "divisors",
    "enumerate_solutions",
    "euler_phi",
    "exceptional",
    "exceptional_set",
    "make_context",
    "make_frame",
    "mobius",
    "mu1_accumulated_form",
    "mu_minus",
    "multiplicity",
    "power_distribution",
    "rank_check",
    "relabel",
    "root_power_sum",
    "solve_vpa",
    "subfield_trace",
    "tpa_distribution",
    "tpa_set",
    "trace_root",
    "v_pair_count",
    "v_set_count",
    "variable_layout",
    "verify_v4",
]
