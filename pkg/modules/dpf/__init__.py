"""
Differential principal factorization types, admissibility rules and the Polya criterion
"""

from .types import (
    CUBIC_TYPE_TABLE,
    TYPE_TABLE,
    CubicDpfType,
    DpfType,
    cubic_type_by_name,
    cubic_type_table,
    type_by_name,
    type_order,
    type_table,
)
from .constraints import (
    RULES,
    DimensionBounds,
    TypeConstraintResult,
    admissible_types,
    check_rule_permutation,
    dimension_bounds,
    forced_absolute_dpf,
    non_split_non_free,
    polya_candidates,
    polya_decision,
)
from .pattern import EligibilityPattern, eligibility_pattern, parse_pattern
from .ground_states import (
    EPSILON_GROUND_STATE,
    GAMMA_EPSILON_STATES,
    GroundStateFamily,
    ground_state_family,
    restrictive_conductor,
)

__all__ = [
    'CUBIC_TYPE_TABLE',
    'TYPE_TABLE',
    'CubicDpfType',
    'DpfType',
    'cubic_type_by_name',
    'cubic_type_table',
    'type_by_name',
    'type_order',
    'type_table',
    'RULES',
    'DimensionBounds',
    'TypeConstraintResult',
    'admissible_types',
    'check_rule_permutation',
    'dimension_bounds',
    'forced_absolute_dpf',
    'non_split_non_free',
    'polya_candidates',
    'polya_decision',
    'EligibilityPattern',
    'eligibility_pattern',
    'parse_pattern',
    'EPSILON_GROUND_STATE',
    'GAMMA_EPSILON_STATES',
    'GroundStateFamily',
    'ground_state_family',
    'restrictive_conductor'
]
