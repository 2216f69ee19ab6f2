"""
Class number relations and density of ζ-norm types
"""

from .class_numbers import (
    SUPPORTED_PRIMES,
    ValuationTriple,
    kobayashi_Qplus,
    parry_predict_VN,
    scholz_check,
    scholz_cubic_types,
    triple_violations,
    unit_index_bound,
    walter_predict_VN,
)
from .density import free_unit_residues, unit_residues, zeta_norm_density

__all__ = [
    'SUPPORTED_PRIMES',
    'ValuationTriple',
    'kobayashi_Qplus',
    'parry_predict_VN',
    'scholz_check',
    'scholz_cubic_types',
    'triple_violations',
    'unit_index_bound',
    'walter_predict_VN',
    'free_unit_residues',
    'unit_residues',
    'zeta_norm_density'
]
