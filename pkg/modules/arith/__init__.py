"""
Exact integer arithmetic: factorization, residues, valuations
"""

from .factorization import (
    FACTOR_CAP,
    Factorization,
    factorize,
    parse_factorization,
    squarefree_kernel,
    valuation,
)
from .residues import FREE_RESIDUES_25, ResidueTag, is_free_residue, residue_class_mod

__all__ = [
    'FACTOR_CAP',
    'Factorization',
    'factorize',
    'parse_factorization',
    'squarefree_kernel',
    'valuation',
    'FREE_RESIDUES_25',
    'ResidueTag',
    'is_free_residue',
    'residue_class_mod'
]
