"""
Multiplicity of conductors: closed formula and brute-force oracle
"""

from .formula import multiplicity_formula, x_count
from .oracle import (
    DEFAULT_CANDIDATE_LIMIT,
    conductor_classes,
    conductor_members,
    multiplicity_bruteforce,
)

__all__ = [
    'multiplicity_formula',
    'x_count',
    'DEFAULT_CANDIDATE_LIMIT',
    'conductor_classes',
    'conductor_members',
    'multiplicity_bruteforce'
]
