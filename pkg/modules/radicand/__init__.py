"""
Radicand normalization: homogeneous components, co-radicands, enumeration
"""

from .normalization import (
    HomogeneousDecomposition,
    Radicand,
    coradicand_factorizations,
    coradicands,
    enumerate_normalized,
    homogeneous_components,
    is_normalized,
    normalize,
)

__all__ = [
    'HomogeneousDecomposition',
    'Radicand',
    'coradicand_factorizations',
    'coradicands',
    'enumerate_normalized',
    'homogeneous_components',
    'is_normalized',
    'normalize'
]
