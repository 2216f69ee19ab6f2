"""
Invariants of pure metacyclic fields: species, conductor, discriminants, counters
"""

from .models import (
    SPECIES_1A,
    SPECIES_1B,
    SPECIES_2,
    SPECIES_BY_TAG,
    FieldInvariants,
    PrimeRole,
    RefinedSpecies,
    Species,
)
from .conductor import conductor4, species_of
from .field_invariants import (
    DifferentLevel,
    compute_invariants,
    counters,
    different_exponents,
    different_valuation,
    discriminants,
    prime_roles,
    refined_species,
)

__all__ = [
    'SPECIES_1A',
    'SPECIES_1B',
    'SPECIES_2',
    'SPECIES_BY_TAG',
    'FieldInvariants',
    'PrimeRole',
    'RefinedSpecies',
    'Species',
    'conductor4',
    'species_of',
    'DifferentLevel',
    'compute_invariants',
    'counters',
    'different_exponents',
    'different_valuation',
    'discriminants',
    'prime_roles',
    'refined_species'
]
