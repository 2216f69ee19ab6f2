"""
Dedekind species and the conductor of the Kummer extension N/K
"""

from modules.arith import Factorization, is_free_residue
from modules.radicand import Radicand

from .models import SPECIES_1A, SPECIES_1B, SPECIES_2, Species


def species_of(D: Radicand) -> Species:
    """Species 2 for D ≡ ±1, ±7 (mod 25), else 1a or 1b by whether 5 divides D"""
    if is_free_residue(D.value):
        return SPECIES_2
    if D.value % 5 == 0:
        return SPECIES_1A
    return SPECIES_1B


def conductor4(D: Radicand) -> Factorization:
    """f⁴ = 5²R⁴ for the first species and R⁴ for the second, R the squarefree kernel of D"""
    exponents = {q: 4 for q in D.primes}
    if species_of(D) != SPECIES_2:
        exponents[5] = exponents.get(5, 0) + 2
    return Factorization.from_mapping(exponents)
