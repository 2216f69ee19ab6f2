"""
Asymptotic density of conductors admitting ζ-norm DPF types
"""

from fractions import Fraction
from math import gcd
from typing import List

from modules.exceptions import InconsistentInputError


def unit_residues(modulus: int = 25) -> List[int]:
    return [x for x in range(1, modulus) if gcd(x, modulus) == 1]


def free_unit_residues(modulus: int = 25) -> List[int]:
    """Units of order dividing 4, i.e. the residues ±1, ±7 for modulus 25"""
    return [x for x in unit_residues(modulus) if pow(x, 4, modulus) == 1]


def zeta_norm_density(t: int) -> Fraction:
    """Probability that t conductor primes are all free: (4/20)^t"""
    if t < 1:
        raise InconsistentInputError(f"t must be at least 1, got {t}")
    return Fraction(len(free_unit_residues()), len(unit_residues())) ** t
