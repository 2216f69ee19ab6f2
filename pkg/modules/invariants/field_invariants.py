"""
Discriminants, different valuations, prime counters and refined species
"""

import logging
from dataclasses import replace
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from sympy import isprime

from modules.arith import Factorization, residue_class_mod
from modules.exceptions import InconsistentInputError
from modules.multiplicity.formula import multiplicity_formula
from modules.radicand import Radicand, normalize

from .conductor import conductor4, species_of
from .models import FieldInvariants, PrimeRole, RefinedSpecies

logger = logging.getLogger(__name__)

# Discriminant of K = Q(ζ₅)
D_K = Factorization(((5, 3),))


class DifferentLevel(str, Enum):
    N_OVER_K = "N/K"
    L_OVER_Q = "L/Q"


def discriminants(D: Radicand) -> Tuple[Factorization, Factorization, Factorization]:
    """(d_L, d_M, d_N) with d_L = d_K f⁴, d_M = 5 d_K² f⁸, d_N = d_K⁵ f¹⁶"""
    f4 = conductor4(D)
    dL = D_K.multiply(f4)
    dM = Factorization(((5, 1),)).multiply(D_K.power(2)).multiply(f4.power(2))
    dN = D_K.power(5).multiply(f4.power(4))
    return dL, dM, dN


def _count(D: Radicand) -> Dict[str, int]:
    tags = [residue_class_mod(q) for q in D.primes if q != 5]
    t = len(tags)
    u = sum(1 for tag in tags if tag.free)
    s2 = sum(1 for tag in tags if tag.minus_one)
    s4 = sum(1 for tag in tags if tag.plus_one)
    return {"t": t, "u": u, "v": t - u, "n": t - s2 - s4, "s2": s2, "s4": s4}


def counters(D: Radicand) -> FieldInvariants:
    """Invariants of N without the multiplicity"""
    species = species_of(D)
    f4 = conductor4(D)
    dL, dM, dN = discriminants(D)
    kernel = 1
    for q in D.primes:
        kernel *= q
    return FieldInvariants(
        D=D, species=species, R=kernel, f4=f4, dL=dL, dM=dM, dN=dN,
        T=len(f4.primes), **_count(D)
    )


def compute_invariants(D: Union[int, Radicand]) -> FieldInvariants:
    """Full invariants of the normalized radicand equivalent to D"""
    radicand = Radicand.from_int(D) if isinstance(D, int) else D
    normalized, k0 = normalize(radicand)
    if k0 != 1:
        logger.info(f"Radicand {radicand.value} normalized to {normalized.value} (k0={k0})")
    inv = counters(normalized)
    m = multiplicity_formula(inv.species, inv.t, inv.u, inv.v)
    return replace(inv, m=m)


def refined_species(D: Union[int, Radicand]) -> RefinedSpecies:
    return compute_invariants(D).refined()


def different_valuation(q: int, D: Radicand, level: Union[DifferentLevel, str],
                        split_exponent: Optional[int] = None) -> int:
    """Valuation of a prime above q in the different of N/K or L/Q"""
    level = DifferentLevel(level)
    if not isprime(q):
        raise InconsistentInputError(f"{q} is not prime")
    species = species_of(D)
    divides_conductor = conductor4(D).exponent(q) > 0

    if q != 5:
        return 4 if divides_conductor else 0

    if level is DifferentLevel.N_OVER_K:
        return {6: 24, 2: 8, 0: 0}[species.e0]

    if species.e0 == 6:
        return 9
    if species.e0 == 2:
        return 5
    if split_exponent is None:
        raise InconsistentInputError(
            f"split exponent of 5 in L is required for D={D.value} of species 2"
        )
    if split_exponent not in (1, 4):
        raise InconsistentInputError(f"split exponent must be 1 or 4, got {split_exponent}")
    return 3 if split_exponent == 4 else 0


def different_exponents(D: Radicand) -> Dict[int, int]:
    """Relative different of N/K as conductor prime → valuation of each prime above it"""
    return {
        q: different_valuation(q, D, DifferentLevel.N_OVER_K)
        for q in conductor4(D).primes
    }


def prime_roles(D: Radicand) -> List[PrimeRole]:
    roles = []
    for q in conductor4(D).primes:
        tag = residue_class_mod(q)
        if tag.is_five:
            role = "wild"
        elif tag.free:
            role = "free"
        else:
            role = "restrictive"
        roles.append(PrimeRole(q=q, role=role, mod5=tag.mod5_class))
    return roles

