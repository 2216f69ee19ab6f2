"""
Residue classes of primes modulo 5 and 25
"""

from dataclasses import dataclass
from typing import Any, Dict

from sympy import isprime

from modules.exceptions import FactorizationError

# Fifth powers of units modulo 25; primes in these classes are "free"
FREE_RESIDUES_25 = frozenset({1, 7, 18, 24})


def is_free_residue(n: int) -> bool:
    """True when n ≡ ±1, ±7 (mod 25)"""
    return n % 25 in FREE_RESIDUES_25


@dataclass(frozen=True)
class ResidueTag:
    """Congruence data of a prime q used throughout the classification"""
    q: int
    modulus: int
    residue: int

    @property
    def is_five(self) -> bool:
        return self.q == 5

    @property
    def plus_one(self) -> bool:
        """q ≡ +1 (mod 5), a 4-split prime"""
        return self.q % 5 == 1

    @property
    def minus_one(self) -> bool:
        """q ≡ −1 (mod 5), a 2-split prime"""
        return self.q % 5 == 4

    @property
    def plus_minus_two(self) -> bool:
        return self.q % 5 in (2, 3)

    @property
    def free(self) -> bool:
        """q ≡ ±1, ±7 (mod 25)"""
        return is_free_residue(self.q)

    @property
    def restrictive(self) -> bool:
        return not self.is_five and not self.free

    @property
    def mod5_class(self) -> str:
        if self.is_five:
            return "0"
        if self.plus_one:
            return "+1"
        if self.minus_one:
            return "-1"
        return "±2"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "q": self.q,
            "modulus": self.modulus,
            "residue": self.residue,
            "mod5": self.mod5_class,
            "free": self.free
        }


def residue_class_mod(q: int, modulus: int = 25) -> ResidueTag:
    """Tag the prime q with its residue modulo 5 or 25"""
    if modulus not in (5, 25):
        raise FactorizationError(f"modulus must be 5 or 25, got {modulus}")
    if not isprime(q):
        raise FactorizationError(f"{q} is not prime")
    return ResidueTag(q=q, modulus=modulus, residue=q % modulus)
