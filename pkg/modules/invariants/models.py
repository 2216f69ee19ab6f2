"""
Data models for field invariants of pure metacyclic fields
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from modules.arith import Factorization
from modules.radicand import Radicand


@dataclass(frozen=True)
class Species:
    """Dedekind species with the exponent e0 of 5 in f⁴"""
    tag: str
    e0: int

    def __str__(self) -> str:
        return self.tag

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"tag": self.tag, "e0": self.e0}


SPECIES_1A = Species("1a", 6)
SPECIES_1B = Species("1b", 2)
SPECIES_2 = Species("2", 0)

SPECIES_BY_TAG = {species.tag: species for species in (SPECIES_1A, SPECIES_1B, SPECIES_2)}


@dataclass(frozen=True)
class RefinedSpecies:
    """The multiplet (e0; t, u, v, m; n, s2, s4)"""
    e0: int
    t: int
    u: int
    v: int
    m: int
    n: int
    s2: int
    s4: int

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.e0, self.t, self.u, self.v, self.m, self.n, self.s2, self.s4)

    def __str__(self) -> str:
        return (f"({self.e0}; {self.t},{self.u},{self.v},{self.m}; "
                f"{self.n},{self.s2},{self.s4})")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "e0": self.e0, "t": self.t, "u": self.u, "v": self.v, "m": self.m,
            "n": self.n, "s2": self.s2, "s4": self.s4
        }


@dataclass(frozen=True)
class PrimeRole:
    """Role of a conductor prime: wild (q = 5), free or restrictive"""
    q: int
    role: str
    mod5: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"q": self.q, "role": self.role, "mod5": self.mod5}


@dataclass(frozen=True)
class FieldInvariants:
    """Species, conductor, discriminants and prime counters of N = Q(ζ₅, ⁵√D)"""
    D: Radicand
    species: Species
    R: int
    f4: Factorization
    dL: Factorization
    dM: Factorization
    dN: Factorization
    T: int
    t: int
    u: int
    v: int
    n: int
    s2: int
    s4: int
    m: Optional[int] = None

    @property
    def conductor_primes(self) -> Tuple[int, ...]:
        return self.f4.primes

    @property
    def a_bound(self) -> int:
        return min(3, self.T)

    @property
    def i_bound(self) -> int:
        return min(2, self.s2 + self.s4)

    @property
    def r_bound(self) -> int:
        return min(2, 2 * self.s4)

    def refined(self) -> RefinedSpecies:
        if self.m is None:
            raise ValueError(f"multiplicity not computed for D={self.D.value}")
        return RefinedSpecies(
            e0=self.species.e0, t=self.t, u=self.u, v=self.v, m=self.m,
            n=self.n, s2=self.s2, s4=self.s4
        )

    def counters_dict(self) -> Dict[str, int]:
        return {
            "T": self.T, "t": self.t, "u": self.u, "v": self.v,
            "n": self.n, "s2": self.s2, "s4": self.s4
        }

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "D": self.D.value,
            "species": self.species.tag,
            "R": self.R,
            "f4": self.f4.format(),
            "dL": self.dL.format(),
            "dM": self.dM.format(),
            "dN": self.dN.format(),
            "counters": self.counters_dict(),
            "m": self.m
        }
