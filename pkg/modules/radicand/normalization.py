"""
Radicand normalization for pure fields of odd prime degree p

A radicand D is pth-power-free, D = D_1 D_2^2 ... D_{p-1}^{p-1} with squarefree,
pairwise coprime homogeneous components D_k. The co-radicand D^(k) is D^k with
every prime exponent reduced modulo p; all co-radicands generate the same field,
and the normalized radicand is the smallest of them.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from sympy import isprime

from modules.arith import Factorization, factorize
from modules.exceptions import RadicandError

logger = logging.getLogger(__name__)


def _check_degree(p: int):
    if p == 2 or not isprime(p):
        raise RadicandError(f"degree must be an odd prime, got {p}")


@dataclass(frozen=True)
class Radicand:
    """A pth-power-free integer D ≥ 2 together with its factorization"""
    value: int
    factorization: Factorization
    p: int = 5

    def __post_init__(self):
        if self.value < 2:
            raise RadicandError(f"radicand must be at least 2, got {self.value}")
        for prime, exponent in self.factorization.factors:
            if not 1 <= exponent <= self.p - 1:
                raise RadicandError(f"{self.value} is not {self.p}th-power-free at {prime}")
        if self.factorization.value != self.value:
            raise RadicandError(f"factorization {self.factorization} does not match {self.value}")

    @classmethod
    def from_factorization(cls, factorization: Factorization, p: int = 5) -> "Radicand":
        """Reduce every exponent modulo p; rejects a reduction to 1"""
        _check_degree(p)
        reduced = Factorization.from_mapping({q: e % p for q, e in factorization.factors})
        if not reduced.factors:
            raise RadicandError(f"{factorization} is a perfect {p}th power")
        return cls(value=reduced.value, factorization=reduced, p=p)

    @classmethod
    def from_int(cls, n: int, p: int = 5) -> "Radicand":
        return cls.from_factorization(factorize(n), p)

    @property
    def primes(self) -> Tuple[int, ...]:
        return self.factorization.primes

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "value": self.value,
            "factorization": self.factorization.format(),
            "p": self.p
        }


@dataclass(frozen=True)
class HomogeneousDecomposition:
    """Squarefree components D_1, ..., D_{p-1}; D_k collects primes of exponent k"""
    components: Tuple[int, ...]

    def degree(self, k: int) -> int:
        return self.components[k - 1]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {f"D{k}": value for k, value in enumerate(self.components, start=1)}


def homogeneous_components(D: Radicand) -> HomogeneousDecomposition:
    components = [1] * (D.p - 1)
    for prime, exponent in D.factorization.factors:
        components[exponent - 1] *= prime
    return HomogeneousDecomposition(tuple(components))


def coradicand_factorizations(D: Radicand) -> List[Factorization]:
    """Factorizations of D^(1), ..., D^(p-1)"""
    return [
        Factorization.from_mapping({q: (e * k) % D.p for q, e in D.factorization.factors})
        for k in range(1, D.p)
    ]


def coradicands(D: Radicand) -> List[int]:
    return [factorization.value for factorization in coradicand_factorizations(D)]


def normalize(D: Radicand) -> Tuple[Radicand, int]:
    """Smallest co-radicand and the index k0 that produces it"""
    candidates = coradicand_factorizations(D)
    values = [factorization.value for factorization in candidates]
    if len(set(values)) != len(values):
        raise RadicandError(f"co-radicands of {D.value} are not pairwise distinct: {values}")

    index = min(range(len(values)), key=values.__getitem__)
    normalized = Radicand(value=values[index], factorization=candidates[index], p=D.p)
    return normalized, index + 1


def is_normalized(D: Radicand) -> bool:
    return normalize(D)[1] == 1


def _normalized_in_range(bounds: Tuple[int, int, int]) -> List[int]:
    start, stop, p = bounds
    found = []
    for n in range(start, stop):
        factorization = factorize(n)
        if any(exponent >= p for _, exponent in factorization.factors):
            continue
        if is_normalized(Radicand(value=n, factorization=factorization, p=p)):
            found.append(n)
    return found


@lru_cache(maxsize=32)
def _normalized_values(limit: int, p: int, workers: int) -> Tuple[int, ...]:
    if workers <= 1 or limit < 10_000:
        return tuple(_normalized_in_range((2, limit, p)))

    step = -(-(limit - 2) // workers)
    chunks = [(start, min(start + step, limit), p) for start in range(2, limit, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_normalized_in_range, chunks))
    # map preserves chunk order, so the merge stays ascending
    return tuple(value for part in parts for value in part)


def enumerate_normalized(limit: int, p: int = 5, workers: int = 1) -> List[Radicand]:
    """All normalized pth-power-free radicands 2 ≤ D < limit, ascending"""
    _check_degree(p)
    if limit < 2:
        raise RadicandError(f"enumeration limit must be at least 2, got {limit}")

    values = _normalized_values(limit, p, workers)
    logger.info(f"Enumerated {len(values)} normalized radicands below {limit} (p={p})")
    return [Radicand(value=n, factorization=factorize(n), p=p) for n in values]
