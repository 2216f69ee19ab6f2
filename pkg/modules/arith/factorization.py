"""
Exact integer factorization and factored-string handling
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Any, Dict, Mapping, Optional, Tuple

from sympy import isprime, primerange

from modules.exceptions import FactorizationError

logger = logging.getLogger(__name__)

# Inputs above this bound are refused rather than slowly trial-divided.
FACTOR_CAP = 10**9

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@lru_cache(maxsize=8)
def _trial_primes(cap: int) -> Tuple[int, ...]:
    """Primes up to the square root of the cap, computed once per cap"""
    primes = tuple(primerange(2, isqrt(cap) + 1))
    logger.debug(f"Trial division sieve built with {len(primes)} primes (cap {cap})")
    return primes


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs with strictly increasing primes"""
    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        previous = 0
        for prime, exponent in self.factors:
            if prime <= previous:
                raise FactorizationError(f"primes must be strictly increasing: {self.factors}")
            if exponent < 1:
                raise FactorizationError(f"exponent of {prime} must be positive, got {exponent}")
            previous = prime

    @classmethod
    def from_mapping(cls, exponents: Mapping[int, int]) -> "Factorization":
        """Build from a prime → exponent mapping, dropping zero exponents"""
        return cls(tuple(sorted((q, e) for q, e in exponents.items() if e)))

    @property
    def value(self) -> int:
        result = 1
        for prime, exponent in self.factors:
            result *= prime**exponent
        return result

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(prime for prime, _ in self.factors)

    def exponent(self, prime: int) -> int:
        """Exponent of the given prime, 0 when it does not divide"""
        for q, e in self.factors:
            if q == prime:
                return e
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def multiply(self, other: "Factorization") -> "Factorization":
        merged = self.as_dict()
        for prime, exponent in other.factors:
            merged[prime] = merged.get(prime, 0) + exponent
        return Factorization.from_mapping(merged)

    def power(self, k: int) -> "Factorization":
        if k < 0:
            raise FactorizationError(f"negative power {k}")
        return Factorization.from_mapping({q: e * k for q, e in self.factors})

    def without(self, prime: int) -> "Factorization":
        return Factorization(tuple((q, e) for q, e in self.factors if q != prime))

    def format(self, unicode: bool = False, lead: Optional[int] = 5) -> str:
        """Render as "5^2*2^4*11^4"; the lead prime (5 by default) is written first"""
        ordered = sorted(self.factors, key=lambda pair: (pair[0] != lead, pair[0]))
        if not ordered:
            return "1"
        parts = []
        for prime, exponent in ordered:
            if exponent == 1:
                parts.append(str(prime))
            elif unicode:
                parts.append(f"{prime}{str(exponent).translate(_SUPERSCRIPTS)}")
            else:
                parts.append(f"{prime}^{exponent}")
        return ("·" if unicode else "*").join(parts)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "value": self.value,
            "factors": [[q, e] for q, e in self.factors],
            "text": self.format()
        }

    def __str__(self) -> str:
        return self.format()


def factorize(n: int, cap: int = FACTOR_CAP) -> Factorization:
    """Factor n ≥ 2 by trial division over a precomputed prime list"""
    if not isinstance(n, int) or isinstance(n, bool):
        raise FactorizationError(f"expected an integer, got {n!r}")
    if n < 2:
        raise FactorizationError(f"cannot factor {n}: integer must be at least 2")
    if n > cap:
        raise FactorizationError(f"{n} exceeds the factorization cap {cap}")

    exponents: Dict[int, int] = {}
    remaining = n
    for prime in _trial_primes(cap):
        if prime * prime > remaining:
            break
        while remaining % prime == 0:
            exponents[prime] = exponents.get(prime, 0) + 1
            remaining //= prime
    if remaining > 1:
        exponents[remaining] = exponents.get(remaining, 0) + 1
    return Factorization.from_mapping(exponents)


def parse_factorization(text: str) -> Factorization:
    """Parse a factored string such as "5^2*2^4*11^4" or "1" """
    text = text.strip()
    if text == "1":
        return Factorization()
    if not text:
        raise FactorizationError("empty factored string")

    exponents: Dict[int, int] = {}
    for token in text.split("*"):
        match = _TOKEN.match(token.strip())
        if not match:
            raise FactorizationError(f"malformed factor '{token}' in '{text}'")
        prime = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) else 1
        if prime in exponents:
            raise FactorizationError(f"prime {prime} repeated in '{text}'")
        if not isprime(prime):
            raise FactorizationError(f"{prime} is not prime in '{text}'")
        if exponent < 1:
            raise FactorizationError(f"zero exponent for {prime} in '{text}'")
        exponents[prime] = exponent
    return Factorization.from_mapping(exponents)


def valuation(n: int, q: int) -> int:
    """Exponent of q in the positive integer n"""
    if n < 1:
        raise FactorizationError(f"valuation needs a positive integer, got {n}")
    if q < 2:
        raise FactorizationError(f"valuation base must be at least 2, got {q}")
    count = 0
    while n % q == 0:
        n //= q
        count += 1
    return count


def squarefree_kernel(factorization: Factorization) -> int:
    """Product of the distinct primes"""
    result = 1
    for prime in factorization.primes:
        result *= prime
    return result

