"""
Closed formula for the multiplicity m(f) of a conductor
"""

from typing import Any

from modules.exceptions import InconsistentInputError


def x_count(k: int) -> int:
    """X_k = (4^k − (−1)^k) / 5: sequences of k nonzero residues mod 5 with nonzero sum, divided by 4"""
    if k < 0:
        raise InconsistentInputError(f"X_k needs k ≥ 0, got {k}")
    return (4**k - (-1) ** k) // 5


def multiplicity_formula(species: Any, t: int, u: int, v: int) -> int:
    """Number of non-isomorphic fields sharing the conductor of a field with these counters

    species may be a Species or its tag ("1a", "1b", "2"). For the second species with
    only free primes (v = 0) every exponent vector has a free product, which gives
    4^(u−1) orbits; a single restrictive prime (v = 1) can never give a free product,
    so that combination does not occur.
    """
    tag = getattr(species, "tag", species)
    if min(t, u, v) < 0:
        raise InconsistentInputError(f"counters must be non-negative: t={t}, u={u}, v={v}")
    if u + v != t:
        raise InconsistentInputError(f"u + v must equal t: {u} + {v} != {t}")

    if tag == "1a":
        return 4**t
    if tag == "1b":
        if v == 0:
            raise InconsistentInputError("first species without 5 needs a restrictive prime")
        return 4**u * x_count(v)
    if tag == "2":
        if v == 0:
            if u == 0:
                raise InconsistentInputError("second species needs at least one prime")
            return 4 ** (u - 1)
        if v == 1:
            raise InconsistentInputError("second species cannot have exactly one restrictive prime")
        return 4**u * x_count(v - 1)
    raise InconsistentInputError(f"unknown species {species!r}")
