"""
Brute-force multiplicity by enumerating exponent vectors over the conductor primes
"""

import logging
from itertools import product
from typing import Dict, List

from modules.arith import Factorization
from modules.exceptions import InconsistentInputError, OracleLimitError
from modules.invariants.conductor import conductor4
from modules.radicand import Radicand, enumerate_normalized, is_normalized

logger = logging.getLogger(__name__)

# Largest number of exponent vectors the oracle will visit for one conductor
DEFAULT_CANDIDATE_LIMIT = 4**8


def _radicand_primes(f4: Factorization) -> List[int]:
    e5 = f4.exponent(5)
    if e5 not in (0, 2, 6):
        raise InconsistentInputError(f"5-exponent of f⁴ must be 0, 2 or 6: {f4}")
    for q, e in f4.factors:
        if q != 5 and e != 4:
            raise InconsistentInputError(f"exponent of {q} in f⁴ must be 4: {f4}")

    primes = [q for q in f4.primes if q != 5]
    if e5 == 6:
        primes = sorted(primes + [5])
    if not primes:
        raise InconsistentInputError(f"no radicand has conductor {f4}")
    return primes


def conductor_members(f4: Factorization, limit: int = DEFAULT_CANDIDATE_LIMIT) -> List[int]:
    """Normalized radicands whose conductor is f⁴, ascending"""
    primes = _radicand_primes(f4)
    candidates = 4 ** len(primes)
    if candidates > limit:
        raise OracleLimitError(
            f"conductor {f4} needs {candidates} exponent vectors, limit is {limit}"
        )

    members = []
    for exponents in product(range(1, 5), repeat=len(primes)):
        factorization = Factorization(tuple(zip(primes, exponents)))
        D = Radicand(value=factorization.value, factorization=factorization)
        if conductor4(D) == f4 and is_normalized(D):
            members.append(D.value)
    return sorted(members)


def multiplicity_bruteforce(f4: Factorization, limit: int = DEFAULT_CANDIDATE_LIMIT) -> int:
    """Count of normalized radicands sharing the conductor f⁴ (0 if it never arises)"""
    return len(conductor_members(f4, limit))


def conductor_classes(limit: int, workers: int = 1) -> Dict[Factorization, List[int]]:
    """Normalized radicands below limit grouped by conductor, in order of first member"""
    classes: Dict[Factorization, List[int]] = {}
    for D in enumerate_normalized(limit, 5, workers):
        classes.setdefault(conductor4(D), []).append(D.value)
    logger.info(f"{len(classes)} distinct conductors among normalized radicands below {limit}")
    return classes
