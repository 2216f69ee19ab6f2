"""
Exhaustive property suite for the group ring and the τ-action
"""

import logging
from typing import List, Tuple

from modules.dpf import type_table

from .exponent_vectors import (
    ExponentVector,
    NormLevel,
    is_scalar_multiple,
    kernel_line_census,
    norm_project,
    tau_act,
    vectors,
)
from .group_ring import GroupRingElement, idempotents, ring_multiply

logger = logging.getLogger(__name__)

KERNEL_LINES = (ExponentVector.of(1, 2, 4, 3), ExponentVector.of(1, 3, 4, 2))


def _orthogonality(p: int) -> bool:
    psi = idempotents(p)
    zero = GroupRingElement.zero(p)
    for i, x in enumerate(psi):
        for j, y in enumerate(psi):
            if ring_multiply(x, y) != (x if i == j else zero):
                return False
    return True


def _sum_relation(p: int) -> bool:
    total = GroupRingElement.zero(p)
    for psi in idempotents(p):
        total = total + psi
    return total == GroupRingElement.identity(p)


def _tau_order(length: int) -> bool:
    for v in vectors(length):
        w = v
        for _ in range(length):
            w = tau_act(w)
        if w != v:
            return False
    return True


def _orbit_identities() -> bool:
    invariant = ExponentVector.of(1, 1, 1, 1)
    third_power = ExponentVector.of(1, 2, 4, 3)
    inverse = ExponentVector.of(1, 4, 1, 4)
    independent = (ExponentVector.of(1, 0, 4, 0), ExponentVector.of(1, 1, 4, 4))
    return (tau_act(invariant) == invariant
            and is_scalar_multiple(third_power, tau_act(third_power)) == 3
            and is_scalar_multiple(inverse, tau_act(inverse)) == 4
            and all(is_scalar_multiple(v, tau_act(v)) is None for v in independent))


def _naturality() -> bool:
    for v in vectors(4):
        projected = norm_project(v, NormLevel.N_TO_M)
        if norm_project(tau_act(v), NormLevel.N_TO_M) != tau_act(projected):
            return False
    return True


def selftest() -> List[Tuple[str, bool]]:
    """Run every algebra check; returns (name, passed) pairs"""
    results = [
        ("orthogonality F5[C4]", _orthogonality(5)),
        ("orthogonality F3[C2]", _orthogonality(3)),
        ("sum relation F5[C4]", _sum_relation(5)),
        ("sum relation F3[C2]", _sum_relation(3)),
        ("tau^4 = 1 on 4-vectors", _tau_order(4)),
        ("tau^2 = 1 on 2-vectors", _tau_order(2)),
        ("tau orbit identities", _orbit_identities()),
        ("kernel line census", tuple(kernel_line_census()) == KERNEL_LINES),
        ("norm naturality", _naturality()),
        ("herbrand balance", all(t.herbrand_balance() for t in type_table())),
    ]
    for name, passed in results:
        logger.debug(f"algebra selftest {name}: {'ok' if passed else 'FAILED'}")
    return results
