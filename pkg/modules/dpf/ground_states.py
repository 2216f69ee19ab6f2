"""
Ground states for conductors built from restrictive primes q ≡ ±2 (mod 5)

With T = 2 the type is forced to ε and the 5-class numbers of L, M and N are
trivial. With T = 3 the type is γ or ε; the class numbers and unit index are
then only conjectured.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from modules.arith import residue_class_mod
from modules.invariants import FieldInvariants

logger = logging.getLogger(__name__)

# (type, V_L, V_M, V_N, E)
State = Tuple[str, int, int, int, int]


@dataclass(frozen=True)
class GroundStateFamily:
    name: str
    T: int
    multiplicity: Dict[str, int]
    states: Tuple[State, ...]
    proven: bool

    def admits(self, state: State) -> bool:
        return state in self.states

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "name": self.name,
            "T": self.T,
            "multiplicity": dict(self.multiplicity),
            "states": [list(state) for state in self.states],
            "proven": self.proven
        }


EPSILON_GROUND_STATE = GroundStateFamily(
    name="epsilon",
    T=2,
    multiplicity={"1b": 1, "1a": 4, "2": 1},
    states=(("e", 0, 0, 0, 5),),
    proven=True
)

GAMMA_EPSILON_STATES = GroundStateFamily(
    name="gamma-epsilon",
    T=3,
    multiplicity={"1b": 3, "1a": 16, "2": 3},
    states=(("g", 0, 0, 1, 6), ("e", 1, 2, 4, 5)),
    proven=False
)

FAMILIES = (EPSILON_GROUND_STATE, GAMMA_EPSILON_STATES)


def restrictive_conductor(inv: FieldInvariants) -> bool:
    """Every conductor prime other than 5 is ≡ ±2 (mod 5) and not ≡ ±7 (mod 25)"""
    for q in inv.conductor_primes:
        if q == 5:
            continue
        tag = residue_class_mod(q)
        if not tag.plus_minus_two or tag.free:
            return False
    return True


def ground_state_family(inv: FieldInvariants) -> Optional[GroundStateFamily]:
    """The family whose hypotheses the field meets, if any"""
    if not restrictive_conductor(inv):
        return None
    for family in FAMILIES:
        if family.T == inv.T:
            logger.debug(f"D={inv.D.value} meets the {family.name} hypotheses")
            return family
    return None
