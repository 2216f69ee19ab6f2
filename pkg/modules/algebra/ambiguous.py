"""
Dimensions of the primitive ambiguous principal ideal groups
"""

from dataclasses import dataclass
from typing import Dict

from modules.invariants import FieldInvariants


@dataclass(frozen=True)
class AmbiguousDimensions:
    """F₅-dimensions of I_L^G/I_Q, ker(N_{M/L}) and ker(N_{N/M})"""
    absolute: int
    intermediate_kernel: int
    relative_kernel: int

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary"""
        return {
            "absolute": self.absolute,
            "intermediate_kernel": self.intermediate_kernel,
            "relative_kernel": self.relative_kernel
        }


def ambiguous_dimensions(inv: FieldInvariants) -> AmbiguousDimensions:
    return AmbiguousDimensions(
        absolute=inv.T,
        intermediate_kernel=inv.s2 + inv.s4,
        relative_kernel=2 * inv.s4
    )


def primitive_ambiguous_orders(inv: FieldInvariants) -> Dict[str, int]:
    """Cumulative dimensions at the levels L, M and N"""
    dims = ambiguous_dimensions(inv)
    intermediate = dims.absolute + dims.intermediate_kernel
    return {
        "L": dims.absolute,
        "M": intermediate,
        "N": intermediate + dims.relative_kernel
    }
