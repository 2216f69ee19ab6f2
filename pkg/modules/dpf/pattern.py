"""
The (1,2,4,5) eligibility pattern of the field tables

Each component says whether the DPF facility attached to a divisor of 20 is
available (×) and, given the realized type, whether it is used completely (⊗)
or only partially ((×)). The refinement marks are calibrated on the tables.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from modules.arith import residue_class_mod
from modules.exceptions import InconsistentInputError
from modules.invariants import FieldInvariants

from .constraints import non_split_non_free
from .types import DpfType

NONE = "-"
CROSS = "x"
PARTIAL = "(x)"
FULL = "ox"

_UNICODE = {NONE: "−", CROSS: "×", PARTIAL: "(×)", FULL: "⊗"}
_ASCII = {glyph: symbol for symbol, glyph in _UNICODE.items()}


@dataclass(frozen=True)
class EligibilityPattern:
    symbols: Tuple[str, str, str, str]

    def format(self, unicode: bool = False) -> str:
        if unicode:
            return "(" + ",".join(_UNICODE[s] for s in self.symbols) + ")"
        return ",".join(self.symbols)

    def __str__(self) -> str:
        return self.format()


def _symbols(body: str) -> Optional[Tuple[str, ...]]:
    parts = [_ASCII.get(part.strip(), part.strip()) for part in body.split(",")]
    if len(parts) != 4 or any(part not in _UNICODE for part in parts):
        return None
    return tuple(parts)


def parse_pattern(text: str) -> EligibilityPattern:
    """Accepts "-,-,ox,-" as well as the glyph form "(−,−,⊗,−)" """
    body = text.strip()
    symbols = None
    if body.startswith("(") and body.endswith(")"):
        symbols = _symbols(body[1:-1])
    if symbols is None:
        symbols = _symbols(body)
    if symbols is None:
        raise InconsistentInputError(f"malformed eligibility pattern '{text}'")
    return EligibilityPattern(symbols)


def eligibility_pattern(inv: FieldInvariants,
                        recorded_type: Optional[DpfType] = None) -> EligibilityPattern:
    tags = [residue_class_mod(q) for q in inv.D.primes]

    first = CROSS if non_split_non_free(inv) else NONE
    second = CROSS if any(tag.minus_one for tag in tags) else NONE
    fourth = CROSS if any(tag.plus_one for tag in tags) else NONE
    fifth = CROSS if all(tag.is_five or tag.free for tag in tags) else NONE

    if recorded_type is not None:
        if second == CROSS and recorded_type.I >= 1:
            second = FULL
        if fourth == CROSS:
            if recorded_type.R >= 1:
                fourth = FULL
            elif recorded_type.I >= 1:
                fourth = PARTIAL
        if fifth == CROSS and recorded_type.zeta_norm:
            fifth = FULL

    return EligibilityPattern((first, second, fourth, fifth))
