"""
The thirteen quintic differential principal factorization types and the three cubic ones
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from modules.exceptions import InconsistentInputError


@dataclass(frozen=True)
class DpfType:
    """A DPF type with unit norm index exponent U and dimensions (A, I, R)

    eta_norm / zeta_norm tell whether η = (1+√5)/2 or ζ₅ is a norm of a unit of N.
    """
    name: str
    symbol: str
    U: int
    A: int
    I: int
    R: int
    eta_norm: bool = False
    zeta_norm: bool = False

    def label(self, unicode: bool = False) -> str:
        return self.symbol if unicode else self.name

    def herbrand_balance(self) -> bool:
        """U + 1 = A + I + R"""
        return self.U + 1 == self.A + self.I + self.R

    def __str__(self) -> str:
        return self.name

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "name": self.name,
            "symbol": self.symbol,
            "U": self.U,
            "A": self.A,
            "I": self.I,
            "R": self.R,
            "eta_norm": self.eta_norm,
            "zeta_norm": self.zeta_norm
        }


TYPE_TABLE: Tuple[DpfType, ...] = (
    DpfType("a1", "α₁", U=2, A=1, I=0, R=2),
    DpfType("a2", "α₂", U=2, A=1, I=1, R=1),
    DpfType("a3", "α₃", U=2, A=1, I=2, R=0),
    DpfType("b1", "β₁", U=2, A=2, I=0, R=1),
    DpfType("b2", "β₂", U=2, A=2, I=1, R=0),
    DpfType("g", "γ", U=2, A=3, I=0, R=0),
    DpfType("d1", "δ₁", U=1, A=1, I=0, R=1, eta_norm=True),
    DpfType("d2", "δ₂", U=1, A=1, I=1, R=0, eta_norm=True),
    DpfType("e", "ε", U=1, A=2, I=0, R=0, eta_norm=True),
    DpfType("z1", "ζ₁", U=1, A=1, I=0, R=1, zeta_norm=True),
    DpfType("z2", "ζ₂", U=1, A=1, I=1, R=0, zeta_norm=True),
    DpfType("eta", "η", U=1, A=2, I=0, R=0, zeta_norm=True),
    DpfType("th", "ϑ", U=0, A=1, I=0, R=0, eta_norm=True, zeta_norm=True),
)

_BY_NAME = {}
for _entry in TYPE_TABLE:
    _BY_NAME[_entry.name] = _entry
    _BY_NAME[_entry.symbol] = _entry


def type_table() -> Tuple[DpfType, ...]:
    return TYPE_TABLE


def type_by_name(name: str) -> DpfType:
    """Look up a type by ASCII name (a1 ... th) or its Greek symbol"""
    try:
        return _BY_NAME[name.strip()]
    except KeyError:
        raise InconsistentInputError(f"unknown DPF type '{name}'") from None


def type_order(dpf_type: DpfType) -> int:
    return TYPE_TABLE.index(dpf_type)


@dataclass(frozen=True)
class CubicDpfType:
    """DPF type of Q(ζ₃, ∛D) with unit norm index exponent U

    B and T are the F₃-dimensions of the bottom DPF, coming from L = Q(∛D),
    and of the top DPF in the kernel of the norm to L.
    """
    name: str
    symbol: str
    U: int
    B: int
    T: int

    def label(self, unicode: bool = False) -> str:
        return self.symbol if unicode else self.name

    def herbrand_balance(self) -> bool:
        """U + 1 = B + T"""
        return self.U + 1 == self.B + self.T

    def __str__(self) -> str:
        return self.name

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"name": self.name, "symbol": self.symbol, "U": self.U, "B": self.B, "T": self.T}


CUBIC_TYPE_TABLE: Tuple[CubicDpfType, ...] = (
    CubicDpfType("a", "α", U=1, B=1, T=1),
    CubicDpfType("b", "β", U=1, B=2, T=0),
    CubicDpfType("g", "γ", U=0, B=1, T=0),
)

_CUBIC_BY_NAME = {}
for _entry in CUBIC_TYPE_TABLE:
    _CUBIC_BY_NAME[_entry.name] = _entry
    _CUBIC_BY_NAME[_entry.symbol] = _entry


def cubic_type_table() -> Tuple[CubicDpfType, ...]:
    return CUBIC_TYPE_TABLE


def cubic_type_by_name(name: str) -> CubicDpfType:
    try:
        return _CUBIC_BY_NAME[name.strip()]
    except KeyError:
        raise InconsistentInputError(f"unknown cubic DPF type '{name}'") from None
