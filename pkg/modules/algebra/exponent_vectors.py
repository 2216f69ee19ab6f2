"""
Semi-local exponent vectors of ambiguous ideals and the action of τ
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from modules.exceptions import InconsistentInputError

from .group_ring import prime_field, to_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExponentVector:
    """Exponents of (𝔏, 𝔏^τ, 𝔏^τ², 𝔏^τ³) mod p, or of (𝓛, 𝓛^τ) at the M-level"""
    entries: Tuple[int, ...]
    p: int = 5

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) % self.p for e in self.entries))

    @classmethod
    def of(cls, *entries: int) -> "ExponentVector":
        return cls(tuple(entries))

    @classmethod
    def from_field(cls, array: galois.FieldArray) -> "ExponentVector":
        return cls(tuple(int(e) for e in array), type(array).characteristic)

    @property
    def vector(self) -> galois.FieldArray:
        return to_field(self.entries, self.p)

    def scale(self, factor: Union[int, galois.FieldArray]) -> "ExponentVector":
        return ExponentVector.from_field(to_field([int(factor)], self.p)[0] * self.vector)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def canonical(self) -> "ExponentVector":
        """Generator of the same line with first non-zero entry 1"""
        for entry in self.vector:
            if entry:
                return ExponentVector.from_field(self.vector / entry)
        return self

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + "".join(str(e) for e in self.entries) + ")"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"p": self.p, "entries": list(self.entries)}


class NormLevel(str, Enum):
    N_TO_M = "N/M"
    N_TO_L = "N/L"
    M_TO_L = "M/L"


# Rows sum the conjugates over the subgroup fixing the smaller field
_NORM_ROWS = {
    NormLevel.N_TO_M: (4, [[1, 0, 1, 0], [0, 1, 0, 1]]),
    NormLevel.N_TO_L: (4, [[1, 1, 1, 1]]),
    NormLevel.M_TO_L: (2, [[1, 1]]),
}


def tau_matrix(length: int, p: int = 5) -> galois.FieldArray:
    """Cyclic shift sending the coefficient of τ^k to τ^(k+1)"""
    return prime_field(p)(np.roll(np.eye(length, dtype=np.int64), 1, axis=0))


def norm_matrix(level: Union[NormLevel, str], p: int = 5) -> galois.FieldArray:
    _, rows = _NORM_ROWS[NormLevel(level)]
    return prime_field(p)(rows)


def tau_act(v: ExponentVector) -> ExponentVector:
    """(a,b,c,d) → (d,a,b,c) and (a,b) → (b,a)"""
    return ExponentVector.from_field(tau_matrix(len(v), v.p) @ v.vector)


def is_scalar_multiple(v: ExponentVector, w: ExponentVector) -> Optional[int]:
    """λ with w = λ·v mod p, or None"""
    if len(v) != len(w):
        raise InconsistentInputError(f"vector lengths differ: {v} and {w}")
    if v.is_zero():
        return 1 if w.is_zero() else None
    pivot = next(i for i, e in enumerate(v.entries) if e)
    factor = w.vector[pivot] / v.vector[pivot]
    return int(factor) if v.scale(factor) == w else None


def norm_project(v: ExponentVector, level: Union[NormLevel, str]) -> ExponentVector:
    level = NormLevel(level)
    length, _ = _NORM_ROWS[level]
    if len(v) != length:
        raise InconsistentInputError(f"{level.value} norm needs a {length}-vector, got {v}")
    return ExponentVector.from_field(norm_matrix(level, v.p) @ v.vector)


def in_norm_kernel(v: ExponentVector, level: Union[NormLevel, str]) -> bool:
    return norm_project(v, level).is_zero()


def invariant_line_check(v: ExponentVector) -> bool:
    """True iff the line through a norm-kernel vector v is τ-stable"""
    if v.is_zero():
        raise InconsistentInputError("the zero vector spans no line")
    if not in_norm_kernel(v, NormLevel.N_TO_M):
        raise InconsistentInputError(f"{v} is not in the kernel of the N/M norm")
    return is_scalar_multiple(v, tau_act(v)) is not None


def _lines(basis: galois.FieldArray) -> List[ExponentVector]:
    """Every line of the span of the rows of basis, by canonical generator"""
    GF = type(basis)
    dimension = basis.shape[0]
    if dimension == 1:
        return [ExponentVector.from_field(basis[0]).canonical()]
    lines = set()
    for combination in product(range(GF.order), repeat=dimension):
        if any(combination):
            lines.add(ExponentVector.from_field(GF(list(combination)) @ basis).canonical())
    return sorted(lines, key=lambda line: line.entries)


def kernel_line_census(p: int = 5) -> List[ExponentVector]:
    """τ-stable lines in ker(N_{N/M}): the eigenlines of τ on the norm kernel

    For each eigenvalue λ the vectors with N v = 0 and (τ − λ) v = 0 form the
    null space of the stacked system.
    """
    norm = np.asarray(_NORM_ROWS[NormLevel.N_TO_M][1], dtype=np.int64)
    shift = np.roll(np.eye(4, dtype=np.int64), 1, axis=0)
    lines = set()
    for eigenvalue in range(1, p):
        system = prime_field(p)(np.mod(np.vstack((norm, shift - eigenvalue * np.eye(4, dtype=np.int64))), p))
        eigenspace = system.null_space()
        if eigenspace.shape[0] == 0:
            continue
        lines.update(_lines(eigenspace.row_space()))
    logger.debug(f"{len(lines)} tau-stable lines in the N/M norm kernel over GF({p})")
    return sorted(lines, key=lambda line: line.entries)


def vectors(length: int, p: int = 5) -> Sequence[ExponentVector]:
    return [ExponentVector(entries, p) for entries in product(range(p), repeat=length)]
