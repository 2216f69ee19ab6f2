"""
Group ring F_p[G] of the cyclic group G = ⟨τ⟩ of order p − 1
"""

from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple, Union

import galois
import numpy as np

from modules.exceptions import InconsistentInputError

# p → image of a generator of the (p−1)th roots of unity in U(Z/pZ): √−1 ↦ 3, −1 ↦ 2
ROOT_IMAGE = {5: 3, 3: 2}

Coefficients = Union[Sequence[int], galois.FieldArray]


@lru_cache(maxsize=None)
def prime_field(p: int) -> type:
    """GF(p) array class shared by the group ring and the exponent vectors"""
    return galois.GF(p)


def to_field(values: Coefficients, p: int) -> galois.FieldArray:
    """Integers (any sign) or field elements as a GF(p) array"""
    GF = prime_field(p)
    if isinstance(values, galois.FieldArray):
        if type(values) is not GF:
            raise InconsistentInputError(f"expected elements of GF({p}), got GF({type(values).characteristic})")
        return values
    return GF(np.mod(np.asarray(values, dtype=np.int64), p))


def _check_prime(p: int):
    if p not in ROOT_IMAGE:
        raise InconsistentInputError(f"group ring supported for p in {sorted(ROOT_IMAGE)}, got {p}")


class GroupRingElement:
    """Σ c_k τ^k with coefficients (c_0, ..., c_{order−1}) in GF(p)"""

    __slots__ = ("p", "order", "vector")

    def __init__(self, p: int, order: int, coeffs: Coefficients):
        vector = to_field(coeffs, p)
        if vector.shape != (order,):
            raise InconsistentInputError(
                f"expected {order} coefficients, got {len(vector)}"
            )
        self.p = p
        self.order = order
        self.vector = vector

    @classmethod
    def of(cls, p: int, coeffs: Coefficients) -> "GroupRingElement":
        _check_prime(p)
        return cls(p=p, order=p - 1, coeffs=coeffs)

    @classmethod
    def identity(cls, p: int) -> "GroupRingElement":
        _check_prime(p)
        GF = prime_field(p)
        return cls(p, p - 1, GF.Identity(p - 1)[0])

    @classmethod
    def zero(cls, p: int) -> "GroupRingElement":
        _check_prime(p)
        return cls(p, p - 1, prime_field(p).Zeros(p - 1))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.vector)

    def _check_compatible(self, other: "GroupRingElement"):
        if (self.p, self.order) != (other.p, other.order):
            raise InconsistentInputError(
                f"incompatible group ring elements: F_{self.p}[C_{self.order}] "
                f"and F_{other.p}[C_{other.order}]"
            )

    def regular_lift(self) -> galois.FieldArray:
        """Matrix of multiplication by this element; column j holds τ^j times it"""
        rows = np.asarray(self.coeffs, dtype=np.int64)
        circulant = np.stack([np.roll(rows, j) for j in range(self.order)], axis=1)
        return prime_field(self.p)(circulant)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        return GroupRingElement(self.p, self.order, self.vector + other.vector)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupRingElement)
                and (self.p, self.order) == (other.p, other.order)
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.p, self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"GroupRingElement(p={self.p}, coeffs={self.coeffs})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"p": self.p, "order": self.order, "coeffs": list(self.coeffs)}


def ring_multiply(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution with τ-exponents mod the group order"""
    x._check_compatible(y)
    return GroupRingElement(x.p, x.order, x.regular_lift() @ y.vector)


def idempotents(p: int) -> List[GroupRingElement]:
    """Central orthogonal idempotents ψ_j = (1/(p−1)) Σ_k χ_j(τ^{−k}) τ^k"""
    _check_prime(p)
    GF = prime_field(p)
    order = p - 1
    scale = GF(order % p) ** -1
    root_inverse = GF(ROOT_IMAGE[p]) ** -1
    characters = GF([[int(root_inverse ** (j * k)) for k in range(order)] for j in range(order)])
    return [GroupRingElement.of(p, scale * row) for row in characters]
