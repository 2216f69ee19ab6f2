"""
Class number valuation identities between L, M and N
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from modules.dpf import cubic_type_table
from modules.exceptions import InconsistentInputError

SUPPORTED_PRIMES = (3, 5)


@dataclass(frozen=True)
class ValuationTriple:
    """p-valuations of h_L, h_M, h_N and the logarithmic subfield unit index E"""
    V_L: int
    V_M: int
    V_N: int
    E: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"V_L": self.V_L, "V_M": self.V_M, "V_N": self.V_N, "E": self.E}


def unit_index_bound(p: int) -> int:
    """Largest possible E: (p−1)(p−2)/2"""
    if p not in SUPPORTED_PRIMES:
        raise InconsistentInputError(f"unit index bound available for p in {SUPPORTED_PRIMES}, got {p}")
    return (p - 1) * (p - 2) // 2


def walter_predict_VN(p: int, V_L: int, E: int) -> int:
    """V_N = (p−1)·V_L + E − (p²−5)/4"""
    bound = unit_index_bound(p)
    if not 0 <= E <= bound:
        raise InconsistentInputError(f"E must lie in [0, {bound}] for p={p}, got {E}")
    if V_L < 0:
        raise InconsistentInputError(f"V_L must be non-negative, got {V_L}")
    V_N = (p - 1) * V_L + E - (p * p - 5) // 4
    if V_N < 0:
        raise InconsistentInputError(f"inconsistent input for p={p}: V_L={V_L}, E={E} gives V_N={V_N}")
    return V_N


def parry_predict_VN(V_L: int, E: int) -> int:
    """V_N = 4·V_L + E − 5 for pure quintic fields"""
    return walter_predict_VN(5, V_L, E)


def kobayashi_Qplus(V_L: int, V_M: int) -> int:
    """Q⁺ = V_M − 2·V_L + 2, which must lie in {0, 1, 2} with 5 | h_L ⟺ 5 | h_M"""
    if (V_L == 0) != (V_M == 0):
        raise InconsistentInputError(f"5 | h_L and 5 | h_M must agree: V_L={V_L}, V_M={V_M}")
    q_plus = V_M - 2 * V_L + 2
    if not 0 <= q_plus <= 2:
        raise InconsistentInputError(f"Q+ = {q_plus} out of range for V_L={V_L}, V_M={V_M}")
    return q_plus


def scholz_check(V_L: int, V_N: int, Q: int) -> bool:
    """Pure cubic case: V_N = 2·V_L + Q − 1 and 3 | h_L ⟺ 3 | h_N"""
    if Q not in (0, 1):
        return False
    return V_N == 2 * V_L + Q - 1 and (V_L == 0) == (V_N == 0)


def scholz_cubic_types(V_L: int) -> Tuple[str, ...]:
    """Cubic DPF types compatible with v_3(h_L) = V_L

    3 ∤ h_L forces the unit index (U_N:U_0) = 3 and with it type β or γ.
    """
    if V_L < 0:
        raise InconsistentInputError(f"V_L must be non-negative, got {V_L}")
    names = tuple(t.name for t in cubic_type_table())
    if V_L == 0:
        return tuple(name for name in names if name in ("b", "g"))
    return names


def triple_violations(triple: ValuationTriple) -> List[str]:
    """Names of the identities the triple violates"""
    violations = []
    try:
        if parry_predict_VN(triple.V_L, triple.E) != triple.V_N:
            violations.append("parry")
    except InconsistentInputError:
        violations.append("parry")
    try:
        kobayashi_Qplus(triple.V_L, triple.V_M)
    except InconsistentInputError:
        violations.append("kobayashi")
    return violations
