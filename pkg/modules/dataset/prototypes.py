"""
Prototype detection: minimal radicand per (refined species, type, class data) key
"""

from typing import Any, Dict, Iterable, List, Tuple

from modules.invariants import compute_invariants


def prototype_key(record: Any) -> Tuple:
    refined = compute_invariants(record.D).refined()
    return (refined.as_tuple(), record.dpf_type,
            record.V_L, record.V_M, record.V_N, record.E)


def prototype_candidates(records: Iterable[Any]) -> List[int]:
    """Radicands that are the smallest among the given records sharing their key"""
    smallest: Dict[Tuple, int] = {}
    for record in records:
        key = prototype_key(record)
        if key not in smallest or record.D < smallest[key]:
            smallest[key] = record.D
    return sorted(smallest.values())
