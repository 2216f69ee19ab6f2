"""
Congruence-driven constraint engine for admissible DPF types and the Polya decision
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from modules.arith import residue_class_mod
from modules.exceptions import InconsistentInputError
from modules.invariants import FieldInvariants

from .types import TYPE_TABLE, DpfType, type_by_name

logger = logging.getLogger(__name__)

Rule = Callable[[FieldInvariants], Optional[FrozenSet[str]]]


@dataclass(frozen=True)
class DimensionBounds:
    """Upper bounds for the absolute, intermediate and relative DPF dimensions"""
    A: int
    I: int
    R: int

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary"""
        return {"A": self.A, "I": self.I, "R": self.R}


@dataclass
class TypeConstraintResult:
    """Admissible types plus the rule that removed each excluded type"""
    admissible: Tuple[DpfType, ...]
    reasons: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def names(self) -> List[str]:
        return [dpf_type.name for dpf_type in self.admissible]

    def contains(self, dpf_type: DpfType) -> bool:
        return dpf_type in self.admissible

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "admissible": self.names,
            "reasons": [{"type": name, "rule": rule} for name, rule in self.reasons]
        }


def dimension_bounds(inv: FieldInvariants) -> DimensionBounds:
    return DimensionBounds(A=inv.a_bound, I=inv.i_bound, R=inv.r_bound)


def _names(predicate: Callable[[DpfType], bool]) -> FrozenSet[str]:
    return frozenset(t.name for t in TYPE_TABLE if predicate(t))


def _tags(inv: FieldInvariants):
    return [residue_class_mod(q) for q in inv.D.primes]


def non_split_non_free(inv: FieldInvariants) -> bool:
    """No prime of D is ≡ ±1 (mod 5) and some prime other than 5 is restrictive"""
    tags = _tags(inv)
    return (not any(tag.plus_one or tag.minus_one for tag in tags)
            and any(tag.restrictive for tag in tags))


def rule_r_bound(inv: FieldInvariants) -> FrozenSet[str]:
    return _names(lambda t: t.R <= inv.r_bound)


def rule_i_bound(inv: FieldInvariants) -> FrozenSet[str]:
    return _names(lambda t: t.I <= inv.i_bound)


def rule_a_bound(inv: FieldInvariants) -> FrozenSet[str]:
    return _names(lambda t: t.A <= inv.a_bound)


def rule_zeta_norm(inv: FieldInvariants) -> Optional[FrozenSet[str]]:
    """ζ can only be a norm when every conductor prime is 5 or free"""
    if all(q == 5 or residue_class_mod(q).free for q in inv.conductor_primes):
        return None
    return _names(lambda t: not t.zeta_norm)


def rule_prime_radicand(inv: FieldInvariants) -> Optional[FrozenSet[str]]:
    if inv.D.factorization.factors != ((inv.D.value, 1),):
        return None
    tag = residue_class_mod(inv.D.value)
    if tag.is_five or (tag.plus_minus_two and tag.free):
        return frozenset({"th"})
    if tag.plus_minus_two:
        return frozenset({"e"})
    return None


def rule_gamma_epsilon(inv: FieldInvariants) -> Optional[FrozenSet[str]]:
    if non_split_non_free(inv):
        return frozenset({"g", "e"})
    return None


RULES: Tuple[Tuple[str, Rule], ...] = (
    ("R-bound", rule_r_bound),
    ("I-bound", rule_i_bound),
    ("A-bound", rule_a_bound),
    ("zeta-norm", rule_zeta_norm),
    ("prime-radicand", rule_prime_radicand),
    ("gamma-epsilon", rule_gamma_epsilon),
)


def admissible_types(inv: FieldInvariants,
                     rules: Sequence[Tuple[str, Rule]] = RULES) -> TypeConstraintResult:
    """Intersect the 13 types with every applicable rule, in order"""
    remaining = [t.name for t in TYPE_TABLE]
    reasons: List[Tuple[str, str]] = []
    for rule_id, rule in rules:
        allowed = rule(inv)
        if allowed is None:
            continue
        for name in remaining:
            if name not in allowed:
                reasons.append((name, rule_id))
        remaining = [name for name in remaining if name in allowed]

    if not remaining:
        raise InconsistentInputError(f"no admissible DPF type for D={inv.D.value}")
    logger.debug(f"D={inv.D.value}: admissible {remaining}")
    return TypeConstraintResult(
        admissible=tuple(type_by_name(name) for name in remaining),
        reasons=reasons
    )


def check_rule_permutation(inv: FieldInvariants) -> bool:
    """The admissible set does not depend on the order of the rules"""
    reference = set(admissible_types(inv).names)
    return all(set(admissible_types(inv, order).names) == reference
               for order in permutations(RULES))


def forced_absolute_dpf(inv: FieldInvariants) -> bool:
    """Absolute DPF beyond the radicals must exist (A ≥ 2) for this field"""
    return non_split_non_free(inv) and inv.T >= 3


def polya_decision(dpf_type: DpfType, T: int) -> bool:
    """N has the Polya property iff A = T"""
    if T < 1:
        raise InconsistentInputError(f"T must be at least 1, got {T}")
    return dpf_type.A == T


def polya_candidates(inv: FieldInvariants) -> Dict[str, bool]:
    return {t.name: polya_decision(t, inv.T) for t in admissible_types(inv).admissible}
