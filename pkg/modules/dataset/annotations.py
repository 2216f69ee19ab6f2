"""
Explicit Polya / non-Polya examples for fields with prime conductor congruences
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class PolyaAnnotation:
    """A radicand with its realized type and the stated Polya verdict"""
    D: int
    type_name: str
    polya: bool
    source: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"D": self.D, "type": self.type_name, "polya": self.polya, "source": self.source}


_GROUPS: Tuple[Tuple[str, str, bool, Tuple[int, ...]], ...] = (
    ("prime conductor, q ≡ -1 (mod 25)", "d2", True, (149, 199, 349, 449, 499, 599)),
    ("prime conductor, q ≡ +1 (mod 25)", "a1", True, (401, 701)),
    ("prime conductor, q ≡ +1 (mod 25)", "a2", True, (151, 251, 601)),
    ("prime conductor, q ≡ +1 (mod 25)", "z1", True, (101,)),
    ("composite conductor, q ≡ -1 (mod 5)", "d2", False, (
        19, 29, 59, 79, 89, 109, 179, 229, 239, 269, 389, 409, 439, 479, 509, 569,
        619, 659, 709, 719, 739, 769, 809, 839, 859, 919, 929
    )),
    ("composite conductor, q ≡ -1 (mod 5)", "b2", True, (139, 359, 419, 829)),
    ("composite conductor, q ≡ -1 (mod 5)", "e", True, (379,)),
    ("composite conductor, q ≡ +1 (mod 5)", "a1", False, (31, 281, 761)),
    ("composite conductor, q ≡ +1 (mod 5)", "a2", False, (
        11, 41, 61, 71, 131, 181, 241, 311, 331, 431, 491, 541, 571, 631, 661, 691,
        811, 821, 911, 941, 971
    )),
    ("composite conductor, q ≡ +1 (mod 5)", "b1", True, (191, 271, 641)),
    ("composite conductor, q ≡ +1 (mod 5)", "d1", False, (211, 421, 461, 521, 881, 991)),
    ("two primes ≡ ±1 (mod 5), type a3", "a3", False, (319, 551, 589, 627, 649, 869, 899, 957)),
    ("prime radicand q ≡ ±2 (mod 5), restrictive", "e", True, (2, 3, 13, 17, 23, 37, 47, 53)),
    ("prime radicand, 5 or q ≡ ±2 (mod 5) free", "th", True, (5, 7, 43, 107)),
)


def polya_annotations() -> List[PolyaAnnotation]:
    """Every annotated radicand, ascending"""
    annotations = [
        PolyaAnnotation(D=D, type_name=type_name, polya=polya, source=source)
        for source, type_name, polya, radicands in _GROUPS
        for D in radicands
    ]
    return sorted(annotations, key=lambda annotation: annotation.D)


def annotations_by_radicand(annotations: Optional[Iterable[PolyaAnnotation]] = None) -> Dict[int, PolyaAnnotation]:
    if annotations is None:
        annotations = polya_annotations()
    return {annotation.D: annotation for annotation in annotations}
