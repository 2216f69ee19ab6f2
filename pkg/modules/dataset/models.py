"""
Dataset records and verification report structures
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from modules.arith import Factorization
from modules.dpf import DpfType, EligibilityPattern
from modules.invariants import Species

COLUMNS = ["no", "D", "species", "f4", "m", "VL", "VM", "VN", "E",
           "pattern", "type", "pf", "proto"]


@dataclass
class FieldRecord:
    """One row of the field tables"""
    row_no: int
    D: int
    species: Species
    f4: Factorization
    m: int
    V_L: int
    V_M: int
    V_N: int
    E: int
    pattern: EligibilityPattern
    dpf_type: DpfType
    principal_factors: str = ""
    prototype_flag: bool = False

    def to_row(self) -> List[str]:
        """Cells in dataset column order"""
        return [
            str(self.row_no), str(self.D), self.species.tag, self.f4.format(), str(self.m),
            str(self.V_L), str(self.V_M), str(self.V_N), str(self.E),
            self.pattern.format(), self.dpf_type.name, self.principal_factors,
            "1" if self.prototype_flag else "0"
        ]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "row_no": self.row_no,
            "D": self.D,
            "species": self.species.tag,
            "f4": self.f4.format(),
            "m": self.m,
            "V_L": self.V_L,
            "V_M": self.V_M,
            "V_N": self.V_N,
            "E": self.E,
            "pattern": self.pattern.format(),
            "type": self.dpf_type.name,
            "principal_factors": self.principal_factors,
            "prototype": self.prototype_flag
        }


@dataclass
class VerificationCheck:
    """Outcome of one named check on one dataset row (row 0 for annotation checks)"""
    row_no: int
    check: str
    passed: bool
    expected: str
    computed: str
    D: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "row_no": self.row_no,
            "D": self.D,
            "check": self.check,
            "passed": self.passed,
            "expected": self.expected,
            "computed": self.computed
        }


@dataclass
class VerificationReport:
    checks: List[VerificationCheck] = field(default_factory=list)
    annotation_checks: List[VerificationCheck] = field(default_factory=list)
    sweep_checks: List[VerificationCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    rows: int = 0

    @property
    def failures(self) -> List[VerificationCheck]:
        return [c for c in self.checks + self.annotation_checks + self.sweep_checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, Any]:
        per_check: Dict[str, Dict[str, int]] = {}
        for check in self.checks + self.annotation_checks + self.sweep_checks:
            name = check.check.split(":")[0]
            counts = per_check.setdefault(name, {"passed": 0, "failed": 0})
            counts["passed" if check.passed else "failed"] += 1
        return {
            "rows": self.rows,
            "checks": len(self.checks),
            "annotation_checks": len(self.annotation_checks),
            "sweep_checks": len(self.sweep_checks),
            "failures": len(self.failures),
            "per_check": per_check
        }

    def format_text(self) -> str:
        summary = self.summary()
        lines = ["=" * 70, "DATASET VERIFICATION REPORT", "=" * 70]
        for name, counts in summary["per_check"].items():
            lines.append(f"  {name:<18} passed {counts['passed']:>4}  failed {counts['failed']:>3}")
        if self.failures:
            lines.append("")
            lines.append("Failures:")
            for failure in self.failures:
                lines.append(
                    f"  row {failure.row_no} (D={failure.D}) {failure.check}: "
                    f"expected {failure.expected}, computed {failure.computed}"
                )
        if self.notes:
            lines.append("")
            lines.append("Notes:")
            lines.extend(f"  - {note}" for note in self.notes)
        lines.append("")
        lines.append(
            f"{summary['rows']} rows, {summary['checks']} row checks, "
            f"{summary['annotation_checks']} annotation checks, {summary['sweep_checks']} conductor checks, "
            f"{summary['failures']} failures"
        )
        lines.append("=" * 70)
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "summary": self.summary(),
            "failures": [f.to_dict() for f in self.failures],
            "notes": self.notes
        }
