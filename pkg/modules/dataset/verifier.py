"""
Verification harness: recompute every derivable column of the field tables
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from modules.dpf import (
    EPSILON_GROUND_STATE,
    GAMMA_EPSILON_STATES,
    admissible_types,
    eligibility_pattern,
    forced_absolute_dpf,
    ground_state_family,
    non_split_non_free,
    polya_decision,
    type_by_name,
)
from modules.dpf.constraints import rule_a_bound, rule_prime_radicand
from modules.dpf.ground_states import State
from modules.exceptions import QuinticFieldError
from modules.invariants import FieldInvariants, compute_invariants
from modules.multiplicity import (
    DEFAULT_CANDIDATE_LIMIT,
    conductor_classes,
    multiplicity_bruteforce,
    multiplicity_formula,
)
from modules.relations import kobayashi_Qplus, parry_predict_VN, unit_index_bound

from .annotations import PolyaAnnotation, annotations_by_radicand, polya_annotations
from .models import FieldRecord, VerificationCheck, VerificationReport
from .prototypes import prototype_candidates

logger = logging.getLogger(__name__)

NOT_APPLICABLE = "n/a"

ROW_CHECKS: Tuple[str, ...] = (
    "species",
    "f4",
    "m-formula",
    "m-oracle",
    "parry",
    "kobayashi",
    "unit-index",
    "type-membership",
    "pattern",
    "prime-radicand",
    "gamma-epsilon",
    "vanishing-VN",
    "epsilon-ground-state",
    "polya",
)

# A check returns (passed, expected, computed)
Outcome = Tuple[bool, str, str]


def _not_applicable() -> Outcome:
    return True, NOT_APPLICABLE, NOT_APPLICABLE


def _names(names: Iterable[str]) -> str:
    return " ".join(names)


def _state(record: FieldRecord) -> State:
    return (record.dpf_type.name, record.V_L, record.V_M, record.V_N, record.E)


def _format_state(state: State) -> str:
    name, V_L, V_M, V_N, E = state
    return f"{name} ({V_L},{V_M},{V_N}) E={E}"


class RowChecker:
    """Computes the outcome of each named check for one record"""

    def __init__(self, annotations: Dict[int, PolyaAnnotation], oracle_limit: int = DEFAULT_CANDIDATE_LIMIT):
        self.annotations = annotations
        self.oracle_limit = oracle_limit
        self._oracle_cache: Dict[str, int] = {}

    def outcome(self, name: str, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        handler: Callable[[FieldRecord, FieldInvariants], Outcome] = getattr(self, "_" + name.replace("-", "_"))
        return handler(record, inv)

    def _species(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        return record.species == inv.species, record.species.tag, inv.species.tag

    def _f4(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        return record.f4 == inv.f4, record.f4.format(), inv.f4.format()

    def _m_formula(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        return record.m == inv.m, str(record.m), str(inv.m)

    def _m_oracle(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        key = inv.f4.format()
        if key not in self._oracle_cache:
            self._oracle_cache[key] = multiplicity_bruteforce(inv.f4, self.oracle_limit)
        count = self._oracle_cache[key]
        return record.m == count, str(record.m), str(count)

    def _parry(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        predicted = parry_predict_VN(record.V_L, record.E)
        return predicted == record.V_N, str(record.V_N), str(predicted)

    def _kobayashi(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        q_plus = kobayashi_Qplus(record.V_L, record.V_M)
        return True, "Q+ in 0..2", f"Q+ = {q_plus}"

    def _unit_index(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        bound = unit_index_bound(5)
        return 1 <= record.E <= bound, f"1..{bound}", str(record.E)

    def _type_membership(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        result = admissible_types(inv)
        return result.contains(record.dpf_type), record.dpf_type.name, _names(result.names)

    def _pattern(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        computed = eligibility_pattern(inv, record.dpf_type)
        return computed == record.pattern, record.pattern.format(), computed.format()

    def _prime_radicand(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        forced = rule_prime_radicand(inv)
        if forced is None:
            return _not_applicable()
        names = admissible_types(inv).names
        expected = sorted(forced)
        passed = names == expected and record.dpf_type.name in forced
        return passed, _names(expected), f"{_names(names)} (recorded {record.dpf_type.name})"

    def _gamma_epsilon(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        if not non_split_non_free(inv):
            return _not_applicable()
        expected = [name for name in ("g", "e") if name in rule_a_bound(inv)]
        names = admissible_types(inv).names
        return names == expected, _names(expected), _names(names)

    def _vanishing_VN(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        if record.V_N != 0:
            return _not_applicable()
        passed = record.E == 5 and record.dpf_type.name in ("e", "th")
        return passed, "E=5, type e or th", f"E={record.E}, type {record.dpf_type.name}"

    def _epsilon_ground_state(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        if ground_state_family(inv) is not EPSILON_GROUND_STATE:
            return _not_applicable()
        expected_m = EPSILON_GROUND_STATE.multiplicity[inv.species.tag]
        passed = EPSILON_GROUND_STATE.admits(_state(record)) and record.m == expected_m
        return (passed, f"{_format_state(EPSILON_GROUND_STATE.states[0])} m={expected_m}",
                f"{_format_state(_state(record))} m={record.m}")

    def _polya(self, record: FieldRecord, inv: FieldInvariants) -> Outcome:
        annotation = self.annotations.get(record.D)
        if annotation is None:
            return _not_applicable()
        verdict = polya_decision(record.dpf_type, inv.T)
        passed = verdict == annotation.polya and annotation.type_name == record.dpf_type.name
        return (passed, f"{annotation.type_name} polya={annotation.polya}",
                f"{record.dpf_type.name} polya={verdict}")


def _check_row(checker: RowChecker, record: FieldRecord, names: Sequence[str]) -> List[VerificationCheck]:
    checks = []
    try:
        inv: Optional[FieldInvariants] = compute_invariants(record.D)
        setup_error = ""
    except QuinticFieldError as e:
        inv, setup_error = None, str(e)

    for name in names:
        if inv is None:
            outcome: Outcome = (False, "invariants", f"error: {setup_error}")
        else:
            try:
                outcome = checker.outcome(name, record, inv)
            except QuinticFieldError as e:
                outcome = (False, "consistent input", f"error: {e}")
        passed, expected, computed = outcome
        checks.append(VerificationCheck(
            row_no=record.row_no, check=name, passed=passed,
            expected=expected, computed=computed, D=record.D
        ))
        if passed:
            logger.debug(f"row {record.row_no} (D={record.D}) {name}: ok")
        else:
            logger.error(f"row {record.row_no} (D={record.D}) {name}: expected {expected}, computed {computed}")
    return checks


def annotation_checks(annotations: Sequence[PolyaAnnotation]) -> List[VerificationCheck]:
    """Each annotated type must be admissible and carry the stated Polya verdict"""
    checks = []
    for annotation in annotations:
        try:
            inv = compute_invariants(annotation.D)
            dpf_type = type_by_name(annotation.type_name)
            admissible = admissible_types(inv).contains(dpf_type)
            verdict = polya_decision(dpf_type, inv.T)
            passed = admissible and verdict == annotation.polya
            computed = f"admissible={admissible} polya={verdict}"
        except QuinticFieldError as e:
            passed, computed = False, f"error: {e}"
        checks.append(VerificationCheck(
            row_no=0, check="polya-annotation", passed=passed,
            expected=f"admissible=True polya={annotation.polya}",
            computed=computed, D=annotation.D
        ))
    return checks


def conductor_sweep_checks(limit: int, oracle_limit: int = DEFAULT_CANDIDATE_LIMIT,
                           workers: int = 1) -> List[VerificationCheck]:
    """Closed multiplicity formula against the oracle for every conductor of a radicand below limit"""
    checks = []
    for f4, members in conductor_classes(limit, workers).items():
        inv = compute_invariants(members[0])
        try:
            formula = str(multiplicity_formula(inv.species, inv.t, inv.u, inv.v))
        except QuinticFieldError as e:
            formula = f"error: {e}"
        oracle = str(multiplicity_bruteforce(f4, oracle_limit))
        checks.append(VerificationCheck(
            row_no=0, check="m-sweep", passed=formula == oracle,
            expected=oracle, computed=formula, D=members[0]
        ))
    return checks


def _notes(records: Sequence[FieldRecord]) -> List[str]:
    notes = []
    minimal = set(prototype_candidates(records))
    flagged = {record.D for record in records if record.prototype_flag}
    for D in sorted(minimal - flagged):
        notes.append(f"D={D} is minimal for its class data but carries no prototype flag")
    for D in sorted(flagged - minimal):
        notes.append(f"D={D} carries a prototype flag but a smaller radicand shares its class data")

    conjectured = []
    for record in records:
        try:
            inv = compute_invariants(record.D)
            if forced_absolute_dpf(inv):
                dropped = [t.name for t in admissible_types(inv).admissible if t.A < 2]
                if dropped:
                    notes.append(f"D={record.D}: absolute DPF forcing would also drop {_names(dropped)}")
            if ground_state_family(inv) is GAMMA_EPSILON_STATES:
                conjectured.append(record)
        except QuinticFieldError:
            continue
    notes.extend(gamma_epsilon_notes(conjectured))
    return notes


def gamma_epsilon_notes(records: Sequence[FieldRecord]) -> List[str]:
    """Rows meeting the γ/ε hypotheses against the conjectured class numbers and unit index

    The conjecture is reported on, never counted as a failure.
    """
    if not records:
        return []
    states = " or ".join(_format_state(state) for state in GAMMA_EPSILON_STATES.states)
    deviating = [record for record in records if not GAMMA_EPSILON_STATES.admits(_state(record))]
    notes = [f"gamma-epsilon conjecture ({states}): "
             f"{len(records) - len(deviating)} of {len(records)} rows agree"]
    for record in deviating:
        notes.append(f"D={record.D}: {_format_state(_state(record))} is outside the gamma-epsilon conjecture")
    return notes


def verify_dataset(records: Sequence[FieldRecord],
                   checks: Sequence[str] = ROW_CHECKS,
                   annotations: Optional[Sequence[PolyaAnnotation]] = None,
                   sweep_limit: Optional[int] = None,
                   oracle_limit: int = DEFAULT_CANDIDATE_LIMIT,
                   workers: int = 1) -> VerificationReport:
    """Run every enabled check on every row; failures are reported, never raised"""
    unknown = [name for name in checks if name not in ROW_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available {list(ROW_CHECKS)}")
    annotations = list(annotations) if annotations is not None else polya_annotations()

    checker = RowChecker(annotations_by_radicand(annotations), oracle_limit)
    ordered = sorted(records, key=lambda record: record.row_no)
    logger.info(f"Verifying {len(ordered)} rows with {len(checks)} checks each")

    report = VerificationReport(rows=len(ordered))
    for record in ordered:
        report.checks.extend(_check_row(checker, record, checks))
    report.annotation_checks = annotation_checks(annotations)
    if sweep_limit is not None:
        report.sweep_checks = conductor_sweep_checks(sweep_limit, oracle_limit, workers)
    report.notes = _notes(ordered)

    logger.info(f"Verification finished with {len(report.failures)} failures")
    return report
