#!/usr/bin/env python3
"""
Tests for the embedded field tables and the verification harness
"""

import os
import sys
from dataclasses import replace

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from modules.arith import parse_factorization
from modules.dataset import (
    CATALOG_COLUMNS,
    EMBEDDED_DATASET,
    ROW_CHECKS,
    annotation_checks,
    catalog,
    conductor_sweep_checks,
    export_dataset,
    frequency_table,
    gamma_epsilon_notes,
    load_dataset,
    parse_dataset,
    polya_annotations,
    prototype_candidates,
    range_counts,
    type_frequencies,
    verify_dataset,
)
from modules.dpf import type_by_name
from modules.exceptions import DatasetFormatError
from modules.invariants import conductor4, species_of
from modules.radicand import Radicand


@pytest.fixture(scope="module")
def records():
    return load_dataset()


GAMMA_EPSILON_SUMMARY = "gamma-epsilon conjecture (g (0,0,1) E=6 or e (1,2,4) E=5): 25 of 25 rows agree"


def by_row(records, row_no):
    return next(record for record in records if record.row_no == row_no)


def test_embedded_rows(records):
    assert len(records) == 125
    assert [r.row_no for r in records] == list(range(1, 126))

    first = by_row(records, 1)
    assert (first.D, first.species.tag, first.f4.format(), first.m) == (2, "1b", "5^2*2^4", 1)
    assert (first.V_L, first.V_M, first.V_N, first.E) == (0, 0, 0, 5)
    assert first.pattern.format(unicode=True) == "(×,−,−,−)"
    assert first.dpf_type.name == "e"

    zeta = by_row(records, 82)
    assert (zeta.D, zeta.species.tag, zeta.f4.format(), zeta.m) == (101, "2", "101^4", 1)
    assert (zeta.V_L, zeta.V_M, zeta.V_N, zeta.E) == (1, 2, 4, 5)
    assert zeta.pattern.format(unicode=True) == "(−,−,⊗,⊗)"
    assert zeta.dpf_type.label(unicode=True) == "ζ₁"

    delta = by_row(records, 124)
    assert (delta.D, delta.species.tag, delta.m, delta.E) == (149, "2", 1, 3)
    assert (delta.V_L, delta.V_M, delta.V_N) == (1, 1, 2)
    assert delta.pattern.format(unicode=True) == "(−,⊗,−,×)"
    assert delta.dpf_type.name == "d2"


def test_golden_species_and_conductors(records):
    for record in records:
        D = Radicand.from_int(record.D)
        assert species_of(D) == record.species, record.row_no
        assert conductor4(D) == record.f4, record.row_no


def test_embedded_dataset_verifies_cleanly(records):
    report = verify_dataset(records)
    assert report.failures == []
    assert report.passed
    assert len(report.checks) == len(records) * len(ROW_CHECKS)
    assert report.notes == [GAMMA_EPSILON_SUMMARY]
    summary = report.summary()
    assert summary["rows"] == 125
    assert summary["per_check"]["parry"] == {"passed": 125, "failed": 0}
    assert summary["per_check"]["epsilon-ground-state"] == {"passed": 125, "failed": 0}


def test_changed_unit_index_breaks_parry_only(records):
    mutated = [replace(r, E=4) if r.row_no == 7 else r for r in records]
    report = verify_dataset(mutated)
    assert [(f.row_no, f.check) for f in report.failures] == [(7, "parry")]
    assert not report.passed


def test_excited_epsilon_ground_state_fails(records):
    mutated = [replace(r, V_N=1, E=6) if r.row_no == 1 else r for r in records]
    report = verify_dataset(mutated)
    assert [(f.row_no, f.check) for f in report.failures] == [(1, "epsilon-ground-state")]


def test_epsilon_ground_state_checks_multiplicity(records):
    mutated = [replace(r, m=4) if r.row_no == 2 else r for r in records]
    failed = {f.check for f in verify_dataset(mutated, checks=("epsilon-ground-state",)).failures}
    assert failed == {"epsilon-ground-state"}


def test_gamma_epsilon_notes(records):
    assert gamma_epsilon_notes([]) == []
    six = next(r for r in records if r.D == 6)
    epsilon_row = next(r for r in records if r.D == 141)
    assert epsilon_row.dpf_type.name == "e" and (epsilon_row.V_N, epsilon_row.E) == (4, 5)
    deviating = replace(six, V_N=2, E=6)
    assert gamma_epsilon_notes([six, epsilon_row, deviating]) == [
        "gamma-epsilon conjecture (g (0,0,1) E=6 or e (1,2,4) E=5): 2 of 3 rows agree",
        "D=6: g (0,0,2) E=6 is outside the gamma-epsilon conjecture",
    ]


def test_changed_type_is_not_admissible(records):
    mutated = [replace(r, dpf_type=type_by_name("th")) if r.row_no == 4 else r for r in records]
    failures = verify_dataset(mutated).failures
    assert len(failures) >= 1
    assert (4, "type-membership") in [(f.row_no, f.check) for f in failures]


def test_selected_checks_only(records):
    report = verify_dataset(records[:10], checks=("species", "f4"))
    assert len(report.checks) == 20
    with pytest.raises(ValueError):
        verify_dataset(records, checks=("nonsense",))


def test_report_text_and_dict(records):
    report = verify_dataset(records[:5], annotations=[])
    assert "DATASET VERIFICATION REPORT" in report.format_text()
    assert report.to_dict()["summary"]["failures"] == 0
    assert report.annotation_checks == []


def test_polya_annotations_agree():
    annotations = polya_annotations()
    assert len(annotations) == len({a.D for a in annotations})
    non_polya_a3 = [a.D for a in annotations if a.type_name == "a3"]
    assert non_polya_a3 == [319, 551, 589, 627, 649, 869, 899, 957]
    checks = annotation_checks(annotations)
    assert [c.D for c in checks if not c.passed] == []


def test_conductor_sweep_agrees():
    checks = conductor_sweep_checks(300)
    assert checks
    assert all(check.passed for check in checks)


def test_prototypes_match_flags(records):
    flagged = [r.D for r in records if r.prototype_flag]
    assert prototype_candidates(records) == flagged


def test_type_frequencies(records):
    counts = type_frequencies(records, 100)
    assert sum(counts.values()) == 81
    assert {name: n for name, n in counts.items() if n} == {
        "a1": 1, "a2": 10, "b2": 7, "g": 25, "d2": 8, "e": 26, "eta": 1, "th": 3
    }
    assert sum(type_frequencies(records, 50).values()) == 38
    assert set(type_frequencies(records, 2).values()) == {0}


def test_frequency_table(records):
    frame = frequency_table(records)
    assert list(frame.columns) == ["<50", "<100", "<=150"]
    assert frame.loc["total"].tolist() == [38, 81, 125]
    assert frame.loc["g", "<100"] == 25


def test_range_counts():
    assert range_counts(1000) == {
        "(0, 50)": 38, "(50, 100)": 43, "(100, 150]": 44, "[2, 1000)": 900
    }


def test_catalog(records):
    frame = catalog(200, records)
    assert list(frame.columns) == CATALOG_COLUMNS
    assert frame["D"].tolist() == sorted(frame["D"].tolist())
    row = frame[frame["D"] == 11].iloc[0]
    assert row["type"] == "a2"
    assert row["admissible"] == "a1 a2 b1 b2 d1 d2 e"
    assert frame[frame["D"] == 151].iloc[0]["type"] == ""
    assert len(catalog(200, records, start=151)) == len(frame[frame["D"] >= 151])


def test_export_is_byte_identical(records, tmp_path):
    text = export_dataset(records)
    assert text == EMBEDDED_DATASET.read_text(encoding="utf-8")

    path = tmp_path / "fields.tsv"
    export_dataset(records, path)
    reloaded = load_dataset(path)
    assert reloaded == records
    assert export_dataset(reloaded) == text


def test_row_with_comma_in_principal_factors(records):
    row = by_row(records, 52)
    assert row.principal_factors == "2*5,3*5^3"
    assert row.f4 == parse_factorization("5^2*2^4*3^4*11^4")


HEADER = "no\tD\tspecies\tf4\tm\tVL\tVM\tVN\tE\tpattern\ttype\tpf\tproto\n"
GOOD_ROW = "1\t2\t1b\t5^2*2^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"


def test_parse_reports_line_numbers():
    bad = GOOD_ROW.replace("5^2*2^4", "5^2*4^4")
    with pytest.raises(DatasetFormatError) as info:
        parse_dataset("# comment\n\n" + HEADER + bad)
    assert info.value.line_no == 4
    assert str(info.value).startswith("line 4:")


@pytest.mark.parametrize("row", [
    GOOD_ROW.replace("\te\t", "\tzz\t"),
    GOOD_ROW.replace("1\t2\t1b", "1\t16\t1b"),
    GOOD_ROW.replace("\t1b\t", "\t3c\t"),
    GOOD_ROW.replace("x,-,-,-", "x,-,-"),
    GOOD_ROW.replace("\t5\tx", "\t9\tx"),
    GOOD_ROW.replace("\t1\n", "\t2\n"),
])
def test_parse_rejects_invalid_rows(row):
    with pytest.raises(DatasetFormatError):
        parse_dataset(HEADER + row)


def test_parse_rejects_bad_header_and_duplicates():
    with pytest.raises(DatasetFormatError):
        parse_dataset(HEADER.replace("proto", "flag") + GOOD_ROW)
    with pytest.raises(DatasetFormatError):
        parse_dataset(HEADER + GOOD_ROW + GOOD_ROW.replace("1\t2", "2\t2", 1))
    with pytest.raises(DatasetFormatError):
        parse_dataset("# only a comment\n")


def test_parse_rejects_duplicate_row_numbers():
    second = "1\t3\t1b\t5^2*3^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
    with pytest.raises(DatasetFormatError) as info:
        parse_dataset(HEADER + GOOD_ROW + second)
    assert info.value.line_no == 3
    assert "duplicate row number 1" in str(info.value)


def test_load_missing_file(tmp_path):
    with pytest.raises(DatasetFormatError):
        load_dataset(tmp_path / "missing.tsv")


def test_single_row_file(tmp_path):
    path = tmp_path / "one.tsv"
    path.write_text(HEADER + GOOD_ROW, encoding="utf-8")
    (record,) = load_dataset(path)
    assert record.D == 2 and record.prototype_flag
    assert record.to_dict()["type"] == "e"
