#!/usr/bin/env python3
"""
Tests for the DPF type table, admissibility rules, patterns and the Polya criterion
"""

import os
import sys

import pytest
from hypothesis import assume, given, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from modules.dpf import (
    EPSILON_GROUND_STATE,
    GAMMA_EPSILON_STATES,
    TYPE_TABLE,
    admissible_types,
    check_rule_permutation,
    cubic_type_by_name,
    cubic_type_table,
    dimension_bounds,
    eligibility_pattern,
    forced_absolute_dpf,
    ground_state_family,
    non_split_non_free,
    parse_pattern,
    polya_candidates,
    polya_decision,
    restrictive_conductor,
    type_by_name,
    type_order,
)
from modules.exceptions import InconsistentInputError, RadicandError
from modules.invariants import compute_invariants
from modules.radicand import enumerate_normalized

NON_POLYA_A3 = (319, 551, 589, 627, 649, 869, 899, 957)


def test_type_table():
    assert len(TYPE_TABLE) == 13
    assert all(t.herbrand_balance() for t in TYPE_TABLE)
    assert [t.name for t in TYPE_TABLE if t.U == 2] == ["a1", "a2", "a3", "b1", "b2", "g"]
    assert type_order(type_by_name("th")) == 12


def test_type_lookup_by_symbol():
    assert type_by_name("α₁") is type_by_name("a1")
    assert type_by_name(" ϑ ").name == "th"
    assert type_by_name("eta").label(unicode=True) == "η"
    with pytest.raises(InconsistentInputError):
        type_by_name("omega")


def test_admissible_types_for_split_prime():
    result = admissible_types(compute_invariants(11))
    assert result.names == ["a1", "a2", "b1", "b2", "d1", "d2", "e"]
    assert ("a3", "I-bound") in result.reasons
    assert ("g", "A-bound") in result.reasons
    assert ("th", "zeta-norm") in result.reasons


def test_gamma_epsilon_rows():
    inv = compute_invariants(6)
    assert non_split_non_free(inv)
    assert admissible_types(inv).names == ["g", "e"]
    assert polya_candidates(inv) == {"g": True, "e": False}
    assert forced_absolute_dpf(inv)


def test_gamma_epsilon_with_two_conductor_primes_keeps_epsilon_only():
    assert admissible_types(compute_invariants(30)).names == ["g", "e"]
    inv = compute_invariants(2)
    assert inv.T == 2
    assert admissible_types(inv).names == ["e"]
    assert not forced_absolute_dpf(inv)


@pytest.mark.parametrize("D, expected", [(2, ["e"]), (3, ["e"]), (5, ["th"]), (7, ["th"]), (43, ["th"])])
def test_prime_radicands(D, expected):
    assert admissible_types(compute_invariants(D)).names == expected


def test_rule_order_does_not_matter():
    for D in (6, 11, 19, 30, 101, 319):
        assert check_rule_permutation(compute_invariants(D))


def test_dimension_bounds():
    assert dimension_bounds(compute_invariants(11)).to_dict() == {"A": 2, "I": 1, "R": 2}
    assert dimension_bounds(compute_invariants(319)).to_dict() == {"A": 3, "I": 2, "R": 2}


def test_polya_decision():
    assert polya_decision(type_by_name("g"), 3)
    assert not polya_decision(type_by_name("a3"), 3)
    assert polya_decision(type_by_name("d2"), 1)
    with pytest.raises(InconsistentInputError):
        polya_decision(type_by_name("a1"), 0)


def test_a3_is_never_polya():
    a3 = type_by_name("a3")
    assert not any(polya_decision(a3, T) for T in range(2, 8))


def test_pattern_parsing():
    assert parse_pattern("(−,−,⊗,−)") == parse_pattern("-,-,ox,-")
    assert parse_pattern("(x),-,-,x").symbols == ("(x)", "-", "-", "x")
    assert parse_pattern("((×),−,−,×)").format() == "(x),-,-,x"
    assert parse_pattern("-,-,ox,-").format(unicode=True) == "(−,−,⊗,−)"
    for text in ("-,-,-", "a,-,-,-", ""):
        with pytest.raises(InconsistentInputError):
            parse_pattern(text)


def test_eligibility_pattern():
    inv = compute_invariants(11)
    assert eligibility_pattern(inv).format() == "-,-,x,-"
    assert eligibility_pattern(inv, type_by_name("a2")).format() == "-,-,ox,-"
    assert eligibility_pattern(inv, type_by_name("e")).format() == "-,-,x,-"
    assert eligibility_pattern(compute_invariants(6), type_by_name("g")).format() == "x,-,-,-"
    assert eligibility_pattern(compute_invariants(101), type_by_name("z1")).format() == "-,-,ox,ox"


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=5000))
def test_admissible_types_respect_bounds(n):
    try:
        inv = compute_invariants(n)
    except RadicandError:
        assume(False)
    bounds = dimension_bounds(inv)
    result = admissible_types(inv)
    assert result.admissible
    for t in result.admissible:
        assert t.A <= bounds.A and t.I <= bounds.I and t.R <= bounds.R
    excluded = {name for name, _ in result.reasons}
    assert excluded.isdisjoint(result.names)
    assert len(excluded) + len(result.names) == 13


def test_cubic_type_table():
    table = cubic_type_table()
    assert [t.name for t in table] == ["a", "b", "g"]
    assert all(t.herbrand_balance() for t in table)
    assert [(t.U, t.B, t.T) for t in table] == [(1, 1, 1), (1, 2, 0), (0, 1, 0)]
    assert cubic_type_by_name("γ") is cubic_type_by_name("g")
    assert cubic_type_by_name("b").label(unicode=True) == "β"
    assert cubic_type_by_name("a").to_dict()["B"] == 1
    with pytest.raises(InconsistentInputError):
        cubic_type_by_name("d")


@pytest.mark.parametrize("D", [2, 3, 10, 18, 85, 137])
def test_epsilon_ground_state(D):
    inv = compute_invariants(D)
    assert inv.T == 2
    assert restrictive_conductor(inv)
    assert ground_state_family(inv) is EPSILON_GROUND_STATE
    assert EPSILON_GROUND_STATE.multiplicity[inv.species.tag] == inv.m
    assert admissible_types(inv).names == ["e"]


@pytest.mark.parametrize("D", [6, 30, 141, 150])
def test_gamma_epsilon_hypotheses(D):
    inv = compute_invariants(D)
    assert ground_state_family(inv) is GAMMA_EPSILON_STATES
    assert GAMMA_EPSILON_STATES.multiplicity[inv.species.tag] == inv.m
    assert set(admissible_types(inv).names) == {"g", "e"}
    assert not GAMMA_EPSILON_STATES.proven


@pytest.mark.parametrize("D", [5, 7, 11, 14, 43, 101])
def test_no_ground_state_family(D):
    assert ground_state_family(compute_invariants(D)) is None


def test_ground_state_families():
    assert EPSILON_GROUND_STATE.admits(("e", 0, 0, 0, 5))
    assert not EPSILON_GROUND_STATE.admits(("e", 0, 0, 1, 6))
    assert GAMMA_EPSILON_STATES.admits(("e", 1, 2, 4, 5))
    assert GAMMA_EPSILON_STATES.to_dict()["states"] == [["g", 0, 0, 1, 6], ["e", 1, 2, 4, 5]]


@pytest.mark.parametrize("D", NON_POLYA_A3)
def test_non_polya_a3_radicands(D):
    inv = compute_invariants(D)
    assert inv.s2 + inv.s4 == 2
    assert "a3" in admissible_types(inv).names
    assert not polya_decision(type_by_name("a3"), inv.T)
    assert polya_candidates(inv)["a3"] is False


@pytest.mark.parametrize("start", range(0, 1000, 250))
def test_every_normalized_radicand_has_an_admissible_type(start):
    for D in enumerate_normalized(1000):
        if start <= D.value < start + 250:
            assert admissible_types(compute_invariants(D.value)).admissible, D.value
