#!/usr/bin/env python3
"""
Tests for species, conductors, discriminants, counters and differents
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from modules.arith import parse_factorization
from modules.exceptions import InconsistentInputError
from modules.invariants import (
    SPECIES_1A,
    SPECIES_1B,
    SPECIES_2,
    DifferentLevel,
    compute_invariants,
    conductor4,
    different_exponents,
    different_valuation,
    discriminants,
    prime_roles,
    refined_species,
    species_of,
)
from modules.radicand import Radicand


def radicand(n):
    return Radicand.from_int(n)


@pytest.mark.parametrize("D, species", [
    (2, SPECIES_1B), (6, SPECIES_1B), (5, SPECIES_1A), (10, SPECIES_1A),
    (7, SPECIES_2), (24, SPECIES_2), (43, SPECIES_2), (101, SPECIES_2),
])
def test_species(D, species):
    assert species_of(radicand(D)) == species


@pytest.mark.parametrize("D, f4", [
    (2, "5^2*2^4"),
    (10, "5^6*2^4"),
    (7, "7^4"),
    (6, "5^2*2^4*3^4"),
    (101, "101^4"),
])
def test_conductor(D, f4):
    assert conductor4(radicand(D)) == parse_factorization(f4)


def test_discriminants():
    dL, dM, dN = discriminants(radicand(11))
    assert dL.format() == "5^5*11^4"
    assert dM.format() == "5^11*11^8"
    assert dN.format() == "5^23*11^16"


def test_compute_invariants_counters():
    inv = compute_invariants(11)
    assert inv.species == SPECIES_1B
    assert inv.counters_dict() == {"T": 2, "t": 1, "u": 0, "v": 1, "n": 0, "s2": 0, "s4": 1}
    assert inv.m == 1
    assert str(inv.refined()) == "(2; 1,0,1,1; 0,0,1)"
    assert (inv.a_bound, inv.i_bound, inv.r_bound) == (2, 1, 2)


def test_compute_invariants_normalizes_first():
    assert compute_invariants(16).D.value == 2
    assert compute_invariants(16) == compute_invariants(2)


def test_first_species_with_five():
    inv = compute_invariants(30)
    assert inv.species == SPECIES_1A
    assert inv.T == 3
    assert inv.t == 2
    assert inv.m == 16


def test_refined_species_tuple():
    assert refined_species(6).as_tuple() == (2, 2, 0, 2, 3, 2, 0, 0)


def test_to_dict_uses_factored_strings():
    data = compute_invariants(2).to_dict()
    assert data["f4"] == "5^2*2^4"
    assert data["species"] == "1b"
    assert data["m"] == 1


def test_different_valuations():
    assert different_valuation(5, radicand(2), DifferentLevel.N_OVER_K) == 8
    assert different_valuation(5, radicand(10), "N/K") == 24
    assert different_valuation(5, radicand(7), "N/K") == 0
    assert different_valuation(11, radicand(11), "N/K") == 4
    assert different_valuation(3, radicand(11), "N/K") == 0
    assert different_valuation(5, radicand(10), "L/Q") == 9
    assert different_valuation(5, radicand(2), "L/Q") == 5
    assert different_valuation(5, radicand(7), "L/Q", split_exponent=4) == 3
    assert different_valuation(5, radicand(7), "L/Q", split_exponent=1) == 0


def test_different_valuation_errors():
    with pytest.raises(InconsistentInputError):
        different_valuation(5, radicand(7), "L/Q")
    with pytest.raises(InconsistentInputError):
        different_valuation(4, radicand(7), "N/K")
    with pytest.raises(ValueError):
        different_valuation(5, radicand(7), "M/K")


def test_different_exponents():
    assert different_exponents(radicand(11)) == {5: 8, 11: 4}
    assert different_exponents(radicand(7)) == {7: 4}


def test_prime_roles():
    roles = prime_roles(radicand(77))
    assert [(r.q, r.role, r.mod5) for r in roles] == [
        (5, "wild", "0"), (7, "free", "±2"), (11, "restrictive", "+1")
    ]
