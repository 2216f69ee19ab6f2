#!/usr/bin/env python3
"""
Tests for radicand reduction, co-radicands and normalization
"""

import os
import sys

import pytest
from hypothesis import assume, given, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from modules.arith import factorize
from modules.dataset import load_dataset
from modules.exceptions import RadicandError
from modules.radicand import (
    Radicand,
    coradicands,
    enumerate_normalized,
    homogeneous_components,
    is_normalized,
    normalize,
)


def test_from_int_reduces_fifth_powers():
    assert Radicand.from_int(2**5 * 3).value == 3
    assert Radicand.from_int(2**7).value == 4


@pytest.mark.parametrize("n", [32, 2**5 * 3**10])
def test_perfect_fifth_powers_are_rejected(n):
    with pytest.raises(RadicandError):
        Radicand.from_int(n)


def test_radicand_validates_its_factorization():
    with pytest.raises(RadicandError):
        Radicand(value=6, factorization=Radicand.from_int(10).factorization)


def test_homogeneous_components():
    decomposition = homogeneous_components(Radicand.from_int(2 * 3**2 * 7**4))
    assert decomposition.components == (2, 3, 1, 7)
    assert decomposition.degree(2) == 3
    assert decomposition.to_dict() == {"D1": 2, "D2": 3, "D3": 1, "D4": 7}


def test_coradicands_of_a_prime():
    assert coradicands(Radicand.from_int(2)) == [2, 4, 8, 16]


def test_normalize_picks_smallest_coradicand():
    normalized, k0 = normalize(Radicand.from_int(16))
    assert (normalized.value, k0) == (2, 4)

    normalized, k0 = normalize(Radicand.from_int(50))
    assert (normalized.value, k0) == (40, 3)
    assert not is_normalized(Radicand.from_int(50))
    assert is_normalized(Radicand.from_int(40))


def test_enumeration_counts():
    values = [D.value for D in enumerate_normalized(1000)]
    assert len(values) == 900
    assert values == sorted(values)
    assert values[:6] == [2, 3, 5, 6, 7, 10]


def test_enumeration_rejects_small_limit():
    with pytest.raises(RadicandError):
        enumerate_normalized(1)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=20_000))
def test_normalization_is_idempotent(n):
    try:
        D = Radicand.from_int(n)
    except RadicandError:
        assume(False)
    normalized, k0 = normalize(D)
    assert 1 <= k0 <= 4
    assert normalized.value <= D.value
    assert normalized.primes == D.primes
    assert normalize(normalized) == (normalized, 1)
    assert sorted(coradicands(normalized)) == sorted(coradicands(D))


def power_free(n, p):
    return all(exponent < p for _, exponent in factorize(n).factors)


@pytest.mark.parametrize("start", range(2, 3000, 500))
def test_cubic_normalization_compares_components(start):
    for n in range(start, start + 500):
        if not power_free(n, 3):
            continue
        D = Radicand.from_int(n, p=3)
        D1, D2 = homogeneous_components(D).components
        assert is_normalized(D) == (D2 < D1), n


def test_cubic_normalization():
    assert coradicands(Radicand.from_int(12, p=3)) == [12, 18]
    normalized, k0 = normalize(Radicand.from_int(18, p=3))
    assert (normalized.value, k0) == (12, 2)
    values = [D.value for D in enumerate_normalized(30, p=3)]
    assert values[:5] == [2, 3, 5, 6, 7]
    assert 4 not in values and 12 in values and 18 not in values


@pytest.mark.parametrize("start", range(2, 10_001, 2000))
def test_every_radicand_lies_in_exactly_one_normalized_orbit(start):
    normalized = {D.value for D in enumerate_normalized(10_001)}
    for n in range(start, min(start + 2000, 10_001)):
        if not power_free(n, 5):
            continue
        D = Radicand.from_int(n)
        members = [value for value in coradicands(D) if value in normalized]
        assert members == [normalize(D)[0].value], n


def test_enumeration_matches_embedded_radicands():
    embedded = [record.D for record in load_dataset() if record.D < 50]
    assert [D.value for D in enumerate_normalized(50)] == embedded
    assert len(embedded) == 38
