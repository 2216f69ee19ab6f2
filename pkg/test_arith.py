#!/usr/bin/env python3
"""
Tests for exact factorization, factored strings and residue classes
"""

import os
import sys

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from modules.arith import (
    FACTOR_CAP,
    Factorization,
    factorize,
    is_free_residue,
    parse_factorization,
    residue_class_mod,
    squarefree_kernel,
    valuation,
)
from modules.exceptions import FactorizationError, QuinticFieldError


def test_factorize_small_values():
    assert factorize(2).factors == ((2, 1),)
    assert factorize(2 * 3**2 * 5**4).factors == ((2, 1), (3, 2), (5, 4))
    assert factorize(997).factors == ((997, 1),)


@pytest.mark.parametrize("n", [0, 1, -7, FACTOR_CAP + 1])
def test_factorize_rejects_out_of_range(n):
    with pytest.raises(FactorizationError):
        factorize(n)


def test_factorize_rejects_non_integers():
    with pytest.raises(FactorizationError):
        factorize(2.0)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        factorize(1)
    assert issubclass(FactorizationError, QuinticFieldError)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10**6))
def test_factorization_multiplies_back(n):
    factorization = factorize(n)
    assert factorization.value == n
    assert list(factorization.primes) == sorted(factorization.primes)
    assert n % squarefree_kernel(factorization) == 0


def test_parse_dataset_string_round_trips():
    text = "5^2*2^4*11^4"
    factorization = parse_factorization(text)
    assert factorization.factors == ((2, 4), (5, 2), (11, 4))
    assert factorization.format() == text
    assert factorization.value == 25 * 16 * 11**4


def test_parse_empty_product():
    assert parse_factorization("1") == Factorization()
    assert Factorization().format() == "1"


def test_unicode_format():
    assert parse_factorization("5^2*2^4").format(unicode=True) == "5²·2⁴"
    assert parse_factorization("3*7^2").format(unicode=True) == "3·7²"


def test_format_without_lead_prime():
    assert factorize(50).format(lead=None) == "2*5^2"
    assert factorize(50).format() == "5^2*2"


@pytest.mark.parametrize("text", ["", "4^2", "2^0", "2^4*2", "x^2", "2^^4"])
def test_parse_rejects_malformed_strings(text):
    with pytest.raises(FactorizationError):
        parse_factorization(text)


def test_factorization_requires_increasing_primes():
    with pytest.raises(FactorizationError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(FactorizationError):
        Factorization(((2, 0),))


def test_factorization_arithmetic():
    f = factorize(12)
    assert f.multiply(factorize(15)).value == 180
    assert f.power(3).value == 12**3
    assert f.without(2).value == 3
    assert f.exponent(2) == 2 and f.exponent(7) == 0
    assert f.to_dict() == {"value": 12, "factors": [[2, 2], [3, 1]], "text": "2^2*3"}


def test_valuation():
    assert valuation(250, 5) == 3
    assert valuation(7, 5) == 0
    with pytest.raises(FactorizationError):
        valuation(0, 5)


def test_free_residues():
    assert [n for n in range(25) if is_free_residue(n)] == [1, 7, 18, 24]
    assert is_free_residue(49)


@pytest.mark.parametrize("q, mod5, free", [
    (5, "0", False),
    (2, "±2", False),
    (7, "±2", True),
    (11, "+1", False),
    (19, "-1", False),
    (101, "+1", True),
    (149, "-1", True),
])
def test_residue_tags(q, mod5, free):
    tag = residue_class_mod(q)
    assert tag.mod5_class == mod5
    assert tag.free == free
    assert tag.restrictive == (q != 5 and not free)
    assert tag.residue == q % 25


def test_residue_tag_validation():
    with pytest.raises(FactorizationError):
        residue_class_mod(9)
    with pytest.raises(FactorizationError):
        residue_class_mod(7, modulus=7)
    assert residue_class_mod(7, modulus=5).residue == 2
