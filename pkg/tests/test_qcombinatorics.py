from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hullcensus.qcombinatorics import (IntegralityError, exact_div, gaussian_binomial,
                                       gaussian_identity_suite, q_power, subspace_count_by_bases,
                                       to_count)

from conftest import all_subspaces


def test_base_cases():
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(3, 5, 2) == 0


def test_small_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(10, 5, 2) == 109221651
    assert gaussian_binomial(6, 3, 3) == 33880


@pytest.mark.parametrize("n,k,q", [(n, k, q) for q in (2, 3) for n in range(1, 5 if q == 2 else 4)
                                   for k in range(0, n + 1)])
def test_counts_subspaces_by_brute_spans(n, k, q):
    assert gaussian_binomial(n, k, q) == len(all_subspaces(n, k, q))


def test_identity_grid():
    for q in range(2, 6):
        for n in range(1, 21):
            for k in range(0, n):
                assert gaussian_identity_suite(n, k, q), (n, k, q)
                assert gaussian_binomial(n, k, q) == subspace_count_by_bases(n, k, q)


def test_identity_examples_and_boundary():
    assert gaussian_identity_suite(6, 2, 2)
    assert gaussian_identity_suite(9, 4, 3)
    with pytest.raises(ValueError):
        gaussian_identity_suite(5, 5, 2)


@given(st.integers(2, 9), st.integers(0, 30), st.integers(0, 30))
def test_congruent_to_binomial_mod_q_minus_one(q, n, k):
    # q ≡ 1 mod (q - 1), so [n; k]_q ≡ C(n, k)
    if k <= n:
        assert (gaussian_binomial(n, k, q) - comb(n, k)) % (q - 1) == 0


def test_bad_arguments():
    with pytest.raises(ValueError):
        gaussian_binomial(4, 2, 1)
    with pytest.raises(ValueError):
        gaussian_binomial(4, -1, 2)


def test_exact_helpers():
    assert q_power(3, 4) == 81
    assert exact_div(35, 5) == 7
    with pytest.raises(IntegralityError) as e:
        exact_div(35, 4)
    assert (e.value.numerator, e.value.denominator) == (35, 4)


def test_to_count():
    assert to_count(Fraction(12, 3)) == 4
    with pytest.raises(IntegralityError):
        to_count(Fraction(7, 2), "half")
    with pytest.raises(ArithmeticError):
        to_count(-3)
