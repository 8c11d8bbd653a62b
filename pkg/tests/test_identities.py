from math import comb, factorial

import pytest

from sytkit import (
    catalan,
    count_fpf_lds_bounded,
    count_involutions,
    count_syt_row_bounded,
    demonstrate_naive_failure,
    verify_a005568,
    verify_corollary_k3,
    verify_fpf_pairs,
    verify_odd_k,
    verify_unrestricted,
    verify_wilf_even,
)


def assert_terms_consistent(verdict):
    for term in verdict.lhs_terms + verdict.rhs_terms:
        assert term.term_value == term.sign * term.binomial * term.left_factor * term.right_factor
    assert verdict.lhs == sum(t.term_value for t in verdict.lhs_terms)
    assert verdict.rhs == sum(t.term_value for t in verdict.rhs_terms)


# ---------------------------------------------------------------- even bound

def test_wilf_even_smallest_case():
    v = verify_wilf_even(2, 1)
    assert (v.lhs, v.rhs, v.holds) == (2, 2, True)
    assert [t.term_value for t in v.rhs_terms] == [2, -2, 2]
    assert_terms_consistent(v)


def test_wilf_even_inactive_bound():
    v = verify_wilf_even(4, 1)
    assert (v.lhs, v.rhs, v.holds) == (2, 2, True)


def test_wilf_even_known_product_side():
    v = verify_wilf_even(2, 3)
    assert v.lhs == comb(6, 3) * 5 == 100
    assert v.holds


def test_wilf_even_rejects_odd_bound():
    with pytest.raises(ValueError):
        verify_wilf_even(3, 2)
    with pytest.raises(ValueError):
        verify_wilf_even(2, 0)


@pytest.mark.parametrize("k", (2, 4, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_wilf_even_holds(k, n):
    v = verify_wilf_even(k, n)
    assert v.holds
    assert_terms_consistent(v)


def test_wilf_even_with_inactive_bound_reduces_to_unrestricted():
    for n in range(1, 5):
        bounded = verify_wilf_even(2 * n, n)
        plain = verify_unrestricted(n)
        assert bounded.lhs == plain.lhs == comb(2 * n, n) * factorial(n)
        assert bounded.rhs == plain.rhs
        # the row bound 2n is inactive on every summand
        for r in range(2 * n + 1):
            assert count_syt_row_bounded(2 * n, r) == count_involutions(r)


# ---------------------------------------------------------------- unrestricted

def test_unrestricted_examples():
    assert (verify_unrestricted(1).lhs, verify_unrestricted(1).rhs) == (2, 2)
    v = verify_unrestricted(2)
    assert v.lhs == 12
    assert [t.term_value for t in v.rhs_terms] == [10, -16, 24, -16, 10]
    v3 = verify_unrestricted(3)
    assert v3.lhs == comb(6, 3) * 6 == 120
    assert v3.holds


@pytest.mark.parametrize("n", range(1, 7))
def test_unrestricted_holds(n):
    v = verify_unrestricted(n)
    assert v.holds
    assert_terms_consistent(v)


# ---------------------------------------------------------------- fpf pairs

def test_fpf_pairs_examples():
    assert verify_fpf_pairs(1).lhs == verify_fpf_pairs(1).rhs == 2
    v = verify_fpf_pairs(2)
    assert v.lhs == 12
    assert [t.term_value for t in v.rhs_terms] == [3, 0, 6, 0, 3]
    assert verify_fpf_pairs(3).holds


@pytest.mark.parametrize("n", range(1, 7))
def test_fpf_pairs_holds(n):
    v = verify_fpf_pairs(n)
    assert v.holds
    assert all(t.sign == 1 for t in v.rhs_terms)
    assert_terms_consistent(v)


# ---------------------------------------------------------------- odd bound

def test_odd_k_degenerate_bound_vanishes():
    for n in range(1, 5):
        v = verify_odd_k(1, n)
        assert (v.lhs, v.rhs, v.holds) == (0, 0, True)


def test_odd_k_examples():
    v = verify_odd_k(3, 1)
    assert (v.lhs, v.rhs) == (2, 2)
    assert verify_odd_k(5, 3).holds


def test_odd_k_rejects_even_bound():
    with pytest.raises(ValueError):
        verify_odd_k(2, 3)


@pytest.mark.parametrize("k", (1, 3, 5))
@pytest.mark.parametrize("n", range(1, 6))
def test_odd_k_holds(k, n):
    v = verify_odd_k(k, n)
    assert v.holds
    assert_terms_consistent(v)


# ---------------------------------------------------------------- bound-3 corollary

@pytest.mark.parametrize("n,value", [(1, 2), (2, 10), (3, 70)])
def test_corollary_k3_small_values(n, value):
    v = verify_corollary_k3(n)
    assert v.lhs == v.rhs == value
    assert value == catalan(n) * catalan(n + 1)
    assert dict(v.checks)["row_bound_4_count"] == value
    assert dict(v.checks)["closed_binomial_form"] == value


@pytest.mark.parametrize("n", range(1, 7))
def test_corollary_k3_four_way_equality(n):
    v = verify_corollary_k3(n)
    assert v.holds
    checks = dict(v.checks)
    assert v.lhs == v.rhs == checks["row_bound_4_count"] == checks["closed_binomial_form"]
    assert checks["row_bound_4_count"] == count_syt_row_bounded(4, 2 * n)
    assert_terms_consistent(v)


# ---------------------------------------------------------------- Catalan convolution

def test_a005568_examples():
    assert verify_a005568(0).lhs == 1 == catalan(0) * catalan(1)
    assert verify_a005568(1).lhs == 2
    assert [t.term_value for t in verify_a005568(1).lhs_terms] == [1, 1]
    assert verify_a005568(2).lhs == 10


@pytest.mark.parametrize("n", range(0, 7))
def test_a005568_holds(n):
    v = verify_a005568(n)
    assert v.holds
    assert v.rhs == catalan(n) * catalan(n + 1)
    assert dict(v.checks)["fpf_lds2_pair_sum"] == v.lhs
    assert_terms_consistent(v)


@pytest.mark.parametrize("n", range(1, 7))
def test_odd_k3_side_equals_catalan_pair_sum(n):
    # the bound-3 positive side collapses to the bound-2 fixed-point-free sum
    odd = verify_odd_k(3, n)
    pair_sum = dict(verify_a005568(n).checks)["fpf_lds2_pair_sum"]
    assert odd.lhs == pair_sum
    assert odd.rhs == pair_sum
    for r in range(2 * n + 1):
        assert count_fpf_lds_bounded(3, r) == count_fpf_lds_bounded(2, r)


# ---------------------------------------------------------------- the broken variant

def test_naive_failure_reproduces_counterexample():
    v = demonstrate_naive_failure(2, 3)
    assert (v.lhs, v.rhs) == (100, 110)
    assert v.holds  # holds means the broken identity really differs
    assert_terms_consistent(v)


def test_naive_failure_equal_at_small_sizes():
    v = demonstrate_naive_failure(2, 1)
    assert (v.lhs, v.rhs) == (2, 2)
    assert not v.holds
    v32 = demonstrate_naive_failure(3, 2)
    assert (v32.lhs, v32.rhs) == (12, 12)
    assert not v32.holds


def test_naive_failure_counterexample_terms():
    v = demonstrate_naive_failure(2, 3)
    assert [t.term_value for t in v.rhs_terms] == [10, 0, 45, 0, 45, 0, 10]
