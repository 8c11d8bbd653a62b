from math import factorial

import pytest

from sytkit import (
    Involution,
    ScaleLimitError,
    brute_count_lis_bounded,
    catalan,
    count_family,
    count_fpf,
    count_fpf_lds_bounded,
    count_fpf_lis_bounded,
    count_involutions,
    count_perms_lis_bounded,
    count_syt_row_bounded,
    generate_involutions,
    hook_length_count,
    lis,
    partitions,
)
from sytkit.counting import validate_family

from oracles import (
    all_partitions,
    all_syt,
    brute_lds,
    brute_lis,
    column_lengths,
    involution_words_by_filter,
    word_fixed_points,
)


# ---------------------------------------------------------------- partitions

def test_partitions_of_four_in_reverse_lex_order():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_trivial_and_even_column_cases():
    assert list(partitions(0)) == [()]
    assert list(partitions(0, all_columns_even=True)) == [()]
    assert list(partitions(4, all_columns_even=True)) == [(2, 2), (1, 1, 1, 1)]
    assert list(partitions(5, all_columns_even=True)) == []


@pytest.mark.parametrize("n", range(0, 13))
@pytest.mark.parametrize("max_first,max_parts", [(None, None), (3, None), (None, 2), (4, 3), (1, 1)])
def test_partition_constraints_match_filtering(n, max_first, max_parts):
    got = list(partitions(n, max_first_part=max_first, max_parts=max_parts))
    expected = [
        s for s in all_partitions(n)
        if (max_first is None or not s or s[0] <= max_first)
        and (max_parts is None or len(s) <= max_parts)
    ]
    assert sorted(got) == sorted(expected)
    assert len(set(got)) == len(got)
    assert got == sorted(got, reverse=True)  # reverse-lexicographic


@pytest.mark.parametrize("n", range(0, 13))
def test_all_columns_even_matches_column_parity_filter(n):
    got = sorted(partitions(n, all_columns_even=True))
    expected = sorted(
        s for s in all_partitions(n) if all(c % 2 == 0 for c in column_lengths(s))
    )
    assert got == expected


def test_all_columns_even_respects_other_constraints():
    for n in range(0, 11):
        for max_parts in (None, 2, 3, 4):
            got = sorted(partitions(n, max_parts=max_parts, all_columns_even=True))
            expected = sorted(
                s for s in all_partitions(n)
                if all(c % 2 == 0 for c in column_lengths(s))
                and (max_parts is None or len(s) <= max_parts)
            )
            assert got == expected


# ---------------------------------------------------------------- hook lengths

def test_hook_length_examples():
    assert hook_length_count((7,)) == 1
    assert hook_length_count((2, 2)) == 2  # == len(all_syt((2, 2)))
    assert hook_length_count((2, 1)) == 2
    assert hook_length_count(()) == 1


@pytest.mark.parametrize("n", range(0, 11))
def test_hook_length_matches_exhaustive_generation(n):
    for shape in partitions(n):
        assert hook_length_count(shape) == len(all_syt(shape))


# ---------------------------------------------------------------- count families

def test_row_bounded_tableau_count_examples():
    assert all(count_syt_row_bounded(1, n) == 1 for n in range(12))
    assert count_syt_row_bounded(3, 2) == 2
    assert all(count_syt_row_bounded(k, 0) == 1 for k in range(1, 6))
    assert [count_syt_row_bounded(3, n) for n in range(5)] == [1, 1, 2, 4, 9]


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("n", range(0, 9))
def test_row_bounded_count_matches_generate_and_filter(k, n):
    support = range(1, n + 1)
    by_lis = sum(1 for v in generate_involutions(support) if lis(v.word()) <= k)
    by_lds = sum(1 for _ in generate_involutions(support, max_lds=k))
    assert count_syt_row_bounded(k, n) == by_lis == by_lds


def test_lis_bounded_permutation_count_examples():
    assert count_perms_lis_bounded(2, 3) == 5
    assert count_perms_lis_bounded(1, 3) == 1
    for n in range(7):
        assert count_perms_lis_bounded(n + 1, n) == factorial(n)
        assert count_perms_lis_bounded(n + 5, n) == factorial(n)


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("n", range(0, 7))
def test_lis_bounded_permutation_count_matches_brute_force(k, n):
    assert count_perms_lis_bounded(k, n) == brute_count_lis_bounded(k, n)


def test_brute_force_respects_scale_limit():
    with pytest.raises(ScaleLimitError):
        brute_count_lis_bounded(2, 9)
    assert brute_count_lis_bounded(2, 9, limit=9) == catalan(9)


def test_lis_bounded_count_matches_single_pass_filter_at_size_eight():
    from itertools import permutations as perms

    by_lis = [0] * 9
    for p in perms(range(1, 9)):
        by_lis[lis(p)] += 1
    for k in range(1, 9):
        assert count_perms_lis_bounded(k, 8) == sum(by_lis[: k + 1])


def test_involution_count_examples():
    assert count_involutions(0) == 1
    assert count_involutions(3) == 4
    assert count_involutions(4) == 10


@pytest.mark.parametrize("m", range(0, 11))
def test_involution_count_matches_generation_and_tableaux(m):
    assert count_involutions(m) == sum(1 for _ in generate_involutions(range(1, m + 1)))
    assert count_involutions(m) == sum(hook_length_count(s) for s in partitions(m))


def test_fpf_count_examples():
    assert count_fpf(3) == 0
    assert count_fpf(4) == 3
    assert count_fpf(0) == 1
    assert count_fpf(8) == 7 * 5 * 3 * 1


@pytest.mark.parametrize("r", range(0, 11))
def test_fpf_count_matches_generation(r):
    generated = sum(1 for _ in generate_involutions(range(1, r + 1), fixed_point_free=True))
    assert count_fpf(r) == generated


def test_fpf_lds_bounded_examples():
    assert count_fpf_lds_bounded(2, 4) == 2
    for m in range(6):
        assert count_fpf_lds_bounded(2, 2 * m) == catalan(m)
    for r in range(11):
        for m in (1, 2):
            assert count_fpf_lds_bounded(2 * m + 1, r) == count_fpf_lds_bounded(2 * m, r)
    assert all(count_fpf_lds_bounded(k, r) == 0 for k in range(1, 7) for r in (1, 3, 5, 7, 9))


def test_fpf_lds_bounded_degenerate_bound():
    # the empty involution vacuously satisfies every bound
    assert count_fpf_lds_bounded(1, 0) == 1
    assert all(count_fpf_lds_bounded(1, r) == 0 for r in range(1, 11))


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("r", range(0, 9))
def test_fpf_bounded_counts_match_generate_and_filter(k, r):
    words = [w for w in involution_words_by_filter(r) if not word_fixed_points(w)]
    assert count_fpf_lds_bounded(k, r) == sum(1 for w in words if brute_lds(w) <= k)
    assert count_fpf_lis_bounded(k, r) == sum(1 for w in words if brute_lis(w) <= k)


def test_fpf_lis_bounded_differs_from_lds_bounded():
    assert [count_fpf_lis_bounded(2, r) for r in range(9)] == [1, 0, 1, 0, 3, 0, 10, 0, 35]
    assert [count_fpf_lds_bounded(2, r) for r in range(9)] == [1, 0, 1, 0, 2, 0, 5, 0, 14]


def test_catalan_examples():
    assert catalan(0) == 1
    assert catalan(3) == 5  # == len(all_syt((3, 3)))
    assert catalan(4) == 14  # == len(all_syt((4, 4)))
    assert catalan(3) == len(all_syt((3, 3)))
    assert catalan(4) == len(all_syt((4, 4)))


def test_row_bound_monotone_in_k():
    for n in range(0, 9):
        for k in range(1, n + 2):
            assert count_syt_row_bounded(k, n) <= count_syt_row_bounded(k + 1, n)
        assert count_syt_row_bounded(n + 1, n) == count_syt_row_bounded(n + 2, n)
        assert count_syt_row_bounded(max(n, 1), n) == count_involutions(n)


def test_lis_bound_saturates_at_factorial():
    for n in range(0, 9):
        assert count_perms_lis_bounded(max(n, 1), n) == factorial(n)


# ---------------------------------------------------------------- generation

def test_generate_involutions_small_cases():
    assert len(list(generate_involutions((1, 2)))) == 2
    assert len(list(generate_involutions((1, 2, 3, 4), fixed_point_free=True))) == 3
    assert list(generate_involutions(())) == [Involution()]


def test_generate_involutions_is_deterministic():
    first = list(generate_involutions(range(1, 6)))
    second = list(generate_involutions(range(1, 6)))
    assert first == second
    assert len(set(first)) == len(first)


@pytest.mark.parametrize("n", range(0, 8))
def test_generate_involutions_matches_permutation_filter(n):
    generated = sorted(v.word() for v in generate_involutions(range(1, n + 1)))
    assert generated == sorted(involution_words_by_filter(n))


def test_generate_involutions_on_scattered_support():
    vs = list(generate_involutions((2, 5, 9)))
    assert len(vs) == 4
    assert all(v.support == (2, 5, 9) for v in vs)


def test_generate_involutions_lds_filter():
    for n in range(0, 7):
        for k in (1, 2, 3):
            got = [v.word() for v in generate_involutions(range(1, n + 1), max_lds=k)]
            expected = [w for w in involution_words_by_filter(n) if brute_lds(w) <= k]
            assert sorted(got) == sorted(expected)


def test_generate_involutions_rejects_duplicate_support():
    with pytest.raises(ValueError):
        list(generate_involutions((1, 1, 2)))


# ---------------------------------------------------------------- family dispatch

def test_count_family_dispatch():
    assert count_family("u", 2, 3) == 5
    assert count_family("y", 3, 4) == 9
    assert count_family("y_unbounded", None, 4) == 10
    assert count_family("x", 2, 6) == 5
    assert count_family("x_unbounded", None, 6) == 15
    assert count_family("catalan", None, 0) == 1


def test_count_family_validates_bound_usage():
    for family in ("u", "y", "x"):
        with pytest.raises(ValueError):
            validate_family(family, None)
    for family in ("y_unbounded", "x_unbounded", "catalan"):
        with pytest.raises(ValueError):
            validate_family(family, 2)
    with pytest.raises(ValueError):
        validate_family("z", None)
