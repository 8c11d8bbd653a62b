"""Exact verification of the tableau/involution identities.

Each verifier evaluates both sides of one identity instance with integer
arithmetic and returns an `IdentityVerdict` carrying the full per-term
breakdown, so a failure (or the one deliberate non-identity) can be traced
to individual summands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .counting import (
    catalan,
    count_fpf,
    count_fpf_lds_bounded,
    count_fpf_lis_bounded,
    count_involutions,
    count_perms_lis_bounded,
    count_syt_row_bounded,
)

IDENTITY_IDS = (
    "wilf_even",
    "unrestricted",
    "fpf_pairs",
    "odd_k",
    "corollary_k3",
    "a005568",
    "naive_failure",
)


@dataclass(frozen=True)
class TermBreakdown:
    """One summand: term_value = sign * binomial * left_factor * right_factor."""

    r: int
    sign: int
    binomial: int
    left_factor: int
    right_factor: int
    term_value: int


def _term(r: int, sign: int, binomial: int, left: int, right: int) -> TermBreakdown:
    return TermBreakdown(r, sign, binomial, left, right, sign * binomial * left * right)


@dataclass(frozen=True)
class IdentityVerdict:
    """Exact two-side evaluation of one identity instance.

    ``holds`` means lhs == rhs, except for ``naive_failure`` where it means
    lhs != rhs (that verdict passes when the broken identity really breaks).
    ``checks`` carries named side values for the multi-way equalities.
    """

    identity_id: str
    k: int | None
    n: int
    lhs: int
    rhs: int
    lhs_terms: tuple[TermBreakdown, ...]
    rhs_terms: tuple[TermBreakdown, ...]
    holds: bool
    checks: tuple[tuple[str, int], ...] = field(default=())


def _pair_sum(count: Callable[[int], int], n: int, signed: bool) -> tuple[int, tuple[TermBreakdown, ...]]:
    """sum over r of [(-1)^r] * C(2n, r) * count(r) * count(2n - r)."""
    terms = []
    for r in range(2 * n + 1):
        sign = -1 if signed and r % 2 else 1
        terms.append(_term(r, sign, comb(2 * n, r), count(r), count(2 * n - r)))
    return sum(t.term_value for t in terms), tuple(terms)


def _product_side(n: int, factor: int) -> tuple[int, tuple[TermBreakdown, ...]]:
    """C(2n, n) * factor as a single-term side (indexed at r = n)."""
    term = _term(n, 1, comb(2 * n, n), factor, 1)
    return term.term_value, (term,)


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def verify_wilf_even(k: int, n: int) -> IdentityVerdict:
    """C(2n,n) u_k(n) against the alternating row-bounded tableau sum, even k.

    u_k(n) counts permutations with no increasing subsequence longer than k;
    the right side alternates over splittings of [2n] into two tableau
    supports with rows bounded by k.
    """
    if k < 1 or k % 2 == 1:
        raise ValueError(f"this identity needs an even bound; got k={k} (see verify_odd_k)")
    _require_positive(n)
    lhs, lhs_terms = _product_side(n, count_perms_lis_bounded(k, n))
    rhs, rhs_terms = _pair_sum(lambda r: count_syt_row_bounded(k, r), n, signed=True)
    return IdentityVerdict("wilf_even", k, n, lhs, rhs, lhs_terms, rhs_terms, lhs == rhs)


def verify_unrestricted(n: int) -> IdentityVerdict:
    """C(2n,n) n! against the alternating involution-count sum (no bound)."""
    _require_positive(n)
    lhs, lhs_terms = _product_side(n, factorial(n))
    rhs, rhs_terms = _pair_sum(count_involutions, n, signed=True)
    return IdentityVerdict("unrestricted", None, n, lhs, rhs, lhs_terms, rhs_terms, lhs == rhs)


def verify_fpf_pairs(n: int) -> IdentityVerdict:
    """C(2n,n) n! against the positive fixed-point-free pair sum."""
    _require_positive(n)
    lhs, lhs_terms = _product_side(n, factorial(n))
    rhs, rhs_terms = _pair_sum(count_fpf, n, signed=False)
    return IdentityVerdict("fpf_pairs", None, n, lhs, rhs, lhs_terms, rhs_terms, lhs == rhs)


def verify_odd_k(k: int, n: int) -> IdentityVerdict:
    """Positive fixed-point-free pair sum against the alternating sum, odd k.

    Both involutions carry a "no decreasing subsequence longer than k" bound;
    the left side keeps only fixed-point-free ones and drops the signs.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"this identity needs an odd bound; got k={k} (see verify_wilf_even)")
    _require_positive(n)
    lhs, lhs_terms = _pair_sum(lambda r: count_fpf_lds_bounded(k, r), n, signed=False)
    rhs, rhs_terms = _pair_sum(lambda r: count_syt_row_bounded(k, r), n, signed=True)
    return IdentityVerdict("odd_k", k, n, lhs, rhs, lhs_terms, rhs_terms, lhs == rhs)


def verify_corollary_k3(n: int) -> IdentityVerdict:
    """Four-way equality at bound 3: alternating sum = rows-bounded-by-4 count
    = C_n C_{n+1} = the closed binomial form."""
    _require_positive(n)
    lhs, lhs_terms = _pair_sum(lambda r: count_syt_row_bounded(3, r), n, signed=True)
    rhs = catalan(n) * catalan(n + 1)
    rhs_terms = (_term(n, 1, 1, catalan(n), catalan(n + 1)),)
    row_bound_4 = count_syt_row_bounded(4, 2 * n)
    closed_form = comb(2 * n, n) * comb(2 * n + 2, n + 1) // ((n + 1) * (n + 2))
    holds = lhs == rhs == row_bound_4 == closed_form
    checks = (("row_bound_4_count", row_bound_4), ("closed_binomial_form", closed_form))
    return IdentityVerdict("corollary_k3", None, n, lhs, rhs, lhs_terms, rhs_terms, holds, checks)


def verify_a005568(n: int) -> IdentityVerdict:
    """Catalan convolution over even split sizes against C_n C_{n+1}.

    The left side is sum over i of C(2n, 2i) C_i C_{n-i}; it is also checked
    against the equivalent pair sum of fixed-point-free involutions with
    decreasing subsequences bounded by 2.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    lhs_terms = tuple(
        _term(i, 1, comb(2 * n, 2 * i), catalan(i), catalan(n - i)) for i in range(n + 1)
    )
    lhs = sum(t.term_value for t in lhs_terms)
    rhs = catalan(n) * catalan(n + 1)
    rhs_terms = (_term(n, 1, 1, catalan(n), catalan(n + 1)),)
    pair_sum, _ = _pair_sum(lambda r: count_fpf_lds_bounded(2, r), n, signed=False)
    holds = lhs == rhs == pair_sum
    checks = (("fpf_lds2_pair_sum", pair_sum),)
    return IdentityVerdict("a005568", None, n, lhs, rhs, lhs_terms, rhs_terms, holds, checks)


def demonstrate_naive_failure(k: int, n: int) -> IdentityVerdict:
    """The broken variant: bound the *increasing* statistic on the left-side pairs.

    Replacing n! by u_k(n) and the fixed-point-free counts by their
    increasing-subsequence-bounded variant does NOT give an identity; this
    verdict ``holds`` when the two sides differ, i.e. when the failure shows.
    """
    if k < 1:
        raise ValueError(f"bound k must be a positive integer, got {k}")
    _require_positive(n)
    lhs, lhs_terms = _product_side(n, count_perms_lis_bounded(k, n))
    rhs, rhs_terms = _pair_sum(lambda r: count_fpf_lis_bounded(k, r), n, signed=False)
    return IdentityVerdict("naive_failure", k, n, lhs, rhs, lhs_terms, rhs_terms, lhs != rhs)
