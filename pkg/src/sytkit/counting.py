"""Exact counting and exhaustive generation.

Every count is an arbitrary-precision integer; nothing here touches floats.
Each closed-form or shape-sum path has a matching generate-and-filter oracle
(`generate_involutions`, `brute_count_lis_bounded`) so the two routes can be
checked against each other at small sizes.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations
from math import comb, factorial
from typing import Iterator, Sequence

from .core import Involution, as_shape, conjugate, lds, lis
from .errors import ScaleLimitError

DEFAULT_PERMUTATION_LIMIT = 8

#: families addressable by (family, k, n) queries; None marks "no bound parameter"
FAMILIES = ("u", "y", "y_unbounded", "x_unbounded", "x", "catalan")
_BOUNDED_FAMILIES = ("u", "y", "x")


def partitions(
    n: int,
    max_first_part: int | None = None,
    max_parts: int | None = None,
    all_columns_even: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of n satisfying all constraints, in reverse-lex order.

    ``all_columns_even`` keeps exactly the shapes whose column lengths are all
    even; those are the shapes whose rows pair up (lambda_1 = lambda_2,
    lambda_3 = lambda_4, ...), so they are generated directly by doubling each
    part of a partition of n/2 instead of filtering.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if all_columns_even:
        if n % 2 == 1:
            return
        half_rows = None if max_parts is None else max_parts // 2
        for mu in partitions(n // 2, max_first_part=max_first_part, max_parts=half_rows):
            doubled = []
            for part in mu:
                doubled += (part, part)
            yield tuple(doubled)
        return
    cap = n if max_first_part is None else min(max_first_part, n)
    yield from _partitions_rec(n, cap, -1 if max_parts is None else max_parts)


def _partitions_rec(n: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if cap < 1 or slots == 0:
        return
    for first in range(min(cap, n), 0, -1):
        for rest in _partitions_rec(n - first, first, slots - 1 if slots > 0 else -1):
            yield (first, *rest)


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of a shape, by the hook length formula."""
    s = as_shape(shape)
    n = sum(s)
    cols = conjugate(s)
    denom = 1
    for i, row_len in enumerate(s):
        for j in range(row_len):
            denom *= row_len - j + cols[j] - i - 1
    return factorial(n) // denom


def _require_bound(k: int) -> None:
    if k < 1:
        raise ValueError(f"bound k must be a positive integer, got {k}")


@cache
def count_syt_row_bounded(k: int, n: int) -> int:
    """Standard tableaux on n boxes with no row longer than k.

    Equivalently: involutions of length n with no increasing subsequence
    longer than k (and, by conjugation, the same with "decreasing").
    """
    _require_bound(k)
    return sum(hook_length_count(s) for s in partitions(n, max_first_part=k))


@cache
def count_perms_lis_bounded(k: int, n: int) -> int:
    """Permutations of length n with no increasing subsequence longer than k.

    Robinson-Schensted pairs permutations with two same-shape tableaux, so
    this is the sum of squared tableau counts over shapes with rows <= k.
    """
    _require_bound(k)
    return sum(hook_length_count(s) ** 2 for s in partitions(n, max_first_part=k))


@cache
def count_involutions(m: int) -> int:
    """Involutions of an m-element set: i(m) = i(m-1) + (m-1) i(m-2)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    prev, cur = 1, 1
    for i in range(2, m + 1):
        prev, cur = cur, cur + (i - 1) * prev
    return cur if m else 1


@cache
def count_fpf(r: int) -> int:
    """Fixed-point-free involutions of length r: (r-1)!! for even r, else 0."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r % 2 == 1:
        return 0
    out = 1
    for odd in range(1, r, 2):
        out *= odd
    return out


@cache
def count_fpf_lds_bounded(k: int, r: int) -> int:
    """Fixed-point-free involutions of length r with no decreasing subsequence > k.

    Fixed-point-free means the tableau image has no odd column, and the
    decreasing bound caps the column heights, so this is a sum over shapes
    with all columns even and at most k rows.  Zero for odd r.
    """
    _require_bound(k)
    return sum(hook_length_count(s) for s in partitions(r, max_parts=k, all_columns_even=True))


@cache
def count_fpf_lis_bounded(k: int, r: int) -> int:
    """Fixed-point-free involutions of length r with no increasing subsequence > k.

    Same shape sum as the decreasing-bounded count but capping row lengths
    instead of row count.  The two statistics agree on unrestricted
    involutions yet differ on fixed-point-free ones; keeping both explicit
    avoids ever conflating them.
    """
    _require_bound(k)
    return sum(hook_length_count(s) for s in partitions(r, max_first_part=k, all_columns_even=True))


def catalan(n: int) -> int:
    """The n-th Catalan number, binomial(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def generate_involutions(
    support: Sequence[int],
    fixed_point_free: bool = False,
    max_lds: int | None = None,
) -> Iterator[Involution]:
    """Yield every involution on the given labels, deterministically ordered.

    Recursion on the smallest unmatched label: first leave it fixed (skipped
    under ``fixed_point_free``), then pair it with each larger label in turn.
    ``max_lds`` keeps only involutions whose word has no decreasing
    subsequence longer than the bound.
    """
    labels = tuple(sorted(int(x) for x in support))
    if len(set(labels)) != len(labels):
        raise ValueError("support labels must be distinct")

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]:
        if not remaining:
            yield (), ()
            return
        s, rest = remaining[0], remaining[1:]
        if not fixed_point_free:
            for fps, cycles in rec(rest):
                yield (s, *fps), cycles
        for i, t in enumerate(rest):
            for fps, cycles in rec(rest[:i] + rest[i + 1:]):
                yield fps, ((s, t), *cycles)

    for fps, cycles in rec(labels):
        v = Involution(fps, cycles)
        if max_lds is not None and lds(v.word()) > max_lds:
            continue
        yield v


def brute_count_lis_bounded(k: int, n: int, limit: int = DEFAULT_PERMUTATION_LIMIT) -> int:
    """Oracle for ``count_perms_lis_bounded``: filter all n! permutations."""
    _require_bound(k)
    if n > limit:
        raise ScaleLimitError(f"oracle scale exceeded: n={n} > limit={limit}")
    return sum(1 for p in permutations(range(1, n + 1)) if lis(p) <= k)


def validate_family(family: str, k: int | None) -> None:
    """Check a (family, k) query combination; k goes with u, y, x only."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if family in _BOUNDED_FAMILIES:
        if k is None:
            raise ValueError(f"family {family!r} requires a bound k")
    elif k is not None:
        raise ValueError(f"family {family!r} takes no bound k")


def count_family(family: str, k: int | None, n: int) -> int:
    """Evaluate one (family, k, n) count query."""
    validate_family(family, k)
    if family == "u":
        return count_perms_lis_bounded(k, n)
    if family == "y":
        return count_syt_row_bounded(k, n)
    if family == "y_unbounded":
        return count_involutions(n)
    if family == "x":
        return count_fpf_lds_bounded(k, n)
    if family == "x_unbounded":
        return count_fpf(n)
    return catalan(n)
