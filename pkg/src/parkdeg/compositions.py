"""Weak compositions and the reduction calculus on them.

A weak composition of n of length j is an ordered tuple of j non-negative
integers summing to n; compositions are represented as plain tuples
throughout the package.  All indices in public signatures are 1-based.

The central predicate is the Catalan condition on compositions of n of
length n (every prefix sum of the first j parts is at least j for j < n);
such compositions are exactly the column-height sequences of Dyck paths.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import ShapeError

Composition = tuple[int, ...]


def as_composition(k: Sequence[int]) -> Composition:
    """Coerce to a tuple of non-negative ints, rejecting negative parts."""
    parts = tuple(int(p) for p in k)
    if any(p < 0 for p in parts):
        raise ShapeError(f"composition parts must be non-negative, got {parts}")
    return parts


def is_catalan(k: Sequence[int]) -> bool:
    """True iff every proper prefix of k sums to at least its length.

    Only defined for compositions whose total equals their length (the
    Dyck-path regime); other shapes raise ShapeError rather than guessing.
    The empty composition is vacuously Catalan.
    """
    parts = as_composition(k)
    n = len(parts)
    if sum(parts) != n:
        raise ShapeError(
            f"Catalan test needs total == length, got total {sum(parts)} and length {n}"
        )
    acc = 0
    for j in range(n - 1):
        acc += parts[j]
        if acc < j + 1:
            return False
    return True


def leftmost_zero_index(k: Sequence[int]) -> int:
    """1-based position of the first zero part, or len(k)+1 if none."""
    parts = as_composition(k)
    for idx, p in enumerate(parts):
        if p == 0:
            return idx + 1
    return len(parts) + 1


def reduce(k: Sequence[int], j: int) -> Composition:
    """Reduce k at position j: decrement part j, then drop the leftmost zero.

    Defined only for 1 <= j < leftmost_zero_index(k), i.e. part j lies in
    the initial block of nonzero parts.  The removed zero sits either at
    position j (when part j was 1) or at the original first-zero position.
    """
    parts = as_composition(k)
    i = leftmost_zero_index(parts)
    if not 1 <= j < i:
        raise IndexError(
            f"reduction index {j} must satisfy 1 <= j < {i} (first zero) for {parts}"
        )
    dec = list(parts)
    dec[j - 1] -= 1
    try:
        z = dec.index(0)
    except ValueError:
        raise ShapeError(f"reducing {parts} at {j} leaves no zero to remove") from None
    del dec[z]
    return tuple(dec)


def reverse(k: Sequence[int]) -> Composition:
    """The composition read right to left."""
    return tuple(k)[::-1]


def enumerate_compositions(n: int, j: int) -> Iterator[Composition]:
    """Yield all weak compositions of n of length j, lex-descending.

    The order is an implementation commitment (first part decreasing from n
    to 0, recursively), so cross-engine comparisons are deterministic.
    """
    if n < 0 or j < 0:
        raise ShapeError(f"need n, j >= 0, got n={n}, j={j}")
    if j == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in enumerate_compositions(n - first, j - 1):
            yield (first,) + rest


def compositions_with_first_zero(n: int, i: int) -> Iterator[Composition]:
    """Members of Comp(n,n) whose first zero sits at position i (n+1: none)."""
    if not 1 <= i <= n + 1:
        raise ShapeError(f"first-zero position must lie in 1..{n + 1}, got {i}")
    for k in enumerate_compositions(n, n):
        if leftmost_zero_index(k) == i:
            yield k


def catalan_count(n: int) -> int:
    """Number of Catalan compositions in Comp(n,n), counted by filtering.

    Agrees with the Catalan number binomial(2n, n)/(n+1); the closed form is
    deliberately not used here so the filter can serve as an oracle.
    """
    return sum(1 for k in enumerate_compositions(n, n) if is_catalan(k))
