"""Exact integer coefficients: multinomials, the string operator, and the
asymmetric multinomial recursion.

The asymmetric multinomial <<n; k>> is defined for k in Comp(n,n) by
<<0; ()>> = 1 and

    <<n; k>> = sum over 1 <= j < i of <<n-1; reduce(k, j)>>,

where i is the position of the leftmost zero of k.  A composition starting
with 0 therefore has an empty sum and value 0; the coefficient is nonzero
exactly on Catalan compositions.  Intersection numbers of the omega classes
on the moduli space of stable rational curves reduce to these coefficients
after reversing the exponent vector, which is what `omega_intersection`
computes; `psi_intersection` handles the fully symmetric psi-class case via
the string operator and the multinomial closed form, cross-checked against
each other.

All counts are Python ints (arbitrary precision); (2n-1)!! overflows 64-bit
machine words already at n = 17.
"""

from __future__ import annotations

import math
from functools import cache
from typing import Iterable, Mapping, Sequence

from . import compositions as comp
from .errors import DomainError, InconsistencyError, ShapeError

# Sparse exponent vector in canonical form: ((var, exp), ...) sorted by var,
# every stored exponent positive.
Monomial = tuple[tuple[int, int], ...]


def monomial(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    """Canonicalize a variable -> exponent map; zero exponents are dropped."""
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[int, int] = {}
    for var, exp in items:
        var = int(var)
        exp = int(exp)
        if var < 1:
            raise ValueError(f"variable indices are 1-based, got {var}")
        if exp < 0:
            raise ValueError(f"exponents must be non-negative, got {exp} on x{var}")
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def multinomial(n: int, k: Sequence[int]) -> int:
    """n! / (k_1! ... k_j!) when all parts are >= 0 and sum to n, else 0.

    Returning 0 instead of raising on negative parts or a total mismatch
    mirrors the convention that makes the recursion
    binom(n; k) = sum_i binom(n-1; k with k_i decremented) hold verbatim.
    """
    parts = tuple(int(p) for p in k)
    if n < 0 or any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def string_operator(m: Mapping[int, int] | Monomial) -> dict[Monomial, int]:
    """One application of the string operator to a single monomial.

    Decrements each positive exponent in turn and sums the results; the
    empty monomial maps to the empty sum.  Returns a formal sum as a map
    from canonical monomials to positive integer coefficients.
    """
    mono = monomial(m)
    out: dict[Monomial, int] = {}
    for idx in range(len(mono)):
        var, exp = mono[idx]
        if exp == 1:
            child = mono[:idx] + mono[idx + 1 :]
        else:
            child = mono[:idx] + ((var, exp - 1),) + mono[idx + 1 :]
        out[child] = out.get(child, 0) + 1
    return out


def _apply_string(terms: dict[Monomial, int]) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for mono, coeff in terms.items():
        for child, mult in string_operator(mono).items():
            new = out.get(child, 0) + coeff * mult
            if new:
                out[child] = new
            else:
                del out[child]
    return out


def st_mass(m: Mapping[int, int] | Monomial) -> int:
    """Constant term after applying the string operator deg(m) times."""
    mono = monomial(m)
    terms = {mono: 1}
    for _ in range(degree(mono)):
        terms = _apply_string(terms)
    return terms.get((), 0)


def psi_intersection(n: int, k: Sequence[int]) -> int:
    """Intersection number of a psi-class monomial on the n-marked space.

    Zero unless the exponents sum to n-3; otherwise computed both by
    iterating the string operator n-3 times and by the multinomial closed
    form binom(n-3; k), which must agree.
    """
    if n < 3:
        raise DomainError(f"need at least 3 marks, got {n}")
    parts = comp.as_composition(k)
    if len(parts) != n:
        raise ShapeError(f"expected {n} exponents, got {len(parts)}")
    if sum(parts) != n - 3:
        return 0
    via_string = st_mass({i + 1: p for i, p in enumerate(parts) if p})
    via_multinomial = multinomial(n - 3, parts)
    if via_string != via_multinomial:
        raise InconsistencyError(
            f"string-operator route {via_string} != multinomial route "
            f"{via_multinomial} for n={n}, k={parts}"
        )
    return via_string


def _check_square_shape(n: int, k: Sequence[int]) -> comp.Composition:
    parts = comp.as_composition(k)
    if len(parts) != n or sum(parts) != n:
        raise ShapeError(
            f"expected a composition of {n} of length {n}, got {parts} "
            f"(length {len(parts)}, total {sum(parts)})"
        )
    return parts


@cache
def _asym(k: comp.Composition) -> int:
    if not k:
        return 1
    if k[0] == 0:
        return 0
    i = comp.leftmost_zero_index(k)
    return sum(_asym(comp.reduce(k, j)) for j in range(1, i))


def asym_multinomial(n: int, k: Sequence[int]) -> int:
    """The asymmetric multinomial <<n; k>> for k in Comp(n,n), memoized."""
    return _asym(_check_square_shape(n, k))


def asym_multinomial_nomemo(n: int, k: Sequence[int]) -> int:
    """Plain recursive evaluation, for checking the memoized twin."""
    parts = _check_square_shape(n, k)

    def rec(t: comp.Composition) -> int:
        if not t:
            return 1
        if t[0] == 0:
            return 0
        return sum(rec(comp.reduce(t, j)) for j in range(1, comp.leftmost_zero_index(t)))

    return rec(parts)


def _omega_dense(n: int, exponents: Mapping[int, int] | Monomial) -> tuple[int, ...]:
    if n < 4:
        raise DomainError(f"omega classes need at least 4 marks, got {n}")
    mono = monomial(exponents)
    for var, _ in mono:
        if not 4 <= var <= n:
            raise DomainError(
                f"omega variables must lie in 4..{n}, got index {var}"
            )
    sparse = dict(mono)
    return tuple(sparse.get(v, 0) for v in range(4, n + 1))


def omega_intersection(n: int, exponents: Mapping[int, int] | Monomial) -> int:
    """Intersection number of an omega-class monomial on the n-marked space.

    The exponent vector over variables 4..n is densified, reversed, and fed
    to the asymmetric multinomial; the value is 0 unless the total degree
    is n-3.
    """
    dense = _omega_dense(n, exponents)
    if sum(dense) != n - 3:
        return 0
    return asym_multinomial(n - 3, comp.reverse(dense))


def omega_recursion_step(n: int, exponents: Mapping[int, int] | Monomial) -> list[Monomial]:
    """Expand one step of the omega recursion, dropping to n-1 marks.

    Returns the list of omega monomials (over variables 4..n-1) whose
    intersection numbers sum to the input's.  Requires top degree n-3.
    """
    dense = _omega_dense(n, exponents)
    if sum(dense) != n - 3:
        raise DomainError(
            f"recursion step needs total degree {n - 3}, got {sum(dense)}"
        )
    k = comp.reverse(dense)
    out: list[Monomial] = []
    for j in range(1, comp.leftmost_zero_index(k)):
        child_dense = comp.reverse(comp.reduce(k, j))
        out.append(monomial({v + 4: e for v, e in enumerate(child_dense)}))
    return out


def odd_double_factorial(m: int) -> int:
    """(2m-1)!! = (2m-1)(2m-3)...3*1, with the empty product 1 for m = 0."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    out = 1
    for odd in range(1, 2 * m, 2):
        out *= odd
    return out
