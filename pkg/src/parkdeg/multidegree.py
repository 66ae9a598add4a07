"""Multidegree tables of the iterated embedding of the n-marked moduli
space into P^1 x P^2 x ... x P^(n-3).

The degree of index k = (k_1,..,k_{n-3}) equals the omega-class
intersection number with exponent vector k, i.e. the asymmetric
multinomial of the reversed composition.  Summing the whole table gives
the degree of the projectivized affine cone, which is the odd double
factorial (2(n-3)-1)!!; the table also rewrites as a Chow class
sum deg_k * prod H_i^(i-k_i) on the product of projective spaces.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import compositions as comp
from .coefficients import asym_multinomial, odd_double_factorial
from .errors import DomainError, InconsistencyError, InvariantError


@dataclass(frozen=True)
class MultidegreeTable:
    """All degrees deg_k of the n-marked embedding, keyed by composition."""

    n: int
    entries: dict[comp.Composition, int]

    def entry(self, k) -> int:
        return self.entries[comp.as_composition(k)]

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"k": list(k), "deg": d} for k, d in self.entries.items()
            ],
            "cone_degree": self.total(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_csv(self) -> str:
        m = self.n - 3
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"k_{i}" for i in range(1, m + 1)] + ["deg"])
        for k, d in self.entries.items():
            writer.writerow(list(k) + [d])
        return buf.getvalue()


@dataclass(frozen=True)
class ChowClassExpansion:
    """Coefficients of prod H_i^(e_i) in the class of the embedded space."""

    n: int
    terms: dict[tuple[int, ...], int]


def compute_table(n: int) -> MultidegreeTable:
    """Degrees of every index composition in Comp(n-3, n-3).

    Entries are materialized for all indices, zeros included; an entry is
    zero exactly when the reversed composition is not Catalan.  n = 3 is
    the point target: the single empty composition with degree 1.
    """
    if n < 3:
        raise DomainError(f"need at least 3 marks, got {n}")
    m = n - 3
    entries = {
        k: asym_multinomial(m, comp.reverse(k))
        for k in comp.enumerate_compositions(m, m)
    }
    return MultidegreeTable(n, entries)


def cone_degree(n: int) -> int:
    """Sum of all degrees, asserted equal to (2(n-3)-1)!!."""
    total = compute_table(n).total()
    expected = odd_double_factorial(n - 3)
    if total != expected:
        raise InconsistencyError(
            f"table sum {total} != odd double factorial {expected} at n={n}"
        )
    return total


def chow_class(n: int) -> ChowClassExpansion:
    """Expansion of the embedded class in hyperplane monomials.

    Index k contributes deg_k to the exponent vector (1-k_1,..,(n-3)-k_m);
    a nonzero degree forcing a negative exponent would break the relations
    H_i^(i+1) = 0 and raises InvariantError instead of being clipped.
    """
    if n < 4:
        raise DomainError(f"Chow expansion needs n >= 4, got {n}")
    table = compute_table(n)
    terms: dict[tuple[int, ...], int] = {}
    for k, deg in table.entries.items():
        exps = tuple(i + 1 - ki for i, ki in enumerate(k))
        if any(e < 0 for e in exps):
            if deg != 0:
                raise InvariantError(
                    f"nonzero degree {deg} at k={k} needs negative exponent"
                )
            continue
        if deg:
            terms[exps] = deg
    return ChowClassExpansion(n, terms)
