"""Sparse integer polynomials and the generating functions of the
asymmetric multinomials.

F_n collects <<n; k>> x^k over all k in Comp(n,n).  It splits by the
position i of the first zero exponent into class polynomials F_{n,i}
(2 <= i <= n+1) satisfying

    F_{n,i}(X) = sum_{j<i} x_j F_{n-1,i-1}(X \\ x_j)
               + (x_1 + ... + x_{i-1}) sum_{l>=i} F_{n-1,l}(X \\ x_i)

with F_{1,2}(x_1) = x_1, where F(X \\ x_j) plugs the remaining variables,
in order, into a polynomial on one variable fewer.  Summing the recursion
over i telescopes into

    F_n(X) = sum_{i=1..n} (x_1 + ... + x_i) F_{n-1,>=i}(X \\ x_i);

`f_n` evaluates both forms and insists they agree.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Mapping, Sequence

from .coefficients import Monomial, monomial
from .errors import ArityError, InconsistencyError, RangeError


class SparsePolynomial:
    """Polynomial over x_1..x_nvars with arbitrary-precision int coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
    ):
        if nvars < 0:
            raise ValueError(f"need nvars >= 0, got {nvars}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            mono = monomial(mono)
            coeff = int(coeff)
            if mono and mono[-1][0] > nvars:
                raise ValueError(f"monomial {mono} uses variables beyond x{nvars}")
            new = acc.get(mono, 0) + coeff
            if new:
                acc[mono] = new
            elif mono in acc:
                del acc[mono]
        self.nvars = nvars
        self._terms = acc

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, value: int, nvars: int) -> "SparsePolynomial":
        return cls(nvars, {(): value})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparsePolynomial":
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} outside 1..{nvars}")
        return cls(nvars, {((i, 1),): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_arity(self, other: "SparsePolynomial") -> None:
        if self.nvars != other.nvars:
            raise ArityError(
                f"operands live on {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(other, self.nvars)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_arity(other)
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            new = acc.get(mono, 0) + coeff
            if new:
                acc[mono] = new
            elif mono in acc:
                del acc[mono]
        out = SparsePolynomial(self.nvars)
        out._terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparsePolynomial(self.nvars)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(other, self.nvars)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = SparsePolynomial(self.nvars)
            if other:
                out._terms = {m: c * other for m, c in self._terms.items()}
            return out
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_arity(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            d1 = dict(m1)
            for m2, c2 in other._terms.items():
                combined = dict(d1)
                for var, exp in m2:
                    combined[var] = combined.get(var, 0) + exp
                key = tuple(sorted(combined.items()))
                new = acc.get(key, 0) + c1 * c2
                if new:
                    acc[key] = new
                elif key in acc:
                    del acc[key]
        out = SparsePolynomial(self.nvars)
        out._terms = acc
        return out

    __rmul__ = __mul__

    def drop_var(self, i: int) -> "SparsePolynomial":
        """Reindex x_{i+1}..x_n down to x_i..x_{n-1}; x_i must not occur."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"variable index {i} outside 1..{self.nvars}")
        acc: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            if any(var == i for var, _ in mono):
                raise ValueError(f"x{i} occurs in {self}; cannot drop it")
            acc[tuple((v - 1 if v > i else v, e) for v, e in mono)] = coeff
        out = SparsePolynomial(self.nvars - 1)
        out._terms = acc
        return out

    def insert_gap(self, i: int) -> "SparsePolynomial":
        """View this polynomial on one more variable, skipping slot i.

        Realizes the substitution F(x_1,..,x_{i-1},x_{i+1},..,x_{n+1}) of an
        n-variable polynomial into an (n+1)-variable context.
        """
        if not 1 <= i <= self.nvars + 1:
            raise ValueError(f"gap position {i} outside 1..{self.nvars + 1}")
        acc = {
            tuple((v + 1 if v >= i else v, e) for v, e in mono): coeff
            for mono, coeff in self._terms.items()
        }
        out = SparsePolynomial(self.nvars + 1)
        out._terms = acc
        return out

    def coefficient(self, exponents: Sequence[int] | Mapping[int, int] | Monomial) -> int:
        """Coefficient of a monomial given as a dense exponent vector, a
        variable -> exponent mapping, or a canonical monomial."""
        if isinstance(exponents, Mapping):
            key = monomial(exponents)
        else:
            seq = tuple(exponents)
            if seq and all(isinstance(e, int) for e in seq):
                if len(seq) != self.nvars:
                    raise ArityError(
                        f"dense exponent vector of length {len(seq)} on "
                        f"{self.nvars} variables"
                    )
                key = monomial({v + 1: e for v, e in enumerate(seq)})
            else:
                key = monomial(seq)
        return self._terms.get(key, 0)

    def evaluate(self, values: Sequence[int]) -> int:
        if len(values) != self.nvars:
            raise ArityError(
                f"expected {self.nvars} values, got {len(values)}"
            )
        total = 0
        for mono, coeff in self._terms.items():
            prod = coeff
            for var, exp in mono:
                prod *= values[var - 1] ** exp
            total += prod
        return total

    def _dense(self, mono: Monomial) -> tuple[int, ...]:
        sparse = dict(mono)
        return tuple(sparse.get(v, 0) for v in range(1, self.nvars + 1))

    def dense_terms(self) -> Iterable[tuple[tuple[int, ...], int]]:
        """(dense exponent vector, coefficient) pairs, lex-descending."""
        return sorted(
            ((self._dense(m), c) for m, c in self._terms.items()),
            key=lambda pair: pair[0],
            reverse=True,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for dense, coeff in self.dense_terms():
            factors = [
                f"x{v + 1}" + (f"^{e}" if e > 1 else "")
                for v, e in enumerate(dense)
                if e
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"<SparsePolynomial on {self.nvars} vars: {self}>"


def poly_add(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p + q


def poly_mul(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p * q


def poly_drop_var(p: SparsePolynomial, i: int) -> SparsePolynomial:
    return p.drop_var(i)


@cache
def _f_class(n: int, i: int) -> SparsePolynomial:
    # class i = compositions whose first zero sits at position i; class 1
    # (leading zero) carries coefficient 0 throughout
    if i == 1:
        return SparsePolynomial.zero(n)
    if n == 1:
        return (
            SparsePolynomial.variable(1, 1)
            if i == 2
            else SparsePolynomial.zero(1)
        )
    out = SparsePolynomial.zero(n)
    for j in range(1, i):
        out = out + SparsePolynomial.variable(j, n) * _f_class(n - 1, i - 1).insert_gap(j)
    if i <= n:
        tail = SparsePolynomial.zero(n - 1)
        for ell in range(i, n + 1):
            tail = tail + _f_class(n - 1, ell)
        prefix = SparsePolynomial.zero(n)
        for j in range(1, i):
            prefix = prefix + SparsePolynomial.variable(j, n)
        out = out + prefix * tail.insert_gap(i)
    return out


def f_ni(n: int, i: int) -> SparsePolynomial:
    """Generating function of <<n; k>> over compositions with first zero at i."""
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    if not 2 <= i <= n + 1:
        raise RangeError(f"first-zero position {i} outside 2..{n + 1}")
    return _f_class(n, i)


def f_n(n: int) -> SparsePolynomial:
    """Full generating function of <<n; k>>, checked against its telescoped form."""
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    total = SparsePolynomial.zero(n)
    for i in range(2, n + 2):
        total = total + _f_class(n, i)
    if n == 1:
        alt = SparsePolynomial.variable(1, 1)
    else:
        alt = SparsePolynomial.zero(n)
        for i in range(1, n + 1):
            tail = SparsePolynomial.zero(n - 1)
            for ell in range(max(i, 2), n + 1):
                tail = tail + _f_class(n - 1, ell)
            prefix = SparsePolynomial.zero(n)
            for j in range(1, i + 1):
                prefix = prefix + SparsePolynomial.variable(j, n)
            alt = alt + prefix * tail.insert_gap(i)
    if total != alt:
        raise InconsistencyError(
            f"class sum and telescoped recursion disagree at n={n}"
        )
    return total
