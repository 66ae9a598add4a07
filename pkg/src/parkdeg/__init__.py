"""Exact combinatorics of the multidegrees of the iterated embedding of
the moduli space of stable n-marked rational curves into a product of
projective spaces.

Three independent engines compute the same numbers: a memoized recursion
on asymmetric multinomial coefficients, exhaustive enumeration of
column-restricted parking functions, and repeated label insertion via two
different bijections.  The library cross-validates them against the closed
forms (2(n-3)-1)!!, (n-3)!, and multinomial psi-class intersection numbers.
"""

from . import compositions, errors
from .coefficients import (
    asym_multinomial,
    asym_multinomial_nomemo,
    monomial,
    multinomial,
    odd_double_factorial,
    omega_intersection,
    omega_recursion_step,
    psi_intersection,
    st_mass,
    string_operator,
)
from .genfun import SparsePolynomial, f_n, f_ni, poly_add, poly_drop_var, poly_mul
from .multidegree import (
    ChowClassExpansion,
    MultidegreeTable,
    chow_class,
    compute_table,
    cone_degree,
)
from .parking import (
    ParkingFunction,
    PointedParkingFunction,
    build_all_by_insertion,
    classify,
    count_cpf,
    count_cpf_total,
    enumerate_cpf,
    insert_iota,
    insert_iota_prime,
    is_good,
    is_good_pointed,
    point_is_corner,
    remove_nu,
    remove_nu_prime,
)

__version__ = "0.1.0"

__all__ = [
    "ChowClassExpansion",
    "MultidegreeTable",
    "ParkingFunction",
    "PointedParkingFunction",
    "SparsePolynomial",
    "asym_multinomial",
    "asym_multinomial_nomemo",
    "build_all_by_insertion",
    "chow_class",
    "classify",
    "compositions",
    "compute_table",
    "cone_degree",
    "count_cpf",
    "count_cpf_total",
    "enumerate_cpf",
    "errors",
    "f_n",
    "f_ni",
    "insert_iota",
    "insert_iota_prime",
    "is_good",
    "is_good_pointed",
    "monomial",
    "multinomial",
    "odd_double_factorial",
    "omega_intersection",
    "omega_recursion_step",
    "point_is_corner",
    "poly_add",
    "poly_drop_var",
    "poly_mul",
    "psi_intersection",
    "remove_nu",
    "remove_nu_prime",
    "st_mass",
    "string_operator",
]
