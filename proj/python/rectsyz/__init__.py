"""Betti tables of determinantal thickening ideals.

Two independent engines: the closed-form equivariant Betti polynomial
(`betti_polynomial`, `betti_table_formula`) and an exact Koszul-homology
oracle (`koszul_betti`, `betti_table_oracle`), plus the partition and
representation-ring calculators they are built from.
"""

from rectsyz._core import (
    betti_polynomial,
    betti_table_formula,
    betti_table_oracle,
    cauchy_degree,
    conjugate,
    contains,
    count_in_rectangle,
    enumerate_in_rectangle,
    euler_check,
    gauss_polynomial,
    generator_space_dim,
    h_rect,
    hilbert_function,
    kostka,
    koszul_betti,
    lambda_rect,
    multiplicity_poly,
    proj_dim_and_reg,
    schur_dim,
    weight_refined_betti,
    x_homology,
    x_terms,
)

__all__ = [
    "betti_polynomial",
    "betti_table_formula",
    "betti_table_oracle",
    "cauchy_degree",
    "conjugate",
    "contains",
    "count_in_rectangle",
    "enumerate_in_rectangle",
    "euler_check",
    "gauss_polynomial",
    "generator_space_dim",
    "h_rect",
    "hilbert_function",
    "kostka",
    "koszul_betti",
    "lambda_rect",
    "multiplicity_poly",
    "proj_dim_and_reg",
    "schur_dim",
    "weight_refined_betti",
    "x_homology",
    "x_terms",
]

__version__ = "0.1.0"
