"""Independent ground truth from explicit finite groups."""

from artin_homology.oracle.bar import bar_h, boundary_matrix, is_boundary
from artin_homology.oracle.coset import todd_coxeter
from artin_homology.oracle.groups import (
    GroupTable,
    dihedral,
    direct_product,
    elementary_abelian,
    evaluate,
    load_table,
    order_profile,
    save_table,
)
from artin_homology.oracle.smith import AbelianInvariants, minor_gcd_factors, snf

__all__ = [
    "AbelianInvariants",
    "GroupTable",
    "bar_h",
    "boundary_matrix",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "evaluate",
    "is_boundary",
    "load_table",
    "minor_gcd_factors",
    "order_profile",
    "save_table",
    "snf",
    "todd_coxeter",
]
