"""Homology of finite groups from the normalized bar complex.

C_k is free on k-tuples of non-identity elements. Boundary matrices use the
row convention: row r of ``boundary_matrix(G, k)`` is the boundary of the
r-th k-cell, so im d_k is the row lattice.
"""

from functools import lru_cache
from itertools import product

import numpy as np

from artin_homology.errors import ResourceLimitError
from artin_homology.logging import get_logger
from artin_homology.oracle.groups import GroupTable
from artin_homology.oracle.smith import AbelianInvariants, Echelon, rank, row_echelon, snf
from artin_homology.pontryagin import BarChain

logger = get_logger("oracle.bar")

DEFAULT_MAX_BAR_ORDER = 16


def _non_identity(G: GroupTable) -> list[int]:
    return [g for g in G.elements() if g != G.identity]


def bar_cells(G: GroupTable, k: int) -> list[tuple[int, ...]]:
    """Basis of C_k in lexicographic order."""
    return list(product(_non_identity(G), repeat=k))


def cell_index(G: GroupTable, cell: tuple[int, ...]) -> int:
    """Position of a normalized cell in bar_cells(G, len(cell))."""
    base = G.order - 1
    index = 0
    for g in cell:
        index = index * base + (g if g < G.identity else g - 1)
    return index


def _check_size(G: GroupTable, degree: int, max_bar_order: int) -> None:
    if (G.order - 1) ** degree > (max_bar_order - 1) ** 3:
        raise ResourceLimitError(
            f"bar complex of a group of order {G.order} in degree {degree}",
            "max_bar_order", max_bar_order,
        )


def boundary_matrix(G: GroupTable, k: int) -> np.ndarray:
    """d_k : C_k -> C_{k-1} as a (|C_k| x |C_{k-1}|) integer matrix."""
    if k < 1:
        raise ValueError(f"boundary degree must be >= 1, got {k}")
    cells = bar_cells(G, k)
    ncols = (G.order - 1) ** (k - 1)
    D = np.zeros((len(cells), ncols), dtype=np.int64)
    e = G.identity
    for row, cell in enumerate(cells):
        faces = [(cell[1:], 1)]
        for i in range(k - 1):
            faces.append((cell[:i] + (G.mul(cell[i], cell[i + 1]),) + cell[i + 2:], (-1) ** (i + 1)))
        faces.append((cell[:-1], (-1) ** k))
        for face, sign in faces:
            if e not in face:
                D[row, cell_index(G, face)] += sign
    logger.debug(f"boundary_matrix: order {G.order}, degree {k}, shape {D.shape}")
    return D


def chain_vector(c: BarChain, G: GroupTable) -> np.ndarray:
    """Coordinates of a chain over G in the basis bar_cells(G, degree)."""
    v = np.zeros((G.order - 1) ** c.degree, dtype=object)
    for cell, coeff in c.terms.items():
        v[cell_index(G, cell)] += coeff
    return v


def bar_h(G: GroupTable, k: int, max_bar_order: int = DEFAULT_MAX_BAR_ORDER) -> AbelianInvariants:
    """H_k(G; Z) for k in {1, 2}."""
    if k not in (1, 2):
        raise ValueError(f"bar_h supports degrees 1 and 2, got {k}")
    _check_size(G, k + 1, max_bar_order)
    dim = (G.order - 1) ** k
    outgoing = 0 if k == 1 else rank(boundary_matrix(G, k))
    factors = snf(boundary_matrix(G, k + 1))
    result = AbelianInvariants(dim - outgoing - len(factors), tuple(d for d in factors if d > 1))
    logger.debug(f"bar_h: order {G.order}, H_{k} = {result}")
    return result


@lru_cache(maxsize=16)
def boundary_lattice(G: GroupTable, max_bar_order: int = DEFAULT_MAX_BAR_ORDER) -> Echelon:
    """Echelon basis of im d_3 inside C_2; cached per group."""
    _check_size(G, 3, max_bar_order)
    return row_echelon(boundary_matrix(G, 3))


def is_boundary(c: BarChain, G: GroupTable, max_bar_order: int = DEFAULT_MAX_BAR_ORDER) -> bool:
    """Whether the 2-chain c lies in the image of d_3."""
    if c.degree != 2:
        raise ValueError(f"is_boundary expects a 2-chain, got degree {c.degree}")
    return boundary_lattice(G, max_bar_order).contains(chain_vector(c, G))


def boundaries_compose_to_zero(G: GroupTable, k: int = 3) -> bool:
    """d_{k-1} d_k = 0 as integer matrices."""
    return not (boundary_matrix(G, k) @ boundary_matrix(G, k - 1)).any()
