"""Cup products H^1 x H^1 -> H^2 for even Artin groups.

H^1 = Hom(A_M, Z) has the dual basis beta_i; H^2 has the basis beta_ij dual
to alpha_ij. Then beta_i cup beta_j = n(i,j) beta_ij for (i,j) in B, and 0
when the label is infinite.
"""

from dataclasses import dataclass

import numpy as np

from artin_homology.artin_h import h1_class
from artin_homology.coxmat import EvenPresentation, Pair
from artin_homology.magnus import wedge_pairs
from artin_homology.oracle.smith import AbelianInvariants, cokernel_invariants
from artin_homology.words import Word


@dataclass(frozen=True)
class Character:
    """A homomorphism phi: A_M -> Z, given by phi(a_i)."""
    values: tuple[int, ...]

    @classmethod
    def dual(cls, i: int, n: int) -> "Character":
        """beta_i."""
        return cls(tuple(int(k == i) for k in range(1, n + 1)))

    def __call__(self, w: Word) -> int:
        return character_value(self, w)


def character_value(phi: Character, w: Word) -> int:
    if len(phi.values) != w.n:
        raise ValueError(f"character of length {len(phi.values)} on a word over {w.n} letters")
    return sum(v * e for v, e in zip(phi.values, h1_class(w).coords))


def hopf_pairing(comms: list[tuple[Word, Word]], phi: Character, psi: Character) -> int:
    """sum over [g,h] in comms of phi(g) psi(h) - psi(g) phi(h)."""
    return sum(phi(g) * psi(h) - psi(g) * phi(h) for g, h in comms)


def cup(i: int, j: int, p: EvenPresentation) -> int:
    """Coefficient c with beta_i cup beta_j = c * beta_{min(i,j) max(i,j)}."""
    for k in (i, j):
        if not 1 <= k <= p.n:
            raise ValueError(f"index {k} outside [1, {p.n}]")
    if i == j:
        return 0
    k = p.half_label(i, j)
    if k is None:
        return 0
    return k if i < j else -k


@dataclass(frozen=True)
class CupTable:
    """Coefficient of beta_i cup beta_j for every i < j <= n."""
    n: int
    entries: tuple[tuple[Pair, int], ...]

    def __getitem__(self, pair: Pair) -> int:
        """Antisymmetric lookup: (j,i) gives minus (i,j), (i,i) gives 0."""
        i, j = pair
        if i == j:
            return 0
        if i > j:
            return -self[j, i]
        return dict(self.entries)[pair]

    def as_matrix(self) -> list[list[int]]:
        """Antisymmetric n x n table of coefficients."""
        table = [[0] * self.n for _ in range(self.n)]
        for (i, j), c in self.entries:
            table[i - 1][j - 1] = c
            table[j - 1][i - 1] = -c
        return table

    def records(self) -> list[dict]:
        return [
            {"i": i, "j": j, "coeff": c, "basis_pair": [i, j] if c else None}
            for (i, j), c in self.entries
        ]


def cup_table(p: EvenPresentation) -> CupTable:
    return CupTable(p.n, tuple(((i, j), cup(i, j, p)) for i, j in wedge_pairs(p.n)))


def cup_characters(phi: Character, psi: Character, p: EvenPresentation) -> tuple[int, ...]:
    """phi cup psi on the beta_ij basis, indexed by B."""
    f, g = phi.values, psi.values
    return tuple(
        p.half_label(i, j) * (f[i - 1] * g[j - 1] - f[j - 1] * g[i - 1])
        for i, j in p.B
    )


def cup_cokernel(p: EvenPresentation) -> AbelianInvariants:
    """H^2 modulo the image of the cup map on the exterior square of H^1."""
    pairs = wedge_pairs(p.n)
    # one relation per beta_i ^ beta_j, written in the beta_ij coordinates
    relations = np.zeros((len(pairs), len(p.B)), dtype=object)
    for row, (i, j) in enumerate(pairs):
        if (i, j) in p.B:
            relations[row, p.B.index((i, j))] = cup(i, j, p)
    return cokernel_invariants(relations, len(p.B))
