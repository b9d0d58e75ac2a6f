"""H_1 and H_2 of even Coxeter groups and the comparison map from Artin H_2.

W_M = F'/R' with F' free on s_1..s_n. H_2(W_M) is elementary abelian of
rank |B| with basis [s_i,s_j]^n(i,j), and rho* reduces Artin coordinates
mod 2.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from artin_homology.artin_h import ArtinH2Class, BasisDescription, BasisElement, commutator_power_text
from artin_homology.coxmat import EvenPresentation, Pair
from artin_homology.errors import PairNotInBError, ResourceLimitError
from artin_homology.oracle.bar import is_boundary
from artin_homology.oracle.groups import GroupTable, evaluate
from artin_homology.oracle.smith import AbelianInvariants, cokernel_invariants
from artin_homology.pontryagin import BarChain, pontryagin_chain
from artin_homology.words import Word, comm_rel_pair, commutator, coxeter_relators

# 2^|B| - 1 combinations are tested
MAX_INDEPENDENCE_PAIRS = 10


@dataclass(frozen=True)
class CoxH2Class:
    """Coordinates over F_2 on the [s_i,s_j]^n(i,j) basis, indexed by B."""
    B: tuple[Pair, ...]
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.B) != len(self.coords):
            raise ValueError(f"{len(self.coords)} coordinates for |B|={len(self.B)}")
        object.__setattr__(self, "coords", tuple(int(c) % 2 for c in self.coords))

    @classmethod
    def unit(cls, p: EvenPresentation, pair: Pair) -> "CoxH2Class":
        if pair not in p.B:
            raise PairNotInBError(*pair)
        return cls(p.B, tuple(int(q == pair) for q in p.B))

    def __add__(self, other: "CoxH2Class") -> "CoxH2Class":
        return CoxH2Class(self.B, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def is_zero(self) -> bool:
        return not any(self.coords)


def cox_h2(p: EvenPresentation) -> BasisDescription:
    elements = []
    for i, j in p.B:
        k = p.half_label(i, j)
        s_i, s_j = Word.generator(i, p.n), Word.generator(j, p.n)
        elements.append(BasisElement(
            label=f"gamma_{i}{j}" if p.n < 10 else f"gamma_{i},{j}",
            representative=commutator_power_text(i, j, k, letter="s"),
            word=commutator(s_i, s_j) ** k,
            pair=(i, j),
            half_label=k,
        ))
    return BasisDescription("coxeter", 2, len(p.B), "Z/2", tuple(elements))


def cox_h1(p: EvenPresentation) -> AbelianInvariants:
    """Abelianized presentation reduced by Smith normal form."""
    relations = np.array([w.abelianization() for w in coxeter_relators(p)], dtype=object)
    return cokernel_invariants(relations, p.n)


def rho_hat(w: Word) -> Word:
    """The lift F -> F', a_i -> s_i, on words."""
    return Word(w.letters, w.n)


def rho_star(c: ArtinH2Class) -> CoxH2Class:
    return CoxH2Class(c.B, c.coords)


def rho_star_matrix(p: EvenPresentation) -> np.ndarray:
    """Matrix of rho* on the two bases: the |B| x |B| identity over F_2."""
    return np.eye(len(p.B), dtype=np.int64)


def cox_pontryagin(i: int, j: int, p: EvenPresentation) -> tuple[tuple[Word, Word], CoxH2Class]:
    """<s_i, (s_j s_i)_{2n(i,j)-1}> is the basis class at (i,j)."""
    pair = tuple(rho_hat(w) for w in comm_rel_pair(i, j, p))
    return pair, CoxH2Class.unit(p, (i, j))


def cox_pontryagin_chains(p: EvenPresentation, G: GroupTable) -> list[BarChain]:
    """The 2-cycles <s_i, (s_j s_i)_{2n-1}> in a finite realization of W_M."""
    chains = []
    for i, j in p.B:
        (g, h), _ = cox_pontryagin(i, j, p)
        chains.append(pontryagin_chain(G, evaluate(G, g), evaluate(G, h)))
    return chains


def cox_pontryagin_independent(p: EvenPresentation, G: GroupTable) -> bool:
    """The chains are independent over F_2 in H_2(G) and each has order 2."""
    chains = cox_pontryagin_chains(p, G)
    if len(chains) > MAX_INDEPENDENCE_PAIRS:
        raise ResourceLimitError(
            f"independence check over |B|={len(chains)}", "max_pairs", MAX_INDEPENDENCE_PAIRS
        )
    for c in chains:
        if not is_boundary(2 * c, G):
            return False
    for mask in product((0, 1), repeat=len(chains)):
        if not any(mask):
            continue
        total = BarChain.zero(G, 2)
        for bit, c in zip(mask, chains):
            if bit:
                total = total + c
        if is_boundary(total, G):
            return False
    return True
