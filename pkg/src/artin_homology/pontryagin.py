"""Normalized bar chains and Pontryagin products <g,h> = [g|h] - [h|g].

Chains live over any group offering ``identity``, ``mul`` and ``inv``:
finite GroupTables, or the free group with reduced words as elements. Any
tuple containing the identity is the zero chain, and such tuples are
dropped on construction.
"""

from collections.abc import Callable, Hashable, Iterable
from dataclasses import dataclass, field
from typing import Any, Protocol

from artin_homology.artin_h import ArtinH2Class
from artin_homology.coxmat import EvenPresentation
from artin_homology.errors import NonCommutingError
from artin_homology.words import Word, comm_rel_pair, format_word


class Group(Protocol):
    identity: Any

    def mul(self, a, b): ...

    def inv(self, a): ...


@dataclass(frozen=True)
class FreeGroup:
    """F_n with reduced words as elements."""
    n: int

    @property
    def identity(self) -> Word:
        return Word.identity(self.n)

    def mul(self, a: Word, b: Word) -> Word:
        return a * b

    def inv(self, a: Word) -> Word:
        return ~a

    def generator(self, i: int) -> Word:
        return Word.generator(i, self.n)


def _commute(group: Group, g, h) -> bool:
    return group.mul(g, h) == group.mul(h, g)


def _element_text(x, letter: str = "a") -> str:
    return format_word(x, letter) if isinstance(x, Word) else str(x)


@dataclass(frozen=True, eq=False)
class BarChain:
    """Finite integer combination of cells [g_1|...|g_k]."""
    group: Group
    degree: int
    terms: dict[tuple[Hashable, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        identity = self.group.identity
        clean = {}
        for cell, c in self.terms.items():
            if len(cell) != self.degree:
                raise ValueError(f"cell of length {len(cell)} in a degree-{self.degree} chain")
            if c and identity not in cell:
                clean[cell] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, group: Group, degree: int, terms: Iterable[tuple[tuple, int]]) -> "BarChain":
        """Sum of coefficient * cell, accumulating repeated cells."""
        total: dict[tuple, int] = {}
        for cell, c in terms:
            cell = tuple(cell)
            total[cell] = total.get(cell, 0) + c
        return cls(group, degree, total)

    @classmethod
    def cell(cls, group: Group, *elements) -> "BarChain":
        return cls.of(group, len(elements), [(elements, 1)])

    @classmethod
    def zero(cls, group: Group, degree: int) -> "BarChain":
        return cls(group, degree, {})

    def _check(self, other: "BarChain") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")

    def __add__(self, other: "BarChain") -> "BarChain":
        self._check(other)
        return BarChain.of(self.group, self.degree, [*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "BarChain":
        return BarChain(self.group, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BarChain") -> "BarChain":
        return self + (-other)

    def __mul__(self, k: int) -> "BarChain":
        return BarChain(self.group, self.degree, {cell: k * c for cell, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BarChain):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def rendered_terms(self, letter: str = "a") -> list[str]:
        """Terms as ``+[g|h]`` / ``-2[g|h]`` strings in a stable order.

        Word entries print over ``letter``; table entries print as indices.
        """
        out = []
        for cell, c in sorted(self.terms.items(), key=lambda t: [_element_text(x, letter) for x in t[0]]):
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else str(abs(c))
            out.append(f"{sign}{mag}[{'|'.join(_element_text(x, letter) for x in cell)}]")
        return out

    def __str__(self) -> str:
        return " ".join(self.rendered_terms()) or "0"


def bar_boundary(c: BarChain) -> BarChain:
    """Simplicial boundary of the normalized bar complex with trivial coefficients."""
    if c.degree < 1:
        raise ValueError("boundary needs degree >= 1")
    k, mul = c.degree, c.group.mul
    faces = []
    for cell, coeff in c.terms.items():
        faces.append((cell[1:], coeff))
        for i in range(k - 1):
            merged = cell[:i] + (mul(cell[i], cell[i + 1]),) + cell[i + 2:]
            faces.append((merged, (-1) ** (i + 1) * coeff))
        faces.append((cell[:-1], (-1) ** k * coeff))
    return BarChain.of(c.group, k - 1, faces)


def wedge_chain(group: Group, g, h) -> BarChain:
    """[g|h] - [h|g], with no commutation check."""
    return BarChain.of(group, 2, [((g, h), 1), ((h, g), -1)])


def pontryagin_chain(group: Group, g, h) -> BarChain:
    """The 2-cycle <g,h> of a commuting pair."""
    if not _commute(group, g, h):
        raise NonCommutingError(f"{_element_text(g)} and {_element_text(h)} do not commute")
    return wedge_chain(group, g, h)


def bilinearity_witness(group: Group, g, h, k) -> BarChain:
    """c = [g|h|k] - [h|g|k] + [h|k|g].

    When g commutes with h and k, its boundary is <g,hk> - <g,h> - <g,k>.
    """
    for other in (h, k):
        if not _commute(group, g, other):
            raise NonCommutingError(f"{_element_text(g)} and {_element_text(other)} do not commute")
    return BarChain.of(group, 3, [((g, h, k), 1), ((h, g, k), -1), ((h, k, g), 1)])


def hopf_iso_chain(group: Group, comms: list[tuple[Word, Word]], project: Callable[[Word], Any]) -> BarChain:
    """Bar 2-chain of the class of prod [alpha_i, beta_i] under F -> G.

    With I_i = [a_1,b_1]...[a_i,b_i] the chain is the sum of
    [I_{i-1}|a_i] + [I_{i-1}a_i|b_i] - [I_{i-1}a_ib_ia_i^-1|a_i] - [I_i|b_i].
    Its boundary is [I_0] - [I_r], so it is a cycle exactly when the product
    dies in G, which the caller warrants.
    """
    mul, inv = group.mul, group.inv
    partial = group.identity
    terms = []
    for alpha, beta in comms:
        a, b = project(alpha), project(beta)
        ia = mul(partial, a)
        iab = mul(ia, b)
        iaba = mul(iab, inv(a))
        nxt = mul(iaba, inv(b))
        terms += [((partial, a), 1), ((ia, b), 1), ((iaba, a), -1), ((nxt, b), -1)]
        partial = nxt
    return BarChain.of(group, 2, terms)


def pontryagin_artin(i: int, j: int, p: EvenPresentation) -> tuple[tuple[Word, Word], ArtinH2Class]:
    """<a_i, (a_j a_i)_{2n(i,j)-1}> is the basis class alpha_ij."""
    pair = comm_rel_pair(i, j, p)
    return pair, ArtinH2Class.unit(p, (i, j))
