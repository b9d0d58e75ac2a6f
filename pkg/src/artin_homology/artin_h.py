"""H_1 and H_2 of even Artin groups.

H_1 is free on the classes of a_1..a_n. H_2 = (R n [F,F])/[F,R] is free on
alpha_ij = [a_i,a_j]^n(i,j) for (i,j) in B. Classes are entered as formal
products of conjugated relators, whose coordinates are plain signed counts
because conjugation acts trivially modulo [F,R].
"""

from dataclasses import dataclass

import numpy as np
from pyparsing import (
    Literal,
    Optional,
    ParseException,
    Regex,
    Suppress,
    Word as Token,
    nums,
    rest_of_line,
)

from artin_homology.coxmat import EvenPresentation, Pair
from artin_homology.errors import MatrixSyntaxError, PairNotInBError, WarrantViolationError
from artin_homology.magnus import wedge_image, wedge_pairs
from artin_homology.words import Word, commutator, format_word, parse_word, relator


@dataclass(frozen=True)
class RelatorFactor:
    """conj * r_pair^exp * conj^-1."""
    pair: Pair
    exp: int
    conj: Word


@dataclass(frozen=True)
class RelatorProduct:
    """Ordered product of conjugated relators over a fixed presentation."""
    presentation: EvenPresentation
    factors: tuple[RelatorFactor, ...] = ()

    def __post_init__(self):
        p = self.presentation
        for f in self.factors:
            if f.pair not in p.B:
                raise PairNotInBError(*f.pair)
            if f.exp not in (1, -1):
                raise ValueError(f"relator exponent must be +1 or -1, got {f.exp}")
            if f.conj.n != p.n:
                raise ValueError(f"conjugator over {f.conj.n} letters, presentation has {p.n}")
        object.__setattr__(self, "factors", tuple(self.factors))


@dataclass(frozen=True)
class ArtinH1Class:
    """Coordinates on the alpha_i = a_i basis of H_1 = Z^n."""
    coords: tuple[int, ...]

    def __add__(self, other: "ArtinH1Class") -> "ArtinH1Class":
        if len(self.coords) != len(other.coords):
            raise ValueError("classes over different generator counts")
        return ArtinH1Class(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class ArtinH2Class:
    """Integer coordinates on the alpha_ij basis, indexed by B in order."""
    B: tuple[Pair, ...]
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.B) != len(self.coords):
            raise ValueError(f"{len(self.coords)} coordinates for |B|={len(self.B)}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, p: EvenPresentation) -> "ArtinH2Class":
        return cls(p.B, (0,) * len(p.B))

    @classmethod
    def unit(cls, p: EvenPresentation, pair: Pair) -> "ArtinH2Class":
        if pair not in p.B:
            raise PairNotInBError(*pair)
        return cls(p.B, tuple(int(q == pair) for q in p.B))

    def __getitem__(self, pair: Pair) -> int:
        if pair not in self.B:
            raise PairNotInBError(*pair)
        return self.coords[self.B.index(pair)]

    def __add__(self, other: "ArtinH2Class") -> "ArtinH2Class":
        if self.B != other.B:
            raise ValueError("classes over different index sets")
        return ArtinH2Class(self.B, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def as_dict(self) -> dict[Pair, int]:
        return dict(zip(self.B, self.coords))


@dataclass(frozen=True)
class BasisElement:
    label: str
    representative: str
    word: Word
    pair: Pair | None = None
    half_label: int | None = None


@dataclass(frozen=True)
class BasisDescription:
    """Basis of H_k of an Artin or Coxeter group, with representative words."""
    group: str
    degree: int
    rank: int
    coefficients: str
    elements: tuple[BasisElement, ...]


def commutator_power_text(i: int, j: int, k: int, letter: str = "a") -> str:
    """``[a1,a2]^2``; the exponent is omitted when it is 1."""
    base = f"[{letter}{i},{letter}{j}]"
    return base if k == 1 else f"{base}^{k}"


def h1(p: EvenPresentation) -> BasisDescription:
    """Free abelian of rank n on the classes of the generators."""
    elements = tuple(
        BasisElement(label=f"alpha_{i}", representative=f"a{i}", word=Word.generator(i, p.n))
        for i in range(1, p.n + 1)
    )
    return BasisDescription("artin", 1, p.n, "Z", elements)


def h1_class(w: Word) -> ArtinH1Class:
    """Image of w in A_M/[A_M,A_M]: its exponent sums."""
    return ArtinH1Class(w.abelianization())


def h2(p: EvenPresentation) -> BasisDescription:
    """Free abelian of rank |B| on [a_i,a_j]^n(i,j) mod [F,R]."""
    elements = []
    for i, j in p.B:
        k = p.half_label(i, j)
        a_i, a_j = Word.generator(i, p.n), Word.generator(j, p.n)
        elements.append(BasisElement(
            label=f"alpha_{i}{j}" if p.n < 10 else f"alpha_{i},{j}",
            representative=commutator_power_text(i, j, k),
            word=commutator(a_i, a_j) ** k,
            pair=(i, j),
            half_label=k,
        ))
    return BasisDescription("artin", 2, len(p.B), "Z", tuple(elements))


def basis_records(desc: BasisDescription) -> list[dict]:
    """Structured basis description for reports."""
    records = []
    for e in desc.elements:
        record = {"label": e.label, "representative": e.representative}
        if e.pair is not None:
            record.update({"i": e.pair[0], "j": e.pair[1], "n": e.half_label})
        records.append(record)
    return records


def flatten(rp: RelatorProduct) -> Word:
    """The product in F; always in R n [F,F]."""
    p = rp.presentation
    result = Word.identity(p.n)
    for f in rp.factors:
        r = relator(*f.pair, p)
        result = result * f.conj * (r if f.exp > 0 else ~r) * ~f.conj
    return result


def class_of(rp: RelatorProduct) -> ArtinH2Class:
    """Signed count of factors per pair; conjugators drop out."""
    counts = dict.fromkeys(rp.presentation.B, 0)
    for f in rp.factors:
        counts[f.pair] += f.exp
    return ArtinH2Class(rp.presentation.B, tuple(counts.values()))


def coords_via_wedge(w: Word, p: EvenPresentation) -> ArtinH2Class:
    """Coordinates of w from its wedge image, assuming w lies in R.

    The caller warrants R-membership. Support outside B or a coefficient not
    divisible by n(i,j) proves the warrant false; passing both tests does not
    prove it true.
    """
    wedge = wedge_image(w)
    coords = dict.fromkeys(p.B, 0)
    for (i, j), c in wedge.coeff:
        k = p.half_label(i, j)
        if k is None:
            raise WarrantViolationError(f"wedge support at ({i},{j}) outside B")
        if c % k:
            raise WarrantViolationError(
                f"wedge coefficient {c} at ({i},{j}) not divisible by n({i},{j})={k}"
            )
        coords[(i, j)] = c // k
    return ArtinH2Class(p.B, tuple(coords.values()))


def artin_h2_basis_lattice(p: EvenPresentation) -> np.ndarray:
    """Rows are the wedge images of r_ij for (i,j) in B, over all i < j."""
    rows = [wedge_image(relator(i, j, p)).as_vector(p.n) for i, j in p.B]
    if not rows:
        return np.zeros((0, len(wedge_pairs(p.n))), dtype=object)
    return np.array(rows, dtype=object)


_PAIR = (
    Suppress("pair") + Suppress("=") + Suppress("(")
    + Token(nums)("i") + Suppress(",") + Token(nums)("j") + Suppress(")")
)
_EXP = Suppress("exp") + Suppress("=") + Regex(r"[+-]?1")("exp")
_CONJ = Optional(Suppress("conj") + Suppress(Literal("=")) + rest_of_line("conj"))
FACTOR = _PAIR + _EXP + _CONJ


def relator_product_from_text(text: str, p: EvenPresentation) -> RelatorProduct:
    """Parse lines ``pair=(i,j) exp=+1 conj=a3 a1^-1``; ``#`` starts a comment."""
    factors = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            tokens = FACTOR.parse_string(line, parse_all=True)
        except ParseException as e:
            raise MatrixSyntaxError(e.msg, line_no, e.col)
        pair = (int(tokens["i"]), int(tokens["j"]))
        try:
            conj = parse_word(tokens.get("conj", ""), p.n)
        except MatrixSyntaxError as e:
            raise MatrixSyntaxError(f"bad conjugator: {e.detail}", line_no, e.column)
        factors.append(RelatorFactor(pair, int(tokens["exp"]), conj))
    return RelatorProduct(p, tuple(factors))


def relator_product_to_text(rp: RelatorProduct) -> str:
    lines = [
        f"pair=({f.pair[0]},{f.pair[1]}) exp={f.exp:+d} conj={format_word(f.conj)}"
        for f in rp.factors
    ]
    return "\n".join(lines) + ("\n" if lines else "")
