"""Degree-2 Magnus expansion and the wedge map onto [F,F]/[F,[F,F]].

a_i maps to 1 + X_i and a_i^-1 to 1 - X_i + X_i^2 in the power series ring
truncated above degree 2. Coefficients are Python ints held in numpy object
arrays, so long words never overflow.
"""

from dataclasses import dataclass

import numpy as np

from artin_homology.errors import NotInCommutatorError
from artin_homology.words import Word

Pair = tuple[int, int]


class MagnusTruncation:
    """1 + sum ab[i] X_i + sum deg2[i, j] X_i X_j (0-based indices)."""

    __slots__ = ("ab", "deg2")

    def __init__(self, ab: np.ndarray, deg2: np.ndarray):
        self.ab = ab
        self.deg2 = deg2

    @classmethod
    def one(cls, n: int) -> "MagnusTruncation":
        return cls(np.zeros(n, dtype=object), np.zeros((n, n), dtype=object))

    @property
    def n(self) -> int:
        return len(self.ab)

    def __mul__(self, other: "MagnusTruncation") -> "MagnusTruncation":
        if self.n != other.n:
            raise ValueError(f"alphabet mismatch: {self.n} != {other.n}")
        return MagnusTruncation(
            self.ab + other.ab,
            self.deg2 + other.deg2 + np.outer(self.ab, other.ab),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MagnusTruncation):
            return NotImplemented
        return bool((self.ab == other.ab).all() and (self.deg2 == other.deg2).all())

    def __repr__(self) -> str:
        return f"MagnusTruncation(ab={self.ab.tolist()}, deg2={self.deg2.tolist()})"

    def is_one(self) -> bool:
        return not self.ab.any() and not self.deg2.any()


def magnus2(w: Word) -> MagnusTruncation:
    """Truncated Magnus expansion of w, one letter at a time."""
    m = MagnusTruncation.one(w.n)
    ab, deg2 = m.ab, m.deg2
    for x in w.letters:
        i = abs(x) - 1
        s = 1 if x > 0 else -1
        deg2[:, i] += s * ab
        if s < 0:
            deg2[i, i] += 1
        ab[i] += s
    return m


@dataclass(frozen=True)
class WedgeVector:
    """Element of the exterior square of Z^n, sum coeff * (i ^ j) with i < j.

    ``coeff`` holds only the nonzero terms, sorted by pair.
    """
    coeff: tuple[tuple[Pair, int], ...] = ()

    def __post_init__(self):
        for (i, j), _ in self.coeff:
            if not i < j:
                raise ValueError(f"wedge pair ({i},{j}) must be increasing")
        object.__setattr__(
            self, "coeff", tuple(sorted((p, c) for p, c in self.coeff if c != 0))
        )

    @classmethod
    def basis(cls, i: int, j: int) -> "WedgeVector":
        return wedge_vector_of([((i, j), 1)])

    def as_dict(self) -> dict[Pair, int]:
        return dict(self.coeff)

    def get(self, i: int, j: int) -> int:
        if i > j:
            return -self.get(j, i)
        return self.as_dict().get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.coeff

    def support(self) -> tuple[Pair, ...]:
        return tuple(p for p, _ in self.coeff)

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        total = self.as_dict()
        for p, c in other.coeff:
            total[p] = total.get(p, 0) + c
        return WedgeVector(tuple(total.items()))

    def __neg__(self) -> "WedgeVector":
        return WedgeVector(tuple((p, -c) for p, c in self.coeff))

    def __sub__(self, other: "WedgeVector") -> "WedgeVector":
        return self + (-other)

    def __mul__(self, k: int) -> "WedgeVector":
        return WedgeVector(tuple((p, k * c) for p, c in self.coeff))

    __rmul__ = __mul__

    def as_vector(self, n: int) -> np.ndarray:
        """Dense coordinates over all i < j <= n, lexicographic."""
        index = {p: k for k, p in enumerate(wedge_pairs(n))}
        out = np.zeros(len(index), dtype=object)
        for p, c in self.coeff:
            out[index[p]] = c
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*(e{i}^e{j})" for (i, j), c in self.coeff)


def wedge_pairs(n: int) -> list[Pair]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def wedge_vector_of(terms) -> WedgeVector:
    """Sum of c * (i ^ j); reversed pairs flip sign and i ^ i vanishes."""
    total: dict[Pair, int] = {}
    for (i, j), c in terms:
        if i == j:
            continue
        if i > j:
            i, j, c = j, i, -c
        total[(i, j)] = total.get((i, j), 0) + c
    return WedgeVector(tuple(total.items()))


def wedge_of(u, v) -> WedgeVector:
    """u ^ v for integer vectors u, v indexed 0..n-1."""
    n = len(u)
    return wedge_vector_of(
        ((i + 1, j + 1), u[i] * v[j] - u[j] * v[i])
        for i in range(n) for j in range(i + 1, n)
    )


def wedge_image(w: Word) -> WedgeVector:
    """Image of w in [F,F]/[F,[F,F]] on the basis [a_i, a_j], i < j."""
    m = magnus2(w)
    if m.ab.any():
        raise NotInCommutatorError(
            f"word is not in [F,F]: exponent sums {m.ab.tolist()}"
        )
    n = w.n
    return WedgeVector(tuple(
        ((i + 1, j + 1), m.deg2[i, j])
        for i in range(n) for j in range(i + 1, n)
    ))


def class2_trivial(w: Word) -> bool:
    """True iff w maps to 1 in F/[F,[F,F]]."""
    return magnus2(w).is_one()
