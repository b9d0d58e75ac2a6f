"""Explicit finite groups as multiplication tables.

Elements are the indices 0..order-1. A GroupTable optionally carries the
images of presentation generators s_1..s_n, so words can be evaluated.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from artin_homology.errors import GroupTableError, ResourceLimitError
from artin_homology.words import Word

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class GroupTable:
    """Finite group; construction checks the group axioms."""
    table: np.ndarray
    identity: int = 0
    gens: tuple[int, ...] = ()
    inverses: np.ndarray = None

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        object.__setattr__(self, "table", table)
        order = table.shape[0]
        if table.shape != (order, order) or order < 1:
            raise GroupTableError(f"table must be square, got shape {table.shape}")
        if table.min() < 0 or table.max() >= order:
            raise GroupTableError("table entries outside 0..order-1")

        e = self.identity
        elements = np.arange(order)
        if not ((table[e] == elements).all() and (table[:, e] == elements).all()):
            raise GroupTableError(f"element {e} is not a two-sided identity")

        # (ab)c == a(bc) for all triples at once
        left = table[table]
        right = table[elements[:, None, None], table[None, :, :]]
        if not (left == right).all():
            raise GroupTableError("multiplication is not associative")

        hits = np.argwhere(table == e)
        if len(np.unique(hits[:, 0])) != order:
            raise GroupTableError("some element has no inverse")
        inverses = np.empty(order, dtype=np.int64)
        inverses[hits[:, 0]] = hits[:, 1]
        object.__setattr__(self, "inverses", inverses)

        for g in self.gens:
            if not 0 <= g < order:
                raise GroupTableError(f"generator image {g} outside the group")
        object.__setattr__(self, "gens", tuple(int(g) for g in self.gens))

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def elements(self) -> range:
        return range(self.order)

    def commute(self, a: int, b: int) -> bool:
        return self.table[a, b] == self.table[b, a]

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @classmethod
    def from_function(cls, order: int, op, identity: int = 0, gens=()) -> "GroupTable":
        table = np.array([[op(a, b) for b in range(order)] for a in range(order)], dtype=np.int64)
        return cls(table, identity, tuple(gens))


def dihedral(k: int) -> GroupTable:
    """Dihedral group of order 4k: W_M for n=2, m(1,2)=2k.

    Element r^a s^b is index a + 2k*b; s_1 = s and s_2 = s r, so s_1 s_2 = r
    has order 2k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    m = 2 * k

    def op(x: int, y: int) -> int:
        a, b = x % m, x // m
        c, d = y % m, y // m
        return (a + (c if b == 0 else -c)) % m + m * (b ^ d)

    s = m
    return GroupTable.from_function(2 * m, op, 0, (s, op(s, 1)))


def elementary_abelian(k: int) -> GroupTable:
    """(Z/2)^k with bitwise xor; generator i is bit i-1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return GroupTable.from_function(2 ** k, lambda a, b: a ^ b, 0, tuple(1 << i for i in range(k)))


def direct_product(G: GroupTable, H: GroupTable, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """G x H with (g, h) at index g*|H| + h; generators of G come first."""
    order = G.order * H.order
    if order > max_order:
        raise ResourceLimitError(f"direct product of order {order}", "max_order", max_order)
    table = (G.table[:, None, :, None] * H.order + H.table[None, :, None, :]).reshape(order, order)
    gens = tuple(g * H.order + H.identity for g in G.gens)
    gens += tuple(G.identity * H.order + h for h in H.gens)
    return GroupTable(table, G.identity * H.order + H.identity, gens)


def evaluate(G: GroupTable, w: Word) -> int:
    """Image of w under s_i -> G.gens[i-1]."""
    if w.n > len(G.gens):
        raise GroupTableError(f"word over {w.n} generators, group has {len(G.gens)} images")
    x = G.identity
    for letter in w.letters:
        g = G.gens[abs(letter) - 1]
        x = G.mul(x, g if letter > 0 else G.inv(g))
    return x


def order_profile(G: GroupTable) -> tuple[int, ...]:
    """Sorted element orders; equal for isomorphic groups."""
    return tuple(sorted(G.element_order(a) for a in G.elements()))


def save_table(G: GroupTable, path: str | Path) -> None:
    """Write ``order``, ``identity``, ``gens`` headers then one table row per line."""
    lines = [f"order {G.order}", f"identity {G.identity}", "gens " + " ".join(map(str, G.gens))]
    lines.extend(" ".join(map(str, row)) for row in G.table.tolist())
    Path(path).write_text("\n".join(lines) + "\n")


def load_table(path: str | Path) -> GroupTable:
    lines = [line.split() for line in Path(path).read_text().splitlines() if line.strip()]
    try:
        headers = {line[0]: line[1:] for line in lines[:3]}
        order = int(headers["order"][0])
        identity = int(headers["identity"][0])
        gens = tuple(int(g) for g in headers["gens"])
        rows = [[int(x) for x in line] for line in lines[3:]]
    except (KeyError, IndexError, ValueError) as e:
        raise GroupTableError(f"malformed group table file {path}: {e}")
    if len(rows) != order:
        raise GroupTableError(f"expected {order} table rows, got {len(rows)}")
    return GroupTable(np.array(rows, dtype=np.int64), identity, gens)
