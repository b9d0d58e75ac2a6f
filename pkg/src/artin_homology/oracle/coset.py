"""Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy).

Cosets of the trivial subgroup are the group elements, so a completed table
is the right regular action and yields the full multiplication table.
"""

from artin_homology.coxmat import EvenPresentation
from artin_homology.errors import ResourceLimitError
from artin_homology.logging import get_logger
from artin_homology.oracle.groups import GroupTable
from artin_homology.words import coxeter_relators

logger = get_logger("oracle.coset")

DEFAULT_MAX_COSETS = 4096


def _column(x: int) -> int:
    """Table column of the letter x; the inverse letter is column ^ 1."""
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


class CosetTable:
    """Coset table with coincidence handling, after the scan-and-fill method."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ngens = ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * (2 * ngens)]
        self.p: list[int] = [0]  # p[a] == a iff coset a is live

    def is_live(self, a: int) -> bool:
        return self.p[a] == a

    def define(self, alpha: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise ResourceLimitError(
                f"coset enumeration defined {len(self.table)} cosets without closing",
                "max_cosets", self.max_cosets,
            )
        beta = len(self.table)
        self.table.append([None] * (2 * self.ngens))
        self.p.append(beta)
        col = _column(x)
        self.table[alpha][col] = beta
        self.table[beta][col ^ 1] = alpha

    def scan_and_fill(self, alpha: int, word: tuple[int, ...]) -> None:
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][_column(word[i])] is not None:
                f = table[f][_column(word[i])]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][_column(word[j]) ^ 1] is not None:
                b = table[b][_column(word[j]) ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                col = _column(word[i])
                table[f][col] = b
                table[b][col ^ 1] = f
                return
            self.define(f, word[i])

    def rep(self, k: int) -> int:
        root = k
        while self.p[root] != root:
            root = self.p[root]
        while self.p[k] != root:
            self.p[k], k = root, self.p[k]
        return root

    def merge(self, k: int, lam: int, queue: list[int]) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            mu, nu = min(phi, psi), max(phi, psi)
            self.p[nu] = mu
            queue.append(nu)

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: list[int] = []
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.pop(0)
            for col in range(2 * self.ngens):
                delta = table[gamma][col]
                if delta is None:
                    continue
                table[delta][col ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][col] is not None:
                    self.merge(nu, table[mu][col], queue)
                elif table[nu][col ^ 1] is not None:
                    self.merge(mu, table[nu][col ^ 1], queue)
                else:
                    table[mu][col] = nu
                    table[nu][col ^ 1] = mu

    def enumerate(self, relators: list[tuple[int, ...]]) -> None:
        alpha = 0
        while alpha < len(self.table):
            for r in relators:
                if not self.is_live(alpha):
                    break
                self.scan_and_fill(alpha, r)
            if self.is_live(alpha):
                for col in range(2 * self.ngens):
                    if self.table[alpha][col] is None:
                        x = col // 2 + 1
                        self.define(alpha, x if col % 2 == 0 else -x)
            alpha += 1

    def standardized(self) -> tuple[list[list[int]], list[list[int]]]:
        """Live cosets renumbered in breadth-first order from coset 0.

        Returns the representative word of each new coset and the table on
        the new numbering.
        """
        number = {0: 0}
        words: list[list[int]] = [[]]
        order = [0]
        for a in order:
            for col in range(2 * self.ngens):
                b = self.rep(self.table[a][col])
                if b not in number:
                    number[b] = len(order)
                    order.append(b)
                    x = col // 2 + 1
                    words.append(words[number[a]] + [x if col % 2 == 0 else -x])
        table = [[number[self.rep(self.table[a][col])] for col in range(2 * self.ngens)] for a in order]
        return words, table


def todd_coxeter(p: EvenPresentation, max_cosets: int = DEFAULT_MAX_COSETS) -> GroupTable:
    """Enumerate W_M from s_i^2 and the even braid relators.

    Raises ResourceLimitError when the table does not close within max_cosets;
    that says nothing about whether W_M is infinite.
    """
    if max_cosets < 1:
        raise ValueError(f"max_cosets must be >= 1, got {max_cosets}")
    relators = [w.letters for w in coxeter_relators(p)]
    ct = CosetTable(p.n, max_cosets)
    ct.enumerate(relators)
    words, table = ct.standardized()
    order = len(words)
    logger.debug(f"todd_coxeter: {len(ct.table)} cosets defined, order {order}")

    # right regular action: g_a * g_b is coset a acted on by the word of b
    mul = [[0] * order for _ in range(order)]
    for a in range(order):
        for b in range(order):
            c = a
            for x in words[b]:
                c = table[c][_column(x)]
            mul[a][b] = c
    gens = tuple(table[0][_column(i)] for i in range(1, p.n + 1))
    return GroupTable.from_function(order, lambda a, b: mul[a][b], 0, gens)

