"""Free-group words over a_1..a_n (or s_1..s_n) and the even-Artin relators.

A word is a tuple of signed generator indices: +i is a_i, -i is a_i^-1.
Every constructor freely reduces, so equality of Word objects is equality
in the free group.
"""

from dataclasses import dataclass

from pyparsing import (
    Combine,
    Literal,
    Optional,
    ParseException,
    Regex,
    Word as Token,
    ZeroOrMore,
    nums,
)

from artin_homology.coxmat import EvenPresentation
from artin_homology.errors import MatrixSyntaxError, PairNotInBError, ResourceLimitError

DEFAULT_MAX_K = 12


def free_reduce(letters) -> tuple[int, ...]:
    """Cancel adjacent x x^-1 pairs until none remain."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Reduced word in the free group of rank n."""
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.n:
                raise ValueError(f"letter {x} outside alphabet of size {self.n}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def identity(cls, n: int) -> "Word":
        return cls((), n)

    @classmethod
    def generator(cls, i: int, n: int) -> "Word":
        return cls((i,), n)

    def _check_alphabet(self, other: "Word") -> None:
        if self.n != other.n:
            raise ValueError(f"alphabet mismatch: {self.n} != {other.n}")

    def __mul__(self, other: "Word") -> "Word":
        self._check_alphabet(other)
        return Word(self.letters + other.letters, self.n)

    def __invert__(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)), self.n)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return (~self) ** -k
        # reduced words need not be cyclically reduced, so multiply stepwise
        result = Word.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def abelianization(self) -> tuple[int, ...]:
        """Exponent sums, indexed 0..n-1."""
        sums = [0] * self.n
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(sums)


def reduce(w: Word) -> Word:
    """Free-group normal form; Word is already reduced, so this is idempotent."""
    return Word(free_reduce(w.letters), w.n)


def commutator(g: Word, h: Word) -> Word:
    """[g,h] = g h g^-1 h^-1."""
    return g * h * ~g * ~h


def alt(g: Word, h: Word, m: int) -> Word:
    """(gh)_m: the alternating product g h g h ... with m factors."""
    if m < 1:
        raise ValueError(f"alternating length must be >= 1, got {m}")
    result = Word.identity(g.n)
    for k in range(m):
        result = result * (g if k % 2 == 0 else h)
    return result


def _half_label_in_b(i: int, j: int, p: EvenPresentation) -> int:
    if i >= j or (i, j) not in p.B:
        raise PairNotInBError(i, j)
    return p.half_label(i, j)


def relator(i: int, j: int, p: EvenPresentation) -> Word:
    """r_ij = (a_i a_j)^n(i,j) (a_j a_i)^-n(i,j)."""
    k = _half_label_in_b(i, j, p)
    a_i, a_j = Word.generator(i, p.n), Word.generator(j, p.n)
    return (a_i * a_j) ** k * ((a_j * a_i) ** k) ** -1


def w_lemma(a: Word, b: Word, k: int, max_k: int = DEFAULT_MAX_K) -> Word:
    """w_k with w_1 = 1 and w_{k+1} = [ab, w_k [a,b]^k] w_k.

    Satisfies (ab)^k (ba)^-k = w_k [a,b]^k. Lengths grow roughly threefold per
    step, hence the cap.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > max_k:
        raise ResourceLimitError(f"w_{k} requested", "max_k", max_k)

    ab = a * b
    ab_comm = commutator(a, b)
    w = Word.identity(a.n)
    for step in range(1, k):
        w = commutator(ab, w * ab_comm ** step) * w
    return w


def comm_rel_pair(i: int, j: int, p: EvenPresentation) -> tuple[Word, Word]:
    """(a_i, (a_j a_i)_{2n(i,j)-1}); their commutator is exactly r_ij."""
    k = _half_label_in_b(i, j, p)
    a_i, a_j = Word.generator(i, p.n), Word.generator(j, p.n)
    return a_i, alt(a_j, a_i, 2 * k - 1)


def coxeter_relators(p: EvenPresentation) -> list[Word]:
    """s_i^2 for every i, then r'_ij for (i,j) in B, over the s-alphabet."""
    relators = [Word((i, i), p.n) for i in range(1, p.n + 1)]
    relators.extend(relator(i, j, p) for i, j in p.B)
    return relators


def substitute(w: Word, images: dict[int, Word]) -> Word:
    """Image of w under the homomorphism a_i -> images[i]."""
    if not images:
        raise ValueError("substitute needs at least one generator image")
    target_n = next(iter(images.values())).n
    result = Word.identity(target_n)
    for x in w.letters:
        image = images[abs(x)]
        result = result * (image if x > 0 else ~image)
    return result


def _token_grammar(letter: str):
    exponent = Optional(Literal("^").suppress() + Regex(r"-?\d+"))
    return Combine(Literal(letter).suppress() + Token(nums))("gen") + exponent("exp")


def parse_word(text: str, n: int, letter: str = "a") -> Word:
    """Parse whitespace-separated tokens such as ``a3 a1^-1``; ``1`` or blank is the identity."""
    stripped = text.strip()
    if stripped in ("", "1"):
        return Word.identity(n)

    token = _token_grammar(letter)
    grammar = ZeroOrMore(token.copy().set_parse_action(lambda t: [(int(t[0]), int(t[1]) if len(t) > 1 else 1)]))
    try:
        tokens = grammar.parse_string(stripped, parse_all=True)
    except ParseException as e:
        raise MatrixSyntaxError(e.msg, e.lineno, e.col)

    letters: list[int] = []
    for gen, exp in tokens:
        if not 1 <= gen <= n:
            raise MatrixSyntaxError(f"generator {letter}{gen} outside alphabet of size {n}", 1, 1)
        if exp == 0:
            continue
        letters.extend([gen if exp > 0 else -gen] * abs(exp))
    return Word(tuple(letters), n)


def format_word(w: Word, letter: str = "a") -> str:
    """Inverse of parse_word; the identity prints as ``1``."""
    if w.is_identity():
        return "1"
    return " ".join(f"{letter}{x}" if x > 0 else f"{letter}{-x}^-1" for x in w.letters)
