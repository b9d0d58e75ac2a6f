"""Coxeter matrices: parsing, validation and the even half-label presentation.

Document format (sparse form is canonical)::

    # comment
    n=3
    1 2 4
    1 3 inf
    2 3 2

Pairs that do not appear are infinite. ``n=<k> full`` switches to the
full-matrix form, one row of k labels per line. ``;`` separates lines too,
so ``n=2; 1 2 4`` is a complete document.

Labels are ints; infinity is ``None`` throughout the API.
"""

from dataclasses import dataclass, field

from pyparsing import (
    CaselessKeyword,
    Group,
    Literal,
    OneOrMore,
    Optional,
    ParseException,
    Suppress,
    Word,
    nums,
)

from artin_homology.errors import (
    MatrixSyntaxError,
    MatrixValidationError,
    OddLabelError,
)

Pair = tuple[int, int]

_INT = Word(nums).set_parse_action(lambda t: int(t[0]))
_INF = CaselessKeyword("inf")
_LABEL = _INF | _INT

HEADER = Suppress(Literal("n")) + Suppress("=") + _INT("n") + Optional(CaselessKeyword("full"))("full")
TRIPLE = _INT("i") + _INT("j") + _LABEL("m")
ROW = Group(OneOrMore(_LABEL))("row")


@dataclass(frozen=True)
class CoxeterMatrix:
    """A validated Coxeter matrix over [n].

    ``labels`` holds the finite off-diagonal entries above the diagonal,
    sorted by pair; everything else off the diagonal is infinite.
    """
    n: int
    labels: tuple[tuple[Pair, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise MatrixValidationError(f"n must be positive, got {self.n}")
        seen = set()
        for (i, j), m in self.labels:
            if not (1 <= i < j <= self.n):
                raise MatrixValidationError(f"pair ({i},{j}) outside 1 <= i < j <= {self.n}")
            if (i, j) in seen:
                raise MatrixValidationError(f"pair ({i},{j}) given twice")
            if m < 2:
                raise MatrixValidationError(f"off-diagonal label < 2 at ({i},{j}): m={m}")
            seen.add((i, j))
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @classmethod
    def from_labels(cls, n: int, labels: dict[Pair, int | None]) -> "CoxeterMatrix":
        """Build from a pair -> label map; pairs may be given in either order."""
        normalized = {}
        for (i, j), m in labels.items():
            if i == j:
                if m != 1:
                    raise MatrixValidationError(f"diagonal entry ({i},{i}) must be 1, got {m}")
                continue
            key = (min(i, j), max(i, j))
            if key in normalized and normalized[key] != m:
                raise MatrixValidationError(f"symmetry violation at {key}")
            normalized[key] = m
        return cls(n, tuple((k, m) for k, m in normalized.items() if m is not None))

    def m(self, i: int, j: int) -> int | None:
        """Label m(i,j); None means infinity."""
        if i == j:
            return 1
        key = (min(i, j), max(i, j))
        return dict(self.labels).get(key)


@dataclass(frozen=True)
class EvenPresentation:
    """Half-labels n(i,j) = m(i,j)/2 of an even Coxeter matrix, and B."""
    n: int
    half_labels: tuple[tuple[Pair, int], ...] = ()
    B: tuple[Pair, ...] = field(init=False)

    def __post_init__(self):
        pairs = tuple(sorted(self.half_labels))
        for (i, j), h in pairs:
            if not (1 <= i < j <= self.n) or h < 1:
                raise MatrixValidationError(f"bad half-label {h} at ({i},{j})")
        object.__setattr__(self, "half_labels", pairs)
        object.__setattr__(self, "B", tuple(p for p, _ in pairs))

    def half_label(self, i: int, j: int) -> int | None:
        """n(i,j) for i != j, symmetric; None means infinity."""
        if i == j:
            return None
        return dict(self.half_labels).get((min(i, j), max(i, j)))

    def m(self, i: int, j: int) -> int | None:
        if i == j:
            return 1
        h = self.half_label(i, j)
        return None if h is None else 2 * h

    def matrix(self) -> CoxeterMatrix:
        return CoxeterMatrix(self.n, tuple((p, 2 * h) for p, h in self.half_labels))


def _segments(text: str):
    """Yield (line_no, column_offset, segment) for each non-blank logical line."""
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        offset = 0
        for part in line.split(";"):
            if part.strip():
                yield line_no, offset, part
            offset += len(part) + 1


def _label(token) -> int | None:
    return None if token == "inf" else token


def _parse_segment(grammar, line_no: int, offset: int, segment: str):
    try:
        return grammar.parse_string(segment, parse_all=True)
    except ParseException as e:
        raise MatrixSyntaxError(e.msg, line_no, offset + e.col)


def parse_matrix(text: str) -> CoxeterMatrix:
    """Parse and validate a matrix document."""
    segments = list(_segments(text))
    if not segments:
        raise MatrixSyntaxError("empty document, expected header 'n=<k>'", 1, 1)

    line_no, offset, segment = segments[0]
    header = _parse_segment(HEADER, line_no, offset, segment)
    n = header["n"]
    if n < 1:
        raise MatrixValidationError(f"n must be positive, got {n}")

    if header.get("full"):
        return _parse_full(n, segments[1:])
    return _parse_sparse(n, segments[1:])


def _check_index(i: int, n: int, line_no: int) -> None:
    if not 1 <= i <= n:
        raise MatrixValidationError(f"line {line_no}: index {i} outside [1, {n}]")


def _parse_sparse(n: int, segments) -> CoxeterMatrix:
    labels: dict[Pair, int | None] = {}
    for line_no, offset, segment in segments:
        tokens = _parse_segment(TRIPLE, line_no, offset, segment)
        i, j, m = tokens["i"], tokens["j"], _label(tokens["m"])
        _check_index(i, n, line_no)
        _check_index(j, n, line_no)
        if i == j:
            if m != 1:
                raise MatrixValidationError(f"line {line_no}: diagonal entry ({i},{i}) must be 1, got {m}")
            continue
        if m is not None and m < 2:
            raise MatrixValidationError(f"line {line_no}: off-diagonal label < 2 at ({i},{j}): m={m}")
        key = (min(i, j), max(i, j))
        if key in labels and labels[key] != m:
            raise MatrixValidationError(f"line {line_no}: symmetry violation at {key}")
        labels[key] = m
    return CoxeterMatrix(n, tuple((k, m) for k, m in labels.items() if m is not None))


def _parse_full(n: int, segments) -> CoxeterMatrix:
    if len(segments) != n:
        line_no = segments[-1][0] if segments else 1
        raise MatrixSyntaxError(f"expected {n} rows, got {len(segments)}", line_no, 1)

    rows = []
    for line_no, offset, segment in segments:
        row = [_label(t) for t in _parse_segment(ROW, line_no, offset, segment)["row"]]
        if len(row) != n:
            raise MatrixSyntaxError(f"expected {n} labels, got {len(row)}", line_no, offset + 1)
        rows.append(row)

    labels = []
    for i in range(n):
        if rows[i][i] != 1:
            raise MatrixValidationError(f"diagonal entry ({i + 1},{i + 1}) must be 1, got {rows[i][i]}")
        for j in range(i + 1, n):
            m = rows[i][j]
            if m != rows[j][i]:
                raise MatrixValidationError(f"symmetry violation at ({i + 1},{j + 1})")
            if m is None:
                continue
            if m < 2:
                raise MatrixValidationError(f"off-diagonal label < 2 at ({i + 1},{j + 1}): m={m}")
            labels.append(((i + 1, j + 1), m))
    return CoxeterMatrix(n, tuple(labels))


def _label_text(m: int | None) -> str:
    return "inf" if m is None else str(m)


def serialize(cm: CoxeterMatrix, full: bool = False) -> str:
    """Canonical document for ``cm``; round-trips through parse_matrix."""
    if not full:
        lines = [f"n={cm.n}"]
        lines.extend(f"{i} {j} {m}" for (i, j), m in cm.labels)
        return "\n".join(lines) + "\n"

    lines = [f"n={cm.n} full"]
    for i in range(1, cm.n + 1):
        lines.append(" ".join(_label_text(cm.m(i, j)) for j in range(1, cm.n + 1)))
    return "\n".join(lines) + "\n"


def to_even(cm: CoxeterMatrix) -> EvenPresentation:
    """Halve every finite label; odd labels are rejected."""
    half = []
    for (i, j), m in cm.labels:
        if m % 2:
            raise OddLabelError(i, j, m)
        half.append(((i, j), m // 2))
    return EvenPresentation(cm.n, tuple(half))


def even_presentation(text: str) -> EvenPresentation:
    return to_even(parse_matrix(text))


def is_right_angled(p: EvenPresentation) -> bool:
    """Every finite label is 2."""
    return all(h == 1 for _, h in p.half_labels)


def to_record(cm: CoxeterMatrix) -> dict:
    """Structured form; infinite pairs are absent."""
    return {
        "n": cm.n,
        "labels": [{"i": i, "j": j, "m": m} for (i, j), m in cm.labels],
    }


def from_record(record: dict) -> CoxeterMatrix:
    return CoxeterMatrix.from_labels(
        record["n"],
        {(e["i"], e["j"]): e["m"] for e in record.get("labels", [])},
    )
