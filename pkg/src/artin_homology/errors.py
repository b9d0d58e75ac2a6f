"""Error types shared across the package."""


class ArtinHomologyError(Exception):
    """Base error carrying a stable machine-readable code."""

    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        self.message = message
        if code is not None:
            self.code = code
        super().__init__(message)


class MatrixSyntaxError(ArtinHomologyError):
    """Malformed matrix document, word or relator-product file."""

    code = "SYNTAX_ERROR"

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        self.detail = message
        super().__init__(f"line {line}, column {column}: {message}")


class MatrixValidationError(ArtinHomologyError):
    """Well-formed input that is not a Coxeter matrix."""

    code = "INVALID_MATRIX"


class OddLabelError(ArtinHomologyError):
    """A finite off-diagonal label is odd."""

    code = "ODD_LABEL"

    def __init__(self, i: int, j: int, label: int):
        self.pair = (i, j)
        self.label = label
        super().__init__(f"odd label at ({i},{j}): m={label}")


class PairNotInBError(ArtinHomologyError):
    """A pair (i,j) was required to lie in B."""

    code = "PAIR_NOT_IN_B"

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"pair ({i},{j}) is not in B")


class NotInCommutatorError(ArtinHomologyError):
    """A word with nonzero abelianization where [F,F] was required."""

    code = "NOT_IN_COMMUTATOR"


class WarrantViolationError(ArtinHomologyError):
    """A caller-warranted relator word fails the wedge divisibility test."""

    code = "WARRANT_VIOLATED"


class NonCommutingError(ArtinHomologyError):
    """Elements required to commute do not."""

    code = "NOT_COMMUTING"


class GroupTableError(ArtinHomologyError):
    """A multiplication table violating the group axioms."""

    code = "INVALID_GROUP"


class ResourceLimitError(ArtinHomologyError):
    """A configured resource cap was exceeded."""

    code = "RESOURCE_LIMIT"

    def __init__(self, message: str, limit_name: str, limit: int):
        self.limit_name = limit_name
        self.limit = limit
        super().__init__(f"{message} ({limit_name}={limit})")
