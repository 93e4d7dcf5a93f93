"""Exception types shared across the package."""


class NvalError(Exception):
    """Base class for every error raised by nval."""


class DegenerateMatrix(NvalError, ValueError):
    """A square matrix has determinant zero where a finite answer needs it."""


class RowCongruenceViolation(NvalError, ValueError):
    """Two rows of a piece matrix differ modulo the multiplicity.

    Rows and columns are reported 1-based.
    """

    def __init__(self, i, j, column, m):
        self.i, self.j, self.column, self.m = i, j, column, m
        super().__init__(
            f"rows {i} and {j} of A are not congruent mod {m} (column {column})"
        )


class CollisionBetweenPieces(NvalError, ValueError):
    """Two pieces of a composite share a value somewhere (1-based indices)."""

    def __init__(self, i, j, witness):
        self.i, self.j, self.witness = i, j, witness
        super().__init__(f"pieces {i} and {j} collide: {witness}")


class DegeneratePiece(NvalError, ValueError):
    """det(m*I - A) = 0 for the piece at 1-based index ``i``."""

    def __init__(self, i):
        self.i = i
        super().__init__(f"piece {i} has det(mI - A) = 0; fixed point set is infinite")


class ResolutionTooCoarse(NvalError, RuntimeError):
    def __init__(self, step, cost, margin):
        self.step, self.cost, self.margin = step, cost, margin
        super().__init__(
            f"matching at step {step} moved {cost:.3g}, margin is {margin:.3g}; "
            "retry with more samples"
        )


class InternalInconsistency(NvalError, AssertionError):
    """An invariant that validation should guarantee was found broken."""
