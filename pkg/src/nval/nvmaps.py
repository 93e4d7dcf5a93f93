"""Affine-linear n-valued torus maps and composites of them.

A piece (m, A, u) on T^q has lifts

    f^k(t) = (A t + k c) / m + u,    k = 1, ..., m,

with c the all-ones vector. It defines an m-valued map exactly when all rows
of A agree mod m; the common row residue is stored as ``residues``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import exactlin as el
from .errors import CollisionBetweenPieces, InternalInconsistency, RowCongruenceViolation


@dataclass(frozen=True)
class LinearPiece:
    """An m-valued affine-linear self-map of T^q.

    Construction validates the row condition and reduces the shift into
    [0,1)^q, so two pieces that differ by an integer shift compare equal.
    """

    m: int
    A: tuple
    u: tuple = None
    residues: tuple = field(init=False, compare=False)

    def __post_init__(self):
        A = el.as_matrix(self.A)
        q = len(A)
        if len(A[0]) != q:
            raise ValueError(f"A must be square, got {q}x{len(A[0])}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for r in A for x in r):
            raise TypeError("A must have integer entries")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {self.m!r}")
        u = (0,) * q if self.u is None else tuple(self.u)
        if len(u) != q:
            raise ValueError(f"shift has length {len(u)}, expected {q}")
        m = self.m
        first = tuple(x % m for x in A[0])
        for j, row in enumerate(A[1:], start=2):
            for col, (a, r) in enumerate(zip(row, first), start=1):
                if a % m != r:
                    raise RowCongruenceViolation(1, j, col, m)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "u", el.torus_point(u))
        object.__setattr__(self, "residues", first)

    @property
    def q(self) -> int:
        return len(self.A)

    def lift(self, k: int, t: Sequence) -> tuple[Fraction, ...]:
        """The unreduced lift f^k(t) in R^q."""
        m = self.m
        return tuple(
            Fraction(a + k, m) + ui
            for a, ui in zip(el.matvec(self.A, [Fraction(x) for x in t]), self.u)
        )

    def values(self, t: Sequence) -> list[tuple[Fraction, ...]]:
        """Torus values f^1(t), ..., f^m(t) in lift order."""
        return [el.torus_point(self.lift(k, t)) for k in range(1, self.m + 1)]

    def __repr__(self):
        u = ", ".join(str(x) for x in self.u)
        return f"LinearPiece(m={self.m}, A={[list(r) for r in self.A]}, u=({u}))"


def validate_piece(q: int, m: int, A, u=None) -> LinearPiece:
    piece = LinearPiece(m, A, u)
    if piece.q != q:
        raise ValueError(f"A is {piece.q}x{piece.q}, expected {q}x{q}")
    return piece


@dataclass(frozen=True)
class Collision:
    """Lifts k1 of the first piece and k2 of the second agree mod Z^q at t."""

    t: tuple
    k1: int
    k2: int
    z: tuple

    def __str__(self):
        t = ", ".join(str(x) for x in self.t)
        return f"lift {self.k1} meets lift {self.k2} at t = ({t})"


def pairwise_disjoint(p1: LinearPiece, p2: LinearPiece) -> Optional[Collision]:
    """Check that two pieces never share a value.

    Returns None when the pieces are disjoint everywhere, otherwise the first
    colliding lift pair (k1, k2) in lexicographic order with its witness.
    """
    if p1.q != p2.q:
        raise ValueError(f"dimension mismatch: {p1.q} vs {p2.q}")
    C = el.sub(el.scale(p1.A, Fraction(1, p1.m)), el.scale(p2.A, Fraction(1, p2.m)))
    for k1 in range(1, p1.m + 1):
        for k2 in range(1, p2.m + 1):
            shift = Fraction(k1, p1.m) - Fraction(k2, p2.m)
            w = [shift + a - b for a, b in zip(p1.u, p2.u)]
            hit = el.affine_lattice_hit(C, w)
            if hit is not None:
                return Collision(hit.t, k1, k2, hit.z)
    return None


@dataclass(frozen=True)
class CompositeMap:
    """A union of pieces forming one n-valued map on T^q.

    Build through :func:`validate_composite` unless the pieces are known to
    be disjoint by construction.
    """

    pieces: tuple

    def __post_init__(self):
        pieces = tuple(self.pieces)
        if not pieces:
            raise ValueError("a composite map needs at least one piece")
        if len({p.q for p in pieces}) != 1:
            raise ValueError("pieces live on tori of different dimension")
        object.__setattr__(self, "pieces", pieces)

    @property
    def q(self) -> int:
        return self.pieces[0].q

    @property
    def n(self) -> int:
        return sum(p.m for p in self.pieces)

    @property
    def index_to_piece(self) -> tuple[int, ...]:
        """0-based owning piece of each global lift index 1..n."""
        return tuple(i for i, p in enumerate(self.pieces) for _ in range(p.m))

    def lift_values(self, t: Sequence) -> list[tuple[Fraction, ...]]:
        """All n torus values in global lift order (piece blocks, then k)."""
        return [v for p in self.pieces for v in p.values(t)]


def validate_composite(pieces: Iterable[LinearPiece]) -> CompositeMap:
    f = CompositeMap(tuple(pieces))
    for i, p in enumerate(f.pieces):
        for j in range(i + 1, len(f.pieces)):
            hit = pairwise_disjoint(p, f.pieces[j])
            if hit is not None:
                raise CollisionBetweenPieces(i + 1, j + 1, hit)
    return f


def evaluate(f: CompositeMap, t: Sequence) -> list[tuple[Fraction, ...]]:
    """The n points of f(t), sorted."""
    if len(t) != f.q:
        raise ValueError(f"point has length {len(t)}, expected {f.q}")
    pts = sorted(set(f.lift_values(t)))
    if len(pts) != f.n:
        raise InternalInconsistency(
            f"f({tuple(str(x) for x in t)}) has {len(pts)} distinct values, expected {f.n}"
        )
    return pts


def single(m: int, A, u=None) -> CompositeMap:
    """Shorthand for the one-piece map (m, A, u)."""
    return CompositeMap((LinearPiece(m, A, u),))
