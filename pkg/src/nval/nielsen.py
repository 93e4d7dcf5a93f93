"""Nielsen numbers of linear pieces and composites, and exact fixed points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as el
from .errors import DegeneratePiece, InternalInconsistency
from .monodromy import irreducible_partition, partition_sources
from .nvmaps import CompositeMap, LinearPiece


def _char_det(piece: LinearPiece) -> int:
    """det(m I - A)."""
    m, q = piece.m, piece.q
    return el.det(tuple(
        tuple(m * (i == j) - piece.A[i][j] for j in range(q)) for i in range(q)
    ))


def fixed_point_index(piece: LinearPiece) -> int:
    """Common index sign(det(I - A/m)) of the piece's fixed points (0 if degenerate)."""
    d = _char_det(piece)
    return (d > 0) - (d < 0)


def nielsen_linear(piece: LinearPiece) -> int:
    """m |det(I - A/m)| = |det(m I - A)| / m^(q-1). The shift is irrelevant."""
    d = _char_det(piece)
    denom = piece.m ** (piece.q - 1)
    if d % denom:
        raise InternalInconsistency(
            f"m^(q-1) = {denom} does not divide det(mI - A) = {d} for {piece!r}"
        )
    return abs(d) // denom


@dataclass(frozen=True)
class NielsenReport:
    """Per-piece Nielsen numbers of the irreducible partition.

    ``per_piece`` pairs each irreducible piece with its Nielsen number;
    ``sources`` gives the 0-based input piece each came from.
    """

    per_piece: tuple
    sources: tuple
    total: int
    lefschetz: int

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(N for _, N in self.per_piece)


def nielsen_composite(f: CompositeMap) -> NielsenReport:
    parts = irreducible_partition(f)
    per_piece = tuple((p, nielsen_linear(p)) for p in parts.pieces)
    lefschetz = sum(fixed_point_index(p) * N for p, N in per_piece)
    return NielsenReport(
        per_piece=per_piece,
        sources=tuple(partition_sources(f)),
        total=sum(N for _, N in per_piece),
        lefschetz=lefschetz,
    )


@dataclass(frozen=True, order=True)
class FixedPointRecord:
    piece: int          # 0-based index into the map's pieces
    point: tuple        # in [0,1)^q
    lift_k: int
    fp_index: int


def piece_fixed_points(piece: LinearPiece, piece_index: int = 0) -> list[FixedPointRecord]:
    """Fixed points of one piece.

    t is fixed by lift k exactly when (m I - A) t = k c + m u (mod m Z^q),
    with t taken in [0,1)^q.
    """
    m, q = piece.m, piece.q
    d = _char_det(piece)
    if d == 0:
        raise DegeneratePiece(piece_index + 1)
    M = tuple(tuple(m * (i == j) - piece.A[i][j] for j in range(q)) for i in range(q))
    sign = 1 if d > 0 else -1
    out = []
    for k in range(1, m + 1):
        b = [k + m * ui for ui in piece.u]
        for t in el.solve_torus_congruence(M, b, m):
            out.append(FixedPointRecord(piece_index, t, k, sign))
    return sorted(out)


def fixed_points(f: CompositeMap) -> list[FixedPointRecord]:
    """Every fixed point of f, sorted by (piece, point)."""
    degenerate = [i for i, p in enumerate(f.pieces) if _char_det(p) == 0]
    if degenerate:
        raise DegeneratePiece(degenerate[0] + 1)
    records = [r for i, p in enumerate(f.pieces) for r in piece_fixed_points(p, i)]
    return sorted(records)


def lefschetz_number(records) -> int:
    return sum(r.fp_index for r in records)


def is_fixed(f: CompositeMap, t) -> bool:
    t = tuple(Fraction(x) for x in t)
    return t in set(f.lift_values(t))
