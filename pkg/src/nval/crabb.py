"""Finite-valued (covering space) form F/q of a composite map.

An irreducible piece (m, A, u) with residues l has graph cover R^q / Lambda,

    Lambda = { w in Z^q : l . w = 0 (mod m) },

a torus again, and on it the single-valued map F(s) = (A/m) s + u is well
defined because A w = (l . w) c = 0 (mod m) for w in Lambda. Picking a basis
M of Lambda identifies the cover with the standard torus; F then lifts to the
integer matrix B M and q to M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as el
from .monodromy import irreducible_partition, partition_sources
from .nvmaps import CompositeMap, LinearPiece, evaluate


@dataclass(frozen=True)
class CoverComponent:
    M: tuple            # columns: basis of Lambda, column Hermite form
    B: tuple            # linearisation A/m
    v: tuple            # translation, equal to u
    source_piece: int   # 0-based index into the input map's pieces

    @property
    def degree(self) -> int:
        return abs(el.det(self.M))

    def F(self, s) -> tuple[Fraction, ...]:
        """F on the cover, reduced to the base torus."""
        return el.torus_point(a + b for a, b in zip(el.matvec(self.B, s), self.v))


@dataclass(frozen=True)
class FiniteValuedRep:
    q: int
    components: tuple

    @property
    def n(self) -> int:
        return sum(c.degree for c in self.components)


def cover_lattice(piece: LinearPiece) -> tuple:
    """Basis of {w : l . w = 0 mod m} as matrix columns, Hermite-normalised.

    The integer kernel of the row [l | m] projects isomorphically onto it.
    """
    q, m = piece.q, piece.m
    row = (tuple(piece.residues) + (m,),)
    V = el.snf(row).V
    kernel = [tuple(V[r][c] for r in range(q)) for c in range(1, q + 1)]
    return el.hermite_columns(el.transpose(kernel))


def component_for(piece: LinearPiece, source: int) -> CoverComponent:
    M = cover_lattice(piece)
    B = el.scale(piece.A, Fraction(1, piece.m))
    if not all(x.denominator == 1 for row in el.matmul(B, M) for x in row):
        raise AssertionError(f"B M not integral for {piece!r}")
    # sheet k = m: v = u + c, which is u on the torus
    v = el.torus_point(ui + 1 for ui in piece.u)
    return CoverComponent(M, B, v, source)


def to_finite_valued(f: CompositeMap) -> FiniteValuedRep:
    parts = irreducible_partition(f)
    sources = partition_sources(f)
    comps = tuple(component_for(p, s) for p, s in zip(parts.pieces, sources))
    return FiniteValuedRep(f.q, comps)


def nielsen_crabb(rep: FiniteValuedRep) -> int:
    """Sum over components of |det(M_i - B_i M_i)|."""
    total = 0
    for c in rep.components:
        if el.det(c.M) == 0:
            raise el.DegenerateMatrix("cover lattice basis is singular")
        BM = el.matmul(c.B, c.M)
        D = tuple(tuple(int(x) for x in row) for row in el.sub(c.M, BM))
        total += abs(el.det(D))
    return total


def fiber(rep: FiniteValuedRep, t) -> list[tuple[Fraction, ...]]:
    """F applied to every point of q^{-1}(t), component by component."""
    t = tuple(Fraction(x) for x in t)
    out = []
    for c in rep.components:
        for r in el.coset_representatives(c.M):
            out.append(c.F(tuple(a + b for a, b in zip(t, r))))
    return out


def fiber_check(rep: FiniteValuedRep, f: CompositeMap, t) -> bool:
    if rep.q != f.q or len(t) != f.q:
        raise ValueError("dimension mismatch")
    values = fiber(rep, t)
    return len(values) == f.n and sorted(set(values)) == evaluate(f, t)
