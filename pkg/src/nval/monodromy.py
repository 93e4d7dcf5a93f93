"""Monodromy permutations, their orbits, and the irreducible partition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .nvmaps import CompositeMap, LinearPiece


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n}; ``images[i - 1]`` is the image of i."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(i) = p(q(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element."""
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class MonodromyData:
    """Generator permutations sigma_{e_1}, ..., sigma_{e_q} of a composite map.

    ``index_to_piece[i - 1]`` is the 0-based piece owning global index i.
    """

    generators: tuple
    index_to_piece: tuple

    @property
    def n(self) -> int:
        return len(self.index_to_piece)

    @property
    def orbit_partition(self) -> list[tuple[int, ...]]:
        return orbits(self)


def _piece_generator_images(piece: LinearPiece, j: int, offset: int) -> list[int]:
    m, l = piece.m, piece.residues[j]
    # k -> k + l_j, representatives in 1..m
    return [offset + (k - 1 + l) % m + 1 for k in range(1, m + 1)]


def sigma_generators(f: CompositeMap) -> MonodromyData:
    """Block permutations k -> k + l_j inside each piece's index range.

    Shifts play no part: they translate all lifts of a piece equally.
    """
    gens = []
    for j in range(f.q):
        images, offset = [], 0
        for piece in f.pieces:
            images += _piece_generator_images(piece, j, offset)
            offset += piece.m
        gens.append(Permutation(tuple(images)))
    return MonodromyData(tuple(gens), f.index_to_piece)


def orbits(data) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``data.generators`` (or a sequence of
    permutations), ordered by least element, each sorted."""
    gens = data.generators if isinstance(data, MonodromyData) else tuple(data)
    if not gens:
        raise ValueError("need at least one permutation")
    n = gens[0].n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(1, n + 1):
            a, b = find(i), find(g(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        blocks.setdefault(find(i), []).append(i)
    return [tuple(b) for _, b in sorted(blocks.items())]


def piece_gcd(piece: LinearPiece) -> int:
    """gcd(m, l_1, ..., l_q); equals m when every residue is zero."""
    return reduce(math.gcd, piece.residues, piece.m)


def split_piece(piece: LinearPiece) -> list[LinearPiece]:
    """Irreducible sub-pieces of a single piece.

    With g = piece_gcd(piece), lift k = s*g + r of (m, A, u) equals lift s of
    (m/g, A/g, u + (r/m) c), so the residue classes of k mod g give g pieces.
    """
    g = piece_gcd(piece)
    if g == 1:
        return [piece]
    m = piece.m // g
    A = tuple(tuple(a // g for a in row) for row in piece.A)
    return [
        LinearPiece(m, A, tuple(ui + Fraction(r, piece.m) for ui in piece.u))
        for r in range(g)
    ]


def irreducible_partition(f: CompositeMap) -> CompositeMap:
    return CompositeMap(tuple(sub for p in f.pieces for sub in split_piece(p)))


def partition_sources(f: CompositeMap) -> list[int]:
    """0-based input piece behind each piece of irreducible_partition(f)."""
    return [i for i, p in enumerate(f.pieces) for _ in range(piece_gcd(p))]


def is_split(f: CompositeMap) -> bool:
    return all(piece_gcd(p) == p.m for p in f.pieces)


def is_irreducible(f: CompositeMap) -> bool:
    return len(orbits(sigma_generators(f))) == 1
