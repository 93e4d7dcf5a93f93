"""Finite-valued cover representation F/q.

Each irreducible piece becomes a single-valued affine map F(s) = B s + v on
a torus covering the base through s -> M s. Its fiber recovers the original
values, and the determinant terms add up to the Nielsen number.
"""

from fractions import Fraction

from nval import fiber_check, load_map, nielsen_composite, nielsen_crabb, to_finite_valued
from nval.crabb import fiber


def show(title, f):
    print(f"== {title}")
    rep = to_finite_valued(f)
    for i, c in enumerate(rep.components, start=1):
        print(f"component {i} (from piece {c.source_piece + 1}), degree {c.degree}")
        print("  M =", [list(r) for r in c.M])
        print("  B =", [[str(x) for x in r] for r in c.B], " v =", [str(x) for x in c.v])
    t = (Fraction(2, 7), Fraction(5, 11))
    print("fiber over", tuple(map(str, t)))
    for pt in sorted(fiber(rep, t)):
        print("  ", tuple(map(str, pt)))
    print("agrees with direct evaluation:", fiber_check(rep, f, t))
    print("N(F/q) =", nielsen_crabb(rep), " direct N(f) =", nielsen_composite(f).total)
    print()


show("two pieces", load_map({
    "q": 2,
    "pieces": [
        {"m": 2, "A": [[1, 0], [3, 4]]},
        {"m": 2, "A": [[-1, 0], [1, 4]], "shift": ["1/4", "0"]},
    ],
}))
# residues (2, 0) mod 4 share the factor 2: one piece, two cover components
show("one reducible piece", load_map({"q": 2, "pieces": [{"m": 4, "A": [[2, 0], [6, 8]], "shift": ["0", "1/3"]}]}))
