"""A 4-valued map of the 2-torus built from two 2-valued pieces.

Both pieces are checked for the row condition, then against each other for
disjointness. The Nielsen number is the sum over the irreducible pieces and
the fixed points are listed with their lift and index.
"""

from fractions import Fraction

from nval import LinearPiece, fixed_points, nielsen_composite, pairwise_disjoint, sigma_generators, validate_composite

g = LinearPiece(2, [[1, 0], [3, 4]])
h = LinearPiece(2, [[-1, 0], [1, 4]], (Fraction(1, 4), 0))

print("row residues:", g.residues, h.residues)
print("collision between g and h:", pairwise_disjoint(g, h))

f = validate_composite([g, h])
for j, s in enumerate(sigma_generators(f).generators, start=1):
    print(f"sigma(e_{j}) = {s}")

rep = nielsen_composite(f)
print("Nielsen numbers per piece:", rep.values, "total", rep.total)
print("sum of indices:", rep.lefschetz)

for r in fixed_points(f):
    x, y = r.point
    print(f"  piece {r.piece + 1}  lift k={r.lift_k}  ({x}, {y})  index {r.fp_index:+d}")

# shifting h by (1/2, 1/2) instead makes the pieces meet
bad = LinearPiece(2, [[1, 0], [3, 4]], (Fraction(1, 2), Fraction(1, 2)))
hit = pairwise_disjoint(g, bad)
print("\nwith a colliding partner:", f"lifts {hit.k1},{hit.k2} meet at t = ({', '.join(map(str, hit.t))}), z = {hit.z}")
