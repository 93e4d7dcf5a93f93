"""Linear n-valued maps of the circle.

For t -> {(d t + k)/n : k = 1..n} the Nielsen number is |n - d| and the map
falls apart into gcd(n, d) irreducible pieces. This walks through a few
degrees and prints the decomposition next to the numbers.
"""

from math import gcd

from nval import evaluate, irreducible_partition, is_split, nielsen_linear, sigma_generators, single
from nval.nielsen import fixed_points


def describe(n, d):
    f = single(n, [[d]])
    (sigma,) = sigma_generators(f).generators
    parts = irreducible_partition(f).pieces
    print(f"n={n}, d={d}: sigma = {sigma}, N = {nielsen_linear(f.pieces[0])}")
    print(f"  {len(parts)} piece(s) (gcd = {gcd(n, d)}), split: {is_split(f)}")
    for p in parts:
        print(f"    {p.m}-valued, degree {p.A[0][0]}, shift {p.u[0]}, N = {nielsen_linear(p)}")
    pts = ", ".join(str(r.point[0]) for r in fixed_points(f))
    print(f"  fixed points: {pts or 'none'}")


if __name__ == "__main__":
    print("values of the 4-valued degree-2 map at t = 0:", ", ".join(str(v[0]) for v in evaluate(single(4, [[2]]), [0])))
    print()
    for n, d in [(4, 2), (3, 1), (3, 6), (5, -3), (6, 4)]:
        describe(n, d)
        print()
