"""Independent brute-force checks used by the tests.

None of these call into the code paths they are used to check.
"""

import itertools
import math
import random
from fractions import Fraction

import numpy as np

from nval.nvmaps import LinearPiece


def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = (-1) ** inversions
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def determinantal_divisors(M):
    """gcd of all k x k minors, k = 1..min(r, c)."""
    r, c = len(M), len(M[0])
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = math.gcd(g, leibniz_det([[M[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def brute_torus_solutions(M, b, n, den):
    """All t = a/den in [0,1)^q with M t - b in n Z^q."""
    q = len(M)
    out = []
    for a in itertools.product(range(den), repeat=q):
        t = [Fraction(x, den) for x in a]
        if all(((sum(M[i][j] * t[j] for j in range(q)) - b[i]) / n).denominator == 1 for i in range(q)):
            out.append(tuple(t))
    return sorted(out)


def grid_collision(p1, p2, max_den=16):
    """Search t = a/d (d <= max_den) for lifts of p1, p2 that agree mod Z^q.

    Exact integer arithmetic in numpy. Returns (t, k1, k2) or None.
    """
    q = p1.q
    A1 = np.array(p1.A, dtype=np.int64)
    A2 = np.array(p2.A, dtype=np.int64)
    for k1 in range(1, p1.m + 1):
        for k2 in range(1, p2.m + 1):
            w = [Fraction(k1, p1.m) - Fraction(k2, p2.m) + a - b for a, b in zip(p1.u, p2.u)]
            L = math.lcm(p1.m, p2.m, *(x.denominator for x in w))
            Cn = A1 * (L // p1.m) - A2 * (L // p2.m)
            wn = np.array([int(x * L) for x in w], dtype=np.int64)
            for d in range(1, max_den + 1):
                grid = np.array(list(itertools.product(range(d), repeat=q)), dtype=np.int64)
                vals = grid @ Cn.T + d * wn
                hit = np.all(vals % (L * d) == 0, axis=1)
                if hit.any():
                    a = grid[np.argmax(hit)]
                    return tuple(Fraction(int(x), d) for x in a), k1, k2
    return None


def brute_orbits(perms):
    """Orbits from the full group closure (perms as Permutation objects)."""
    n = perms[0].n
    ident = tuple(range(1, n + 1))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for p in perms:
                h = tuple(p.images[g[i] - 1] for i in range(n))
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    orbs = {frozenset(g[i - 1] for g in group) for i in range(1, n + 1)}
    return sorted(tuple(sorted(o)) for o in orbs)


def brute_fixed_points(piece, den):
    """Points a/den of [0,1)^q lying in their own image under the piece."""
    q, m = piece.q, piece.m
    out = set()
    for a in itertools.product(range(den), repeat=q):
        t = [Fraction(x, den) for x in a]
        At = [sum(piece.A[i][j] * t[j] for j in range(q)) for i in range(q)]
        for k in range(1, m + 1):
            if all(((At[i] + k) / m + piece.u[i] - t[i]).denominator == 1 for i in range(q)):
                out.add(tuple(t))
    return sorted(out)


# -- random corpora ---------------------------------------------------------


def random_matrix_row_congruent(rng, q, m, lo=-9, hi=9, residues=None):
    l = residues if residues is not None else [rng.randrange(m) for _ in range(q)]
    A = []
    for _ in range(q):
        row = []
        for k in range(q):
            choices = [x for x in range(lo, hi + 1) if x % m == l[k]]
            row.append(rng.choice(choices))
        A.append(row)
    return A


def random_shift(rng, q, max_den=8):
    out = []
    for _ in range(q):
        d = rng.randint(1, max_den)
        out.append(Fraction(rng.randrange(d), d))
    return out


def random_piece(rng, q, m, nondegenerate=False, lo=-9, hi=9, max_den=8):
    while True:
        A = random_matrix_row_congruent(rng, q, m, lo, hi)
        if nondegenerate:
            M = [[m * (i == j) - A[i][j] for j in range(q)] for i in range(q)]
            if leibniz_det(M) == 0:
                continue
        return LinearPiece(m, A, random_shift(rng, q, max_den))


def structured_partner(rng, p, lo=-9, hi=9, max_den=8):
    """A piece of the same multiplicity obtained by adding m*E, E with equal
    rows, and a fresh shift. Such pairs are often, not always, disjoint."""
    q, m = p.q, p.m
    for _ in range(1000):
        r = [rng.randint(-2, 2) for _ in range(q)]
        A = [[a + m * e for a, e in zip(row, r)] for row in p.A]
        if all(lo <= x <= hi for row in A for x in row):
            return LinearPiece(m, A, random_shift(rng, q, max_den))
    return LinearPiece(m, p.A, random_shift(rng, q, max_den))


def piece_pairs(seed, count):
    """A mix of structured and unrelated piece pairs, q in {1, 2, 3}."""
    rng = random.Random(seed)
    pairs = []
    for i in range(count):
        q = rng.choice([1, 2, 2, 3])
        m1 = rng.randint(1, 4)
        p1 = random_piece(rng, q, m1)
        if i % 3:
            p2 = structured_partner(rng, p1)
        else:
            p2 = random_piece(rng, q, rng.randint(1, 4))
        pairs.append((p1, p2))
    return pairs


def map_corpus(seed, count, qs=(1, 2), n_max=6):
    """Valid maps with n <= n_max: single pieces and two-piece composites
    whose pieces were checked disjoint by the exact decision."""
    from nval.nvmaps import CompositeMap, pairwise_disjoint

    rng = random.Random(seed)
    maps = []
    while len(maps) < count:
        q = rng.choice(qs)
        if len(maps) % 2 == 0:
            maps.append(CompositeMap((random_piece(rng, q, rng.randint(1, n_max)),)))
            continue
        m = rng.randint(1, n_max // 2)
        p1 = random_piece(rng, q, m)
        p2 = structured_partner(rng, p1) if rng.random() < 0.7 else random_piece(rng, q, rng.randint(1, n_max - m))
        if pairwise_disjoint(p1, p2) is None:
            maps.append(CompositeMap((p1, p2)))
    return maps
