"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples holding ``int`` or ``fractions.Fraction``
entries. Nothing here touches floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DegenerateMatrix

Scalar = Union[int, Fraction]
Matrix = tuple  # tuple[tuple[Scalar, ...], ...]
Vector = tuple  # tuple[Scalar, ...]


def as_matrix(rows) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    if not m or not m[0]:
        raise ValueError("matrix must have at least one row and one column")
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Matrix, v: Sequence[Scalar]) -> Vector:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def scale(M: Matrix, s: Scalar) -> Matrix:
    return tuple(tuple(s * x for x in row) for row in M)


def sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def normalize(x: Scalar) -> Scalar:
    """Return ``x`` as an ``int`` when integral, else as a reduced Fraction."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def mod1(x: Scalar) -> Fraction:
    return Fraction(x) - math.floor(x)


def torus_point(v: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Reduce a vector into [0,1)^q."""
    return tuple(mod1(x) for x in v)


def is_integral(v: Sequence[Scalar]) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


# -- determinants -----------------------------------------------------------


def _bareiss(M: Matrix) -> int:
    a = [list(r) for r in M]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _gauss_det(M: Matrix) -> Fraction:
    a = [[Fraction(x) for x in r] for r in M]
    n = len(a)
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return d


def det(M) -> Scalar:
    """Exact determinant; fraction-free Bareiss elimination for integer input."""
    M = as_matrix(M)
    if len(M) != len(M[0]):
        raise ValueError(f"det of non-square {len(M)}x{len(M[0])} matrix")
    if all(isinstance(x, int) for r in M for x in r):
        return _bareiss(M)
    return _gauss_det(M)


# -- Smith normal form ------------------------------------------------------


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ M @ V == D`` with U, V unimodular and d_1 | d_2 | ... on D's diagonal."""

    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def snf(M) -> SnfDecomposition:
    """Smith normal form by repeated min-|entry| pivoting.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, ties broken row-major, so the output is a deterministic function
    of the input.
    """
    M = as_matrix(M)
    if not all(isinstance(x, int) for r in M for x in r):
        raise TypeError("snf requires integer entries")
    r, c = len(M), len(M[0])
    A = [list(row) for row in M]
    U = [list(row) for row in identity(r)]
    V = [list(row) for row in identity(c)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in A:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = A[i][j]
                    if x and (best is None or abs(x) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, c):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    return SnfDecomposition(as_matrix(A), as_matrix(U), as_matrix(V))


# -- Hermite normal form ----------------------------------------------------


def hermite_columns(M) -> Matrix:
    """Column Hermite form of a nonsingular square integer matrix.

    The result H = M @ W (W unimodular) is lower triangular with a positive
    diagonal and 0 <= H[i][j] < H[i][i] for j < i. It depends only on the
    lattice spanned by the columns of M.
    """
    M = as_matrix(M)
    n = len(M)
    if n != len(M[0]):
        raise ValueError("hermite_columns needs a square matrix")
    cols = [list(col) for col in transpose(M)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = cols[i][i], cols[j][i]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ci, cj = cols[i], cols[j]
            cols[i] = [x * s + y * t for s, t in zip(ci, cj)]
            cols[j] = [(a // g) * t - (b // g) * s for s, t in zip(ci, cj)]
        if cols[i][i] == 0:
            raise DegenerateMatrix("hermite_columns: matrix is singular")
        if cols[i][i] < 0:
            cols[i] = [-x for x in cols[i]]
        d = cols[i][i]
        for j in range(i):
            f = cols[j][i] // d
            if f:
                cols[j] = [s - f * t for s, t in zip(cols[j], cols[i])]
    return transpose(tuple(tuple(col) for col in cols))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


# -- rational elimination ---------------------------------------------------


def rref(M) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = [[Fraction(x) for x in r] for r in as_matrix(M)]
    rows, cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return tuple(tuple(r) for r in a), tuple(pivots)


def nullspace(M) -> list[tuple[Fraction, ...]]:
    """Basis of {x : M x = 0} over Q, one vector per free column."""
    R, pivots = rref(M)
    cols = len(R[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def primitive(v: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    fr = [Fraction(x) for x in v]
    den = math.lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def solve_rational(M, b: Sequence[Scalar]) -> Optional[tuple[Fraction, ...]]:
    """One rational solution of M x = b (free variables 0), or None."""
    M = as_matrix(M)
    aug = [tuple(row) + (rhs,) for row, rhs in zip(M, b)]
    R, pivots = rref(aug)
    cols = len(M[0])
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row, p in zip(R, pivots):
        x[p] = row[-1]
    return tuple(x)


def inverse(M) -> tuple[tuple[Fraction, ...], ...]:
    M = as_matrix(M)
    n = len(M)
    aug = [tuple(row) + identity(n)[i] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise DegenerateMatrix("matrix is singular")
    return tuple(row[n:] for row in R)


# -- lattice problems -------------------------------------------------------


def solve_lattice(M, b: Sequence[Scalar]) -> Optional[tuple[int, ...]]:
    """Integer z with M z = b, or None when no integer solution exists.

    ``b`` may hold rationals; a non-integral right side simply has no
    solution. Decided exactly through the Smith form.
    """
    M = as_matrix(M)
    if len(b) != len(M):
        raise ValueError("right-hand side length does not match row count")
    dec = snf(M)
    ub = matvec(dec.U, [Fraction(x) for x in b])
    y = []
    for i in range(len(M[0])):
        d = dec.D[i][i] if i < len(M) else 0
        if d:
            yi = ub[i] / d
            if yi.denominator != 1:
                return None
            y.append(yi.numerator)
        else:
            y.append(0)
    for i in range(len(M)):
        d = dec.D[i][i] if i < len(M[0]) else 0
        if d == 0 and ub[i] != 0:
            return None
    return tuple(matvec(dec.V, y))


def solve_torus_congruence(M, b: Sequence[Scalar], n: int) -> list[tuple[Fraction, ...]]:
    """All t in [0,1)^q with M t - b in n Z^q, sorted lexicographically.

    The solutions form a coset t0 + n M^{-1} Z^q. A lower-triangular basis of
    that lattice lets the unit box be scanned one coordinate at a time, so the
    work is proportional to the number of solutions.
    """
    M = as_matrix(M)
    q = len(M)
    if q != len(M[0]):
        raise ValueError("solve_torus_congruence needs a square matrix")
    if n < 1:
        raise ValueError("modulus must be positive")
    delta = det(M)
    if delta == 0:
        raise DegenerateMatrix("det(M) = 0: congruence has infinitely many solutions")
    Minv = inverse(M)
    t0 = matvec(Minv, [Fraction(x) for x in b])
    # n * M^{-1} has denominators dividing |det M|
    adj_n = tuple(tuple(int(x * delta * n) for x in row) for row in Minv)
    H = hermite_columns(adj_n)
    H = tuple(tuple(Fraction(x, abs(delta)) for x in row) for row in H)

    out = []

    def scan(i, offset):
        if i == q:
            out.append(tuple(offset))
            return
        rest = offset[i]
        h = H[i][i]
        lo = math.ceil(-rest / h)
        hi = math.ceil((1 - rest) / h) - 1
        for k in range(lo, hi + 1):
            nxt = [offset[r] + k * H[r][i] if r >= i else offset[r] for r in range(q)]
            scan(i + 1, nxt)

    scan(0, list(t0))
    return sorted(out)


@dataclass(frozen=True)
class Witness:
    """A real parameter t and integer vector z with C t + w = z."""

    t: tuple[Fraction, ...]
    z: tuple[int, ...]


def left_kernel(C) -> list[tuple[int, ...]]:
    """Primitive integer basis of {k : k C = 0}."""
    return [primitive(v) for v in nullspace(transpose(as_matrix(C)))]


def affine_lattice_hit(C, w: Sequence[Scalar]) -> Optional[Witness]:
    """Decide whether {C t + w : t real} meets Z^q.

    Returns a Witness when it does and None when the affine subspace misses
    the integer lattice entirely. With K a basis of the left kernel of C, a
    lattice point z lies on the subspace exactly when K z = K w.
    """
    C = as_matrix(C)
    w = tuple(Fraction(x) for x in w)
    if len(w) != len(C):
        raise ValueError("offset length does not match row count")
    K = left_kernel(C)
    if K:
        z = solve_lattice(K, matvec(K, w))
        if z is None:
            return None
    else:
        z = (0,) * len(C)
    t = solve_rational(C, [zi - wi for zi, wi in zip(z, w)])
    if t is None:  # pragma: no cover - K z = K w guarantees consistency
        raise AssertionError("lattice point on subspace but C t = z - w inconsistent")
    return Witness(tuple(t), tuple(int(x) for x in z))


def coset_representatives(M) -> list[tuple[int, ...]]:
    """Representatives of Z^q / M Z^q for nonsingular square integer M."""
    dec = snf(M)
    diag = dec.diagonal
    if 0 in diag:
        raise DegenerateMatrix("lattice basis is singular")
    Uinv = inverse(dec.U)
    Uinv = tuple(tuple(int(x) for x in row) for row in Uinv)
    reps = [matvec(Uinv, x) for x in itertools.product(*(range(d) for d in diag))]
    return reps
