"""Numerical monodromy of sampled n-valued torus maps.

A sampler is any callable taking a point of [0,1)^q (numpy array) and
returning an (n, q) array of the n values there, in any order. Following the
fiber continuously along t(s) = base + s e_j, s in [0, 1], and matching
consecutive samples by optimal assignment, yields the permutation sigma_{e_j}
of the base fiber. Floating point is confined to this module.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import ResolutionTooCoarse
from .monodromy import Permutation, orbits
from .nvmaps import CompositeMap


@dataclass(frozen=True)
class FiberSampler:
    q: int
    n: int
    eval: Callable[[np.ndarray], np.ndarray]
    serial: bool = True

    def __call__(self, t) -> np.ndarray:
        pts = np.asarray(self.eval(np.asarray(t, dtype=float)), dtype=float)
        if pts.shape != (self.n, self.q):
            raise ValueError(f"sampler returned shape {pts.shape}, expected {(self.n, self.q)}")
        return np.mod(pts, 1.0)


@dataclass(frozen=True)
class TrackerConfig:
    samples_per_loop: int = 256
    margin_factor: float = 0.5
    base: Optional[tuple] = field(default=None)

    def __post_init__(self):
        if self.samples_per_loop < 2:
            raise ValueError("samples_per_loop must be at least 2")
        if not 0 < self.margin_factor < 1:
            raise ValueError("margin_factor must lie in (0, 1)")


def torus_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Max over coordinates of circle distance; broadcasts over leading axes."""
    d = np.abs(np.mod(a - b, 1.0))
    return np.minimum(d, 1.0 - d).max(axis=-1)


def distance_matrix(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    return torus_distance(P[:, None, :], Q[None, :, :])


def separation(P: np.ndarray) -> float:
    """Least pairwise distance within a fiber (inf for a single point)."""
    if len(P) < 2:
        return np.inf
    D = distance_matrix(P, P)
    return D[np.triu_indices(len(P), k=1)].min()


def match(P: np.ndarray, Q: np.ndarray) -> tuple[np.ndarray, float]:
    """Minimum-total-cost bijection P[i] -> Q[perm[i]] and its worst single move."""
    D = distance_matrix(P, Q)
    rows, cols = linear_sum_assignment(D)
    perm = np.empty(len(P), dtype=int)
    perm[rows] = cols
    return perm, float(D[rows, cols].max())


def track_fibers(fibers: Sequence[np.ndarray], margin_factor: float = 0.5) -> Permutation:
    """Permutation of the first fiber obtained by following it through the rest.

    The last fiber must equal the first as a set (a closed loop). Index i of
    the first fiber maps to the index in the first fiber where its path ends.
    """
    fibers = [np.mod(np.asarray(F, dtype=float), 1.0) for F in fibers]
    current = fibers[0]
    for step, nxt in enumerate(fibers[1:], start=1):
        margin = margin_factor * separation(current)
        perm, cost = match(current, nxt)
        if not cost < margin:
            raise ResolutionTooCoarse(step, cost, margin)
        current = nxt[perm]
    margin = margin_factor * separation(fibers[0])
    perm, cost = match(current, fibers[0])
    if not cost < margin:
        raise ResolutionTooCoarse(len(fibers), cost, margin)
    return Permutation(tuple(int(j) + 1 for j in perm))


def base_point(sampler: FiberSampler, config: TrackerConfig) -> np.ndarray:
    """The origin, nudged off it if two fiber points share a coordinate there."""
    if config.base is not None:
        return np.asarray(config.base, dtype=float)
    origin = np.zeros(sampler.q)
    P = sampler(origin)
    for a, b in itertools.combinations(P, 2):
        if np.any(torus_distance(a[:, None], b[:, None]) < 1e-12):
            return np.full(sampler.q, 1.0 / (7 * sampler.q))
    return origin


def track_loop(sampler: FiberSampler, j: int, config: TrackerConfig = TrackerConfig()) -> Permutation:
    """sigma_{e_j} (j 1-based) in terms of the sampler's ordering at the base point."""
    if not 1 <= j <= sampler.q:
        raise ValueError(f"generator index {j} out of range 1..{sampler.q}")
    base = base_point(sampler, config)
    M = config.samples_per_loop
    e = np.zeros(sampler.q)
    e[j - 1] = 1.0
    fibers = [sampler(base + (i / M) * e) for i in range(M + 1)]
    return track_fibers(fibers, config.margin_factor)


@dataclass(frozen=True)
class EmpiricalPartition:
    generators: tuple
    orbits: tuple

    @property
    def components(self) -> int:
        return len(self.orbits)


def empirical_partition(sampler: FiberSampler, config: TrackerConfig = TrackerConfig()) -> EmpiricalPartition:
    """Track every generator loop; the orbit count estimates the number of
    path components of the graph, i.e. the size of the irreducible partition."""
    idx = range(1, sampler.q + 1)
    if sampler.serial or sampler.q == 1:
        gens = tuple(track_loop(sampler, j, config) for j in idx)
    else:
        with ThreadPoolExecutor(max_workers=sampler.q) as pool:
            gens = tuple(pool.map(lambda j: track_loop(sampler, j, config), idx))
    return EmpiricalPartition(gens, tuple(orbits(gens)))


def sampler_from_map(f: CompositeMap) -> FiberSampler:
    """Float sampler over the exact model, lifts in global order.

    Sample points are converted back to exact rationals, so the values are
    the exact ones rounded once to float.
    """

    def ev(t):
        exact = tuple(Fraction(float(x)) for x in t)
        return np.array([[float(x) for x in v] for v in f.lift_values(exact)])

    return FiberSampler(f.q, f.n, ev)


def read_fiber_file(path) -> tuple[int, int, np.ndarray, np.ndarray]:
    """Parse a pre-sampled loop: header "q n M", then M+1 rows "s x_1 ... x_{nq}".

    Returns (q, n, s values, fibers of shape (M+1, n, q)).
    """
    with open(path) as fh:
        lines = [ln.split() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 3:
        raise ValueError(f"{path}: expected header 'q n M'")
    q, n, M = (int(x) for x in lines[0])
    rows = lines[1:]
    if len(rows) != M + 1:
        raise ValueError(f"{path}: expected {M + 1} sample rows, found {len(rows)}")
    data = np.array([[float(x) for x in r] for r in rows])
    if data.shape[1] != 1 + n * q:
        raise ValueError(f"{path}: each row needs s followed by {n * q} values")
    return q, n, data[:, 0], data[:, 1:].reshape(M + 1, n, q)


def write_fiber_file(path, sampler: FiberSampler, j: int, config: TrackerConfig = TrackerConfig()) -> None:
    base = base_point(sampler, config)
    M = config.samples_per_loop
    with open(path, "w") as fh:
        fh.write(f"{sampler.q} {sampler.n} {M}\n")
        for i in range(M + 1):
            s = i / M
            t = base.copy()
            t[j - 1] += s
            pts = sampler(t).ravel()
            fh.write(" ".join([repr(s)] + [repr(float(x)) for x in pts]) + "\n")
