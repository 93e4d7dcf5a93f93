"""End-to-end acceptance checks, one test per criterion.

Each test measures its own wall time against the stated budget. The
terminal summary prints one PASS/FAIL line per criterion.
"""

import ast
import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

import nval
from nval.crabb import fiber_check, nielsen_crabb, to_finite_valued
from nval.monodromy import irreducible_partition, is_split, orbits, sigma_generators
from nval.nielsen import fixed_point_index, fixed_points, nielsen_composite, nielsen_linear
from nval.nvmaps import CompositeMap, LinearPiece, evaluate, pairwise_disjoint, validate_composite
from nval.tracker import TrackerConfig, empirical_partition, sampler_from_map, track_loop
from oracles import grid_collision, map_corpus, piece_pairs, random_piece, random_shift

criterion = pytest.mark.criterion
SRC = Path(nval.__file__).parent
MAPS = Path(__file__).resolve().parent.parent / "demos" / "maps"


def fixed_point_corpus(seed=2024, count=120):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q, m = rng.choice([1, 2, 3]), rng.randint(2, 6)
        out.append(random_piece(rng, q, m, nondegenerate=True, lo=-9, hi=9, max_den=8))
    return out


class Clock:
    def __init__(self, budget):
        self.budget = budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.budget, f"took {self.elapsed:.2f}s, budget {self.budget}s"


@criterion(1, "two-piece torus example")
def test_torus_pair():
    with Clock(1.0):
        f = validate_composite([
            LinearPiece(2, [[1, 0], [3, 4]]),
            LinearPiece(2, [[-1, 0], [1, 4]], (Fraction(1, 4), 0)),
        ])
        rep = nielsen_composite(f)
        assert rep.values == (1, 3)
        assert rep.total == 4


@criterion(2, "circle sweep")
def test_circle_sweep():
    with Clock(1.0):
        for n in range(1, 9):
            for d in range(-12, 13):
                p = LinearPiece(n, [[d]])
                assert nielsen_linear(p) == abs(n - d)
                f = CompositeMap((p,))
                parts = irreducible_partition(f).pieces
                g = math.gcd(n, d)
                assert len(parts) == g
                assert all(s.m == n // g and s.A == ((d // g,),) for s in parts)
                assert is_split(f) == (d % n == 0)
                assert sum(nielsen_linear(s) for s in parts) == abs(n - d)


@criterion(3, "fixed-point count law")
def test_fixed_point_count_law():
    corpus = fixed_point_corpus()
    assert len(corpus) >= 100
    with Clock(10.0):
        for p in corpus:
            f = CompositeMap((p,))
            recs = fixed_points(f)
            assert len(recs) == nielsen_linear(p)
            sign = fixed_point_index(p)
            for r in recs:
                assert r.point in evaluate(f, r.point)
                assert r.fp_index == sign


@criterion(4, "Crabb consistency")
def test_crabb_consistency():
    rng = random.Random(77)
    pair = validate_composite([
        LinearPiece(2, [[1, 0], [3, 4]]),
        LinearPiece(2, [[-1, 0], [1, 4]], (Fraction(1, 4), 0)),
    ])
    maps = [CompositeMap((p,)) for p in fixed_point_corpus()] + [pair]
    with Clock(10.0):
        for f in maps:
            rep = to_finite_valued(f)
            assert nielsen_crabb(rep) == nielsen_composite(f).total
            for _ in range(50):
                assert fiber_check(rep, f, random_shift(rng, f.q, 64))


@criterion(5, "tracker oracle agreement")
def test_tracker_agreement():
    maps = map_corpus(seed=505, count=24)
    assert sum(len(f.pieces) > 1 for f in maps) >= 8
    assert all(f.q <= 2 and f.n <= 6 for f in maps)
    cfg = TrackerConfig(samples_per_loop=512)
    with Clock(30.0):
        for f in maps:
            data = sigma_generators(f)
            s = sampler_from_map(f)
            for j in range(1, f.q + 1):
                assert track_loop(s, j, cfg) == data.generators[j - 1]
            assert empirical_partition(s, cfg).components == len(orbits(data))


@criterion(6, "disjointness decision soundness")
def test_disjointness_soundness():
    pairs = piece_pairs(seed=606, count=60)
    outcomes = set()
    with Clock(10.0):
        for p1, p2 in pairs:
            hit = pairwise_disjoint(p1, p2)
            if hit is None:
                outcomes.add("disjoint")
                assert grid_collision(p1, p2, max_den=16) is None
            else:
                outcomes.add("collision")
                d = tuple(a - b for a, b in zip(p1.lift(hit.k1, hit.t), p2.lift(hit.k2, hit.t)))
                assert d == hit.z and all(type(z) is int for z in hit.z)
    assert outcomes == {"disjoint", "collision"}


EXACT_MODULES = ["exactlin", "nvmaps", "monodromy", "nielsen", "crabb", "document", "errors"]
ALLOWED_IMPORTS = {"__future__", "dataclasses", "fractions", "typing", "itertools", "functools", "math", "json"}
ALLOWED_MATH = {"floor", "ceil", "gcd", "lcm"}


def float_violations(tree):
    found = []
    isinstance_args = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "isinstance":
            isinstance_args.update(id(a) for a in ast.walk(node.args[1]))
    for node in ast.walk(tree):
        if isinstance(node, ast.Constant) and isinstance(node.value, (float, complex)):
            found.append(f"line {node.lineno}: float literal {node.value!r}")
        elif isinstance(node, ast.Name) and node.id == "float" and id(node) not in isinstance_args:
            found.append(f"line {node.lineno}: use of float")
        elif isinstance(node, ast.Import):
            for a in node.names:
                if a.name.split(".")[0] not in ALLOWED_IMPORTS:
                    found.append(f"line {node.lineno}: import {a.name}")
        elif isinstance(node, ast.ImportFrom) and node.level == 0:
            if node.module.split(".")[0] not in ALLOWED_IMPORTS:
                found.append(f"line {node.lineno}: from {node.module}")
            elif node.module == "math":
                found += [f"line {node.lineno}: math.{a.name}" for a in node.names if a.name not in ALLOWED_MATH]
        elif isinstance(node, ast.ImportFrom) and node.level > 0:
            if node.module and node.module.split(".")[0] not in EXACT_MODULES:
                found.append(f"line {node.lineno}: relative import of {node.module}")
        elif isinstance(node, ast.Attribute) and isinstance(node.value, ast.Name) and node.value.id == "math":
            if node.attr not in ALLOWED_MATH:
                found.append(f"line {node.lineno}: math.{node.attr}")
    return found


def exact_values(obj):
    if isinstance(obj, (tuple, list)):
        for x in obj:
            yield from exact_values(x)
    else:
        yield obj


DETERMINISM_SCRIPT = r"""
import io, json, sys
from pathlib import Path
from nval.cli import run
out = io.StringIO()
for doc in sorted(Path(sys.argv[1]).glob("*.json")):
    for cmd in ("validate", "partition", "nielsen", "fixpoints", "crabb"):
        out.write(f"== {doc.name} {cmd}\n")
        run([cmd, str(doc), "--json"], out)
for doc in sorted(Path(sys.argv[1]).glob("track_*.json")):
    run(["track", str(doc), "--json", "--samples", "256"], out)
sys.stdout.buffer.write(out.getvalue().encode())
"""


@criterion(7, "exactness and determinism")
def test_exactness_and_determinism(tmp_path):
    with Clock(60.0):
        problems = {}
        for name in EXACT_MODULES:
            tree = ast.parse((SRC / f"{name}.py").read_text())
            v = float_violations(tree)
            if v:
                problems[name] = v
        assert not problems, problems

        # run-time outputs of the exact layer are ints and Fractions only
        rng = random.Random(707)
        for p in fixed_point_corpus(seed=708, count=30):
            f = CompositeMap((p,))
            vals = list(exact_values([r.point for r in fixed_points(f)]))
            vals += [nielsen_linear(p), *exact_values(evaluate(f, random_shift(rng, p.q)))]
            for c in to_finite_valued(f).components:
                vals += list(exact_values([c.M, c.B, c.v]))
            assert all(type(x) in (int, Fraction) for x in vals)

        corpus = tmp_path / "corpus"
        corpus.mkdir()
        for doc in MAPS.glob("*.json"):
            (corpus / doc.name).write_text(doc.read_text())
        from nval.document import dump_map
        for i, f in enumerate(map_corpus(seed=709, count=12, qs=(1, 2, 3))):
            (corpus / f"gen_{i:02d}.json").write_text(json.dumps(dump_map(f)))
        for i, f in enumerate(map_corpus(seed=710, count=3)):
            (corpus / f"track_{i:02d}.json").write_text(json.dumps(dump_map(f)))

        outputs = []
        for seed in ("0", "4242"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            proc = subprocess.run(
                [sys.executable, "-c", DETERMINISM_SCRIPT, str(corpus)],
                capture_output=True, env=env, check=True,
            )
            outputs.append(proc.stdout)
        assert outputs[0] == outputs[1]
        assert outputs[0].count(b"==") == 5 * len(list(corpus.glob("*.json")))


@pytest.mark.parametrize("src", [
    "x = 0.5",
    "y = float(3)",
    "import numpy as np",
    "from math import sqrt",
    "import math\nz = math.sqrt(2)",
    "from .tracker import track_loop",
])
def test_float_scanner_flags(src):
    assert float_violations(ast.parse(src))


def test_float_scanner_allows_refusal_check():
    assert not float_violations(ast.parse("ok = isinstance(v, (bool, float))"))
