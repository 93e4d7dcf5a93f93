"""Command-line front end: ``nval COMMAND MAP.json [--json]``.

Exit status is 0 on success, 1 when a computation is refused (colliding
pieces, degenerate pieces, tracking resolution) and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crabb, document, monodromy, nielsen, tracker
from .document import MapDocumentError, dump_map, piece_to_dict, rational_str
from .errors import (
    CollisionBetweenPieces,
    DegeneratePiece,
    NvalError,
    ResolutionTooCoarse,
    RowCongruenceViolation,
)

EXIT_OK, EXIT_REFUSED, EXIT_INVALID = 0, 1, 2


def _vec(v) -> list[str]:
    return [rational_str(x) for x in v]


def _fmt_vec(v) -> str:
    return "(" + ", ".join(_vec(v)) + ")"


def _fmt_piece(p) -> str:
    A = "[" + ", ".join("[" + ",".join(map(str, r)) + "]" for r in p.A) + "]"
    return f"(m={p.m}, A={A}, shift={_fmt_vec(p.u)})"


def _perm_dict(p) -> dict:
    return {"images": list(p.images), "cycles": str(p)}


def cmd_validate(f, args):
    sigma = monodromy.sigma_generators(f)
    data = {
        "command": "validate",
        "valid": True,
        "q": f.q,
        "n": f.n,
        "pieces": [dict(piece_to_dict(p), residues=list(p.residues)) for p in f.pieces],
    }
    lines = [f"valid {f.n}-valued map on T^{f.q} with {len(f.pieces)} piece(s)"]
    for i, p in enumerate(f.pieces, start=1):
        lines.append(f"  piece {i}: {_fmt_piece(p)}, residues {tuple(p.residues)}")
    lines.append("  sigma: " + ", ".join(f"e_{j}: {g}" for j, g in enumerate(sigma.generators, 1)))
    return data, lines


def cmd_partition(f, args):
    parts = monodromy.irreducible_partition(f)
    orb = monodromy.orbits(monodromy.sigma_generators(f))
    data = {
        "command": "partition",
        "split": monodromy.is_split(f),
        "orbits": [list(o) for o in orb],
        "sources": [s + 1 for s in monodromy.partition_sources(f)],
        "map": dump_map(parts),
    }
    lines = [f"{len(parts.pieces)} irreducible piece(s)" + (" (split)" if data["split"] else "")]
    for i, p in enumerate(parts.pieces, start=1):
        lines.append(f"  {i}: {_fmt_piece(p)}")
    lines.append("  sigma orbits: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in orb))
    return data, lines


def cmd_nielsen(f, args):
    rep = nielsen.nielsen_composite(f)
    data = {
        "command": "nielsen",
        "pieces": [
            {"source": s + 1, "piece": piece_to_dict(p), "N": N}
            for (p, N), s in zip(rep.per_piece, rep.sources)
        ],
        "total": rep.total,
        "lefschetz": rep.lefschetz,
    }
    lines = [
        "pieces: " + ", ".join(str(N) for N in rep.values) + f"; total N = {rep.total}",
        f"lefschetz (sum of indices) = {rep.lefschetz}",
    ]
    return data, lines


def cmd_fixpoints(f, args):
    records = nielsen.fixed_points(f)
    data = {
        "command": "fixpoints",
        "count": len(records),
        "lefschetz": nielsen.lefschetz_number(records),
        "points": [
            {"piece": r.piece + 1, "point": _vec(r.point), "k": r.lift_k, "index": r.fp_index}
            for r in records
        ],
    }
    lines = [f"{len(records)} fixed point(s), index sum {data['lefschetz']}"]
    for r in records:
        lines.append(f"  piece {r.piece + 1}, k={r.lift_k}: {_fmt_vec(r.point)} index {r.fp_index:+d}")
    return data, lines


def cmd_crabb(f, args):
    rep = crabb.to_finite_valued(f)
    N = crabb.nielsen_crabb(rep)
    data = {
        "command": "crabb",
        "q": rep.q,
        "components": [
            {
                "source": c.source_piece + 1,
                "M": [list(r) for r in c.M],
                "B": [_vec(r) for r in c.B],
                "v": _vec(c.v),
                "degree": c.degree,
            }
            for c in rep.components
        ],
        "nielsen": N,
    }
    lines = [f"{len(rep.components)} cover component(s), total degree {rep.n}"]
    for i, c in enumerate(rep.components, start=1):
        B = "[" + ", ".join("[" + ",".join(_vec(r)) + "]" for r in c.B) + "]"
        lines.append(f"  {i}: M={[list(r) for r in c.M]}, B={B}, v={_fmt_vec(c.v)}")
    lines.append(f"N(F/q) = {N}")
    return data, lines


def _track_report(gens):
    orb = monodromy.orbits(gens)
    data = {
        "command": "track",
        "generators": [_perm_dict(g) for g in gens],
        "orbits": [list(o) for o in orb],
        "components": len(orb),
    }
    lines = [f"e_{j}: {g}" for j, g in enumerate(gens, start=1)]
    lines.append(f"{len(orb)} graph component(s)")
    return data, lines


def run_track(args):
    cfg = tracker.TrackerConfig(samples_per_loop=args.samples)
    if args.fibers:
        gens = []
        for path in args.inputs:
            _, _, _, fibers = tracker.read_fiber_file(path)
            gens.append(tracker.track_fibers(fibers, cfg.margin_factor))
        if len({g.n for g in gens}) != 1:
            raise MapDocumentError("fiber files disagree on n")
        return _track_report(gens)
    if len(args.inputs) != 1:
        raise MapDocumentError("track takes one map document (or --fibers FILE...)")
    f = document.read_map(args.inputs[0])
    ep = tracker.empirical_partition(tracker.sampler_from_map(f), cfg)
    return _track_report(ep.generators)


COMMANDS = {
    "validate": cmd_validate,
    "partition": cmd_partition,
    "nielsen": cmd_nielsen,
    "fixpoints": cmd_fixpoints,
    "crabb": cmd_crabb,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nval", description="Exact tools for n-valued torus maps.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("map", help="JSON map document")
        p.add_argument("--json", action="store_true", help="machine-readable report")
    p = sub.add_parser("track", help="numerically track sigma generators")
    p.add_argument("inputs", nargs="+", help="map document, or fiber files with --fibers")
    p.add_argument("--fibers", action="store_true", help="inputs are fiber-sample files, one per generator")
    p.add_argument("--samples", type=int, default=512, help="samples per loop (default 512)")
    p.add_argument("--json", action="store_true")
    return parser


def _error_payload(exc) -> dict:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, RowCongruenceViolation):
        payload.update(rows=[exc.i, exc.j], column=exc.column, m=exc.m)
    elif isinstance(exc, CollisionBetweenPieces):
        w = exc.witness
        payload.update(pieces=[exc.i, exc.j], t=_vec(w.t), k1=w.k1, k2=w.k2, z=list(w.z))
    elif isinstance(exc, DegeneratePiece):
        payload.update(piece=exc.i)
    elif isinstance(exc, ResolutionTooCoarse):
        payload.update(step=exc.step)
    return payload


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "track":
            data, lines = run_track(args)
        else:
            f = document.read_map(args.map)
            data, lines = COMMANDS[args.command](f, args)
        code = EXIT_OK
    except (CollisionBetweenPieces, DegeneratePiece, ResolutionTooCoarse) as exc:
        data, lines, code = _error_payload(exc), [f"refused: {exc}"], EXIT_REFUSED
    except (MapDocumentError, RowCongruenceViolation, NvalError, ValueError, TypeError) as exc:
        data, lines, code = _error_payload(exc), [f"invalid input: {exc}"], EXIT_INVALID
    if args.json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
