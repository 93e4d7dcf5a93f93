"""JSON map documents.

    {"q": 2, "pieces": [{"m": 2, "A": [[1, 0], [3, 4]], "shift": ["0", "0"]}, ...]}

Rationals travel as strings "p/q" (or "p"); JSON floats are refused so that
no binary rounding can enter the exact computations.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import NvalError
from .nvmaps import CompositeMap, LinearPiece, validate_composite


class MapDocumentError(NvalError, ValueError):
    """The document does not describe a map."""


def rational_str(x) -> str:
    return str(Fraction(x))


def _parse_rational(x, where) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise MapDocumentError(f"{where}: rationals must be strings or integers, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise MapDocumentError(f"{where}: cannot parse rational {x!r}") from None
    raise MapDocumentError(f"{where}: unexpected value {x!r}")


def _parse_int(x, where) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise MapDocumentError(f"{where}: expected an integer, got {x!r}")
    return x


def parse_pieces(doc) -> list[LinearPiece]:
    """Build the pieces of a document without checking their disjointness.

    Row-congruence failures propagate as RowCongruenceViolation.
    """
    if not isinstance(doc, dict):
        raise MapDocumentError("document must be a JSON object")
    if "q" not in doc or "pieces" not in doc:
        raise MapDocumentError("document needs keys 'q' and 'pieces'")
    q = _parse_int(doc["q"], "q")
    if q < 1:
        raise MapDocumentError("q must be positive")
    raw = doc["pieces"]
    if not isinstance(raw, list) or not raw:
        raise MapDocumentError("'pieces' must be a nonempty list")
    pieces = []
    for i, p in enumerate(raw, start=1):
        where = f"pieces[{i}]"
        if not isinstance(p, dict) or "m" not in p or "A" not in p:
            raise MapDocumentError(f"{where}: needs keys 'm' and 'A'")
        m = _parse_int(p["m"], f"{where}.m")
        A = p["A"]
        if not isinstance(A, list) or len(A) != q or any(
            not isinstance(r, list) or len(r) != q for r in A
        ):
            raise MapDocumentError(f"{where}.A: expected a {q}x{q} array")
        A = [[_parse_int(x, f"{where}.A") for x in r] for r in A]
        shift = p.get("shift", ["0"] * q)
        if not isinstance(shift, list) or len(shift) != q:
            raise MapDocumentError(f"{where}.shift: expected {q} rationals")
        u = [_parse_rational(x, f"{where}.shift") for x in shift]
        if m < 1:
            raise MapDocumentError(f"{where}.m: multiplicity must be positive")
        pieces.append(LinearPiece(m, A, u))
    return pieces


def load_map(doc) -> CompositeMap:
    """Parse and fully validate a document (dict or JSON text)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MapDocumentError(f"invalid JSON: {exc}") from None
    return validate_composite(parse_pieces(doc))


def read_map(path) -> CompositeMap:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise MapDocumentError(str(exc)) from None
    return load_map(text)


def piece_to_dict(p: LinearPiece) -> dict:
    return {
        "m": p.m,
        "A": [list(r) for r in p.A],
        "shift": [rational_str(x) for x in p.u],
    }


def dump_map(f: CompositeMap) -> dict:
    return {"q": f.q, "pieces": [piece_to_dict(p) for p in f.pieces]}
