"""Reading and writing families in the ``rif-family/1`` JSON format."""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO

from rif.core import KSetFamily, make_family
from rif.errors import InvariantViolation, ParseError, RifError

FORMAT = "rif-family/1"


def family_to_dict(fam: KSetFamily) -> dict:
    return {"format": FORMAT, "n": fam.n, "k": fam.k, "sets": [list(s) for s in fam.sets]}


def dumps(fam: KSetFamily) -> str:
    """Canonical text: header fields then one member per line."""
    body = ",\n    ".join(json.dumps(list(s)) for s in fam.sets)
    sets = f"[\n    {body}\n  ]" if fam.sets else "[]"
    return f'{{\n  "format": "{FORMAT}",\n  "n": {fam.n},\n  "k": {fam.k},\n  "sets": {sets}\n}}\n'


def loads(text: str) -> KSetFamily:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"format must be {FORMAT!r}, got {doc.get('format')!r}")
    n, k, sets = doc.get("n"), doc.get("k"), doc.get("sets")
    if not isinstance(n, int) or not isinstance(k, int) or isinstance(n, bool) or isinstance(k, bool):
        raise ParseError("fields n and k must be integers")
    if not isinstance(sets, list) or not all(
        isinstance(s, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in s) for s in sets
    ):
        raise ParseError("sets must be an array of integer arrays")
    for s in sets:
        if any(a >= b for a, b in zip(s, s[1:])):
            raise InvariantViolation(f"set {s} is not strictly increasing")
    if any(a >= b for a, b in zip(sets, sets[1:])):
        raise InvariantViolation("sets are not in canonical lexicographic order")
    try:
        return make_family(n, k, sets)
    except RifError as exc:
        raise InvariantViolation(f"{type(exc).__name__}: {exc}") from None


def read_family(source: str | Path | IO[str]) -> KSetFamily:
    if hasattr(source, "read"):
        return loads(source.read())
    return loads(Path(source).read_text())


def write_family(fam: KSetFamily, dest: str | Path | IO[str]) -> None:
    if hasattr(dest, "write"):
        dest.write(dumps(fam))
    else:
        Path(dest).write_text(dumps(fam))
