# encoding: utf-8
""" JSON documents for crease patterns and letter patterns.

Documents are written with sorted keys and faces in increasing (axis,
corner) order, so that two runs producing the same pattern produce the
same bytes.

Crease pattern::

    {"d": 1, "extent": 1, "faces": [{"axis": 1, "corner": [0], "sign": "+"}]}

Letter pattern, letters in row-major order::

    {"d": 1, "origin": [-1], "shape": [2], "letters": [3, 0]}
"""
import json
from typing import Any, Dict, Union

import numpy as np

from ..creases import CreasePattern, FaceId, Sign
from ..substitution import SymbolicPattern, alphabet_size

__all__ = [
    "pattern_to_json",
    "pattern_from_json",
    "symbolic_to_json",
    "symbolic_from_json",
    "dumps",
    "loads",
]

Document = Union[str, Dict[str, Any]]


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True) + "\n"


def loads(text: str) -> Dict[str, Any]:
    """Parse a JSON object; anything else is a ValueError."""
    document = json.loads(text)
    if not isinstance(document, dict):
        raise ValueError(
            "Expected a JSON object, got {}.".format(type(document).__name__)
        )
    return document


def _as_document(document: Document) -> Dict[str, Any]:
    return loads(document) if isinstance(document, str) else document


def _field(document: Dict[str, Any], name: str, kind: type) -> Any:
    if name not in document:
        raise ValueError("The document has no {!r} field.".format(name))
    value = document[name]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise ValueError(
            "The field {!r} should be of type {}, got {!r}.".format(
                name, kind.__name__, value
            )
        )
    return value


def _integers(values: Any, length: int, name: str) -> list:
    if (
        not isinstance(values, list)
        or len(values) != length
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in values)
    ):
        raise ValueError(
            "{} should be a list of {} integers, got {!r}.".format(name, length, values)
        )
    return values


def pattern_to_json(pattern: CreasePattern) -> Dict[str, Any]:
    faces = [
        {"axis": face.axis, "corner": list(face.corner), "sign": str(sign)}
        for face, sign in pattern.items()
    ]
    return {"d": pattern.d, "extent": pattern.extent, "faces": faces}


def pattern_from_json(document: Document) -> CreasePattern:
    """Read a crease pattern back.

    Raises
    ------
    ValueError
        If the document is not valid JSON, misses a field, or names a face
        outside the pattern.
    """
    document = _as_document(document)
    d = _field(document, "d", int)
    extent = _field(document, "extent", int)
    faces: Dict[FaceId, Sign] = {}
    for entry in _field(document, "faces", list):
        if not isinstance(entry, dict):
            raise ValueError("Every face is a JSON object, got {!r}.".format(entry))
        face = FaceId(
            _field(entry, "axis", int), tuple(_integers(entry.get("corner"), d, "corner"))
        )
        if face in faces:
            raise ValueError("The face {} appears twice.".format(face))
        faces[face] = Sign.parse(_field(entry, "sign", str))
    return CreasePattern.from_faces(d, extent, faces)


def symbolic_to_json(pattern: SymbolicPattern) -> Dict[str, Any]:
    return {
        "d": pattern.d,
        "origin": list(pattern.origin),
        "shape": list(pattern.shape),
        "letters": pattern.cells.reshape(-1).tolist(),
    }


def symbolic_from_json(document: Document) -> SymbolicPattern:
    """Read a letter pattern back.

    Raises
    ------
    ValueError
        If the document is malformed or uses letters outside 0..4^d - 1.
    """
    document = _as_document(document)
    d = _field(document, "d", int)
    if d < 1:
        raise ValueError("The dimension must be at least 1, got {}.".format(d))
    origin = _integers(document.get("origin"), d, "origin")
    shape = _integers(document.get("shape"), d, "shape")
    if any(s < 0 for s in shape):
        raise ValueError("The shape cannot have negative sides, got {}.".format(shape))
    letters = _integers(document.get("letters"), int(np.prod(shape)), "letters")
    if any(not 0 <= a < alphabet_size(d) for a in letters):
        raise ValueError(
            "Letters of a {}-dimensional pattern lie in 0..{}.".format(d, alphabet_size(d) - 1)
        )
    cells = np.array(letters, dtype=np.int32).reshape(shape)
    return SymbolicPattern(origin, cells)
