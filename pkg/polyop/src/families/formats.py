"""Text and JSON formats for families, complexes and relative pairs.

Text format::

    n 3
    faces
    -
    1
    1 2

The keyword may also be ``facets``, in which case the listed faces are closed
downward on load. A lone ``-`` is the empty face. Relative pairs are two
blocks separated by a ``---`` line, total first. JSON uses
``{"n": 3, "faces": [[], [1], [1, 2]]}`` and ``{"total": ..., "sub": ...}``.
Output is always in canonical order with the ambient size written out.
"""

import json
from typing import Any, cast

from polyop.src.consts import EMPTY_FACE_TOKEN, PAIR_SEPARATOR
from polyop.src.errors import DomainError
from polyop.src.families.family import Family, RelativePair, SimplicialComplex
from polyop.src.families.operations import ClosureMode, closure

FACES_KEYWORD = "faces"
FACETS_KEYWORD = "facets"


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_face(line: str) -> list[int]:
    if line == EMPTY_FACE_TOKEN:
        return []
    try:
        return [int(token) for token in line.split()]
    except ValueError as err:
        msg = f"cannot read face {line!r}"
        raise DomainError(msg) from err


def _parse_block(lines: list[str]) -> Family:
    if len(lines) < 2:  # noqa: PLR2004
        msg = "a family needs an 'n <int>' line and a faces/facets keyword"
        raise DomainError(msg)
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n" or not header[1].isdigit():  # noqa: PLR2004
        msg = f"expected 'n <int>', got {lines[0]!r}"
        raise DomainError(msg)
    ambient = int(header[1])
    keyword = lines[1]
    if keyword not in {FACES_KEYWORD, FACETS_KEYWORD}:
        msg = f"expected 'faces' or 'facets', got {keyword!r}"
        raise DomainError(msg)
    family = Family.from_faces(ambient, (_parse_face(line) for line in lines[2:]))
    if keyword == FACETS_KEYWORD:
        return closure(family, ClosureMode.DOWN)
    return family


def parse_family_text(text: str) -> Family:
    """Read a family from the text format.

    Args:
        text: The document.

    Returns:
        The family; a complex when the facets keyword was used.
    """
    return _parse_block(_content_lines(text))


def format_family_text(family: Family) -> str:
    """Write a family in the text format with canonical face order."""
    lines = [f"n {family.ambient}", FACES_KEYWORD]
    for face in family.get_faces():
        lines.append(" ".join(str(v) for v in face) if face else EMPTY_FACE_TOKEN)
    return "\n".join(lines) + "\n"


def _is_json_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _faces_from_json(faces: Any) -> list[list[int]]:
    if not isinstance(faces, list) or not all(
        isinstance(face, list) and all(_is_json_int(v) for v in face)
        for face in faces
    ):
        msg = "JSON faces must be a list of lists of integers"
        raise DomainError(msg)
    return cast("list[list[int]]", faces)


def _family_from_json(data: Any) -> Family:
    if not isinstance(data, dict) or not _is_json_int(data.get("n")):
        msg = "a JSON family needs an integer 'n'"
        raise DomainError(msg)
    if "faces" in data:
        return Family.from_faces(data["n"], _faces_from_json(data["faces"]))
    if "facets" in data:
        facets = _faces_from_json(data["facets"])
        generators = Family.from_faces(data["n"], facets)
        return closure(generators, ClosureMode.DOWN)
    msg = "a JSON family needs a 'faces' or 'facets' list"
    raise DomainError(msg)


def _family_to_json(family: Family) -> dict[str, Any]:
    return {"n": family.ambient, "faces": [list(face) for face in family.get_faces()]}


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        msg = f"invalid JSON: {err}"
        raise DomainError(msg) from err


def parse_family_json(text: str) -> Family:
    """Read a family from the JSON format."""
    return _family_from_json(_load_json(text))


def format_family_json(family: Family) -> str:
    """Write a family in the JSON format with canonical face order."""
    return json.dumps(_family_to_json(family)) + "\n"


def is_json_document(text: str) -> bool:
    """Check whether a document uses the JSON format."""
    return text.lstrip().startswith("{")


def is_pair_document(text: str) -> bool:
    """Check whether a document holds a relative pair."""
    if is_json_document(text):
        data = _load_json(text)
        return isinstance(data, dict) and "total" in data
    return PAIR_SEPARATOR in _content_lines(text)


def parse_family(text: str) -> Family:
    """Read a family from either format."""
    if is_json_document(text):
        return parse_family_json(text)
    return parse_family_text(text)


def parse_complex(text: str) -> SimplicialComplex:
    """Read a simplicial complex from either format, checking downward closure."""
    return SimplicialComplex.from_family(parse_family(text))


def parse_pair(text: str) -> RelativePair:
    """Read a relative pair from either format.

    Args:
        text: Two text blocks separated by ---, or a JSON object with
            total and sub.

    Returns:
        The relative pair.
    """
    if is_json_document(text):
        data = _load_json(text)
        if not isinstance(data, dict) or "total" not in data or "sub" not in data:
            msg = "a JSON pair needs 'total' and 'sub'"
            raise DomainError(msg)
        total = _family_from_json(data["total"])
        sub = _family_from_json(data["sub"])
    else:
        lines = _content_lines(text)
        if lines.count(PAIR_SEPARATOR) != 1:
            msg = f"a pair needs exactly one {PAIR_SEPARATOR!r} line"
            raise DomainError(msg)
        split = lines.index(PAIR_SEPARATOR)
        total = _parse_block(lines[:split])
        sub = _parse_block(lines[split + 1 :])
    return RelativePair(
        SimplicialComplex.from_family(total), SimplicialComplex.from_family(sub)
    )


def format_pair_text(pair: RelativePair) -> str:
    """Write a relative pair in the text format."""
    return (
        format_family_text(pair.total)
        + PAIR_SEPARATOR
        + "\n"
        + format_family_text(pair.sub)
    )


def format_pair_json(pair: RelativePair) -> str:
    """Write a relative pair in the JSON format."""
    document = {"total": _family_to_json(pair.total), "sub": _family_to_json(pair.sub)}
    return json.dumps(document) + "\n"
