"""module."""

import json

import pytest

from polyop.src.errors import DomainError
from polyop.src.families.family import Family, RelativePair, SimplicialComplex
from polyop.src.families.formats import (
    _content_lines,
    _faces_from_json,
    _family_from_json,
    _family_to_json,
    _is_json_int,
    _load_json,
    _parse_block,
    _parse_face,
    format_family_json,
    format_family_text,
    format_pair_json,
    format_pair_text,
    is_json_document,
    is_pair_document,
    parse_complex,
    parse_family,
    parse_family_json,
    parse_family_text,
    parse_pair,
)
from polyop.src.families.named import NamedComplex

TRIANGLE_TEXT = """\
# the boundary of a triangle
n 3
facets
1 2
2 3
1 3
"""

PAIR_TEXT = """\
n 2
facets
1 2
---
n 2
faces
-
1
"""


def test__content_lines() -> None:
    """Test function."""
    assert _content_lines("# note\n\nn 2  # size\nfaces\n") == ["n 2", "faces"]


def test__parse_face() -> None:
    """Test function."""
    assert _parse_face("-") == []
    assert _parse_face("3 1") == [3, 1]
    with pytest.raises(DomainError, match="cannot read face"):
        _parse_face("1 x")


def test__parse_block() -> None:
    """Test function."""
    assert _parse_block(["n 2", "faces", "1"]).masks == (1,)
    with pytest.raises(DomainError, match="needs an 'n <int>' line"):
        _parse_block(["n 2"])
    with pytest.raises(DomainError, match="expected 'n <int>'"):
        _parse_block(["size 2", "faces"])
    with pytest.raises(DomainError, match="expected 'faces' or 'facets'"):
        _parse_block(["n 2", "members"])


def test_parse_family_text(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    parsed = parse_family_text(TRIANGLE_TEXT)
    assert isinstance(parsed, SimplicialComplex)
    assert parsed == boundary_triangle
    assert parse_family_text("n 2\nfaces\n").is_empty()


def test_format_family_text() -> None:
    """Test function."""
    family = Family(2, [0b11, 0, 0b10])
    assert format_family_text(family) == "n 2\nfaces\n-\n2\n1 2\n"
    assert parse_family_text(format_family_text(family)) == family


def test__is_json_int() -> None:
    """Test function."""
    assert _is_json_int(3)
    assert not _is_json_int(value=True)
    assert not _is_json_int(1.0)


def test__faces_from_json() -> None:
    """Test function."""
    assert _faces_from_json([[], [1, 2]]) == [[], [1, 2]]
    with pytest.raises(DomainError, match="lists of integers"):
        _faces_from_json([[1], [None]])


def test__family_from_json() -> None:
    """Test function."""
    assert _family_from_json({"n": 2, "faces": [[2]]}).masks == (2,)
    closed = _family_from_json({"n": 2, "facets": [[1, 2]]})
    assert len(closed) == 4
    with pytest.raises(DomainError, match="integer 'n'"):
        _family_from_json({"faces": []})
    with pytest.raises(DomainError, match="'faces' or 'facets'"):
        _family_from_json({"n": 1})
    with pytest.raises(DomainError, match="integer 'n'"):
        _family_from_json({"n": True, "faces": []})
    for faces in ([["a"]], [1], [[1.5]], [[True]], "12"):
        with pytest.raises(DomainError, match="lists of integers"):
            _family_from_json({"n": 2, "faces": faces})
        with pytest.raises(DomainError, match="lists of integers"):
            _family_from_json({"n": 2, "facets": faces})


def test__family_to_json() -> None:
    """Test function."""
    assert _family_to_json(Family(2, [3, 0])) == {"n": 2, "faces": [[], [1, 2]]}


def test__load_json() -> None:
    """Test function."""
    assert _load_json('{"n": 1}') == {"n": 1}
    with pytest.raises(DomainError, match="invalid JSON"):
        _load_json("{n: 1}")


def test_parse_family_json() -> None:
    """Test function."""
    family = parse_family_json('{"n": 3, "faces": [[], [1], [1, 2]]}')
    assert str(family) == "{∅,{1},{1,2}}"


def test_format_family_json() -> None:
    """Test function."""
    text = format_family_json(NamedComplex.point().realized)
    assert json.loads(text) == {"n": 1, "faces": [[], [1]]}
    assert text.endswith("\n")


def test_is_json_document() -> None:
    """Test function."""
    assert is_json_document('  {"n": 1}')
    assert not is_json_document("n 1\nfaces\n")


def test_is_pair_document() -> None:
    """Test function."""
    assert is_pair_document(PAIR_TEXT)
    assert not is_pair_document(TRIANGLE_TEXT)
    assert is_pair_document('{"total": {}, "sub": {}}')
    assert not is_pair_document('{"n": 1, "faces": []}')


def test_parse_family() -> None:
    """Test function."""
    text_form = parse_family("n 1\nfaces\n-\n")
    json_form = parse_family('{"n": 1, "faces": [[]]}')
    assert text_form == json_form


def test_parse_complex() -> None:
    """Test function."""
    assert isinstance(parse_complex("n 1\nfaces\n-\n1\n"), SimplicialComplex)
    with pytest.raises(DomainError, match="not downward closed"):
        parse_complex("n 2\nfaces\n1 2\n")


def test_parse_pair() -> None:
    """Test function."""
    pair = parse_pair(PAIR_TEXT)
    assert len(pair.total) == 4
    assert pair.sub.masks == (0, 1)
    assert parse_pair(format_pair_json(pair)) == pair
    with pytest.raises(DomainError, match="exactly one"):
        parse_pair(TRIANGLE_TEXT)
    with pytest.raises(DomainError, match="'total' and 'sub'"):
        parse_pair('{"total": {"n": 1, "faces": []}}')
    with pytest.raises(DomainError, match="not a subcomplex"):
        parse_pair("n 1\nfaces\n---\nn 1\nfaces\n-\n")


def test_format_pair_text() -> None:
    """Test function."""
    pair = RelativePair(SimplicialComplex(1, [0]), SimplicialComplex(1))
    assert format_pair_text(pair) == "n 1\nfaces\n-\n---\nn 1\nfaces\n"
    assert parse_pair(format_pair_text(pair)) == pair


def test_format_pair_json() -> None:
    """Test function."""
    pair = RelativePair(SimplicialComplex(1, [0]), SimplicialComplex(1))
    assert json.loads(format_pair_json(pair)) == {
        "total": {"n": 1, "faces": [[]]},
        "sub": {"n": 1, "faces": []},
    }
