"""module."""

import pytest

from polyop.src.errors import DomainError, PreconditionError
from polyop.src.families.family import Family, SimplicialComplex
from polyop.src.families.named import NamedComplex
from polyop.src.families.operations import (
    ClosureMode,
    ComplementMode,
    ExtremalMode,
    FamilyFlags,
    NonFaceMode,
    classify,
    closure,
    complement,
    dimension,
    extremal_masks,
    extremals,
    facets,
    is_pure,
    is_transversal,
    join,
    non_faces,
    power_set,
    rebuild,
    relabel,
    slot_join,
)


class TestClosureMode:
    """Test class."""

    def test_values(self) -> None:
        """Test method."""
        assert {mode.value for mode in ClosureMode} == {"down", "reduced_down", "up"}


class TestComplementMode:
    """Test class."""

    def test_values(self) -> None:
        """Test method."""
        assert ComplementMode("derived") is ComplementMode.DERIVED


class TestExtremalMode:
    """Test class."""

    def test_values(self) -> None:
        """Test method."""
        assert ExtremalMode("minimal") is ExtremalMode.MINIMAL


class TestNonFaceMode:
    """Test class."""

    def test_values(self) -> None:
        """Test method."""
        assert NonFaceMode("mnu") is NonFaceMode.MNU


class TestFamilyFlags:
    """Test class."""

    def test_fields(self) -> None:
        """Test method."""
        flags = FamilyFlags(
            is_simplicial=True, is_upward=False, is_transversal=False, is_reduced=False
        )
        assert flags.is_simplicial
        assert not flags.is_upward


def test_power_set() -> None:
    """Test function."""
    assert len(power_set(3)) == 8
    assert power_set(0).is_trivial()


def test_closure() -> None:
    """Test function."""
    top = Family(2, [0b11])
    down = closure(top, ClosureMode.DOWN)
    assert isinstance(down, SimplicialComplex)
    assert down.masks == (0, 1, 2, 3)
    assert closure(top, ClosureMode.REDUCED_DOWN).masks == (1, 2, 3)
    assert closure(Family(2, [0b01]), ClosureMode.UP).masks == (1, 3)
    with pytest.raises(DomainError, match="reduced closure"):
        closure(Family(2, [0, 1]), ClosureMode.REDUCED_DOWN)
    with pytest.raises(DomainError):
        closure(Family(2), ClosureMode.REDUCED_DOWN)


def test_complement() -> None:
    """Test function."""
    family = Family(2, [0, 0b01])
    assert complement(family, ComplementMode.FACES).masks == (0b10, 0b11)
    assert complement(family, ComplementMode.POINTWISE).masks == (0b10, 0b11)
    assert complement(Family(2, [0b01]), ComplementMode.POINTWISE).masks == (0b10,)
    assert complement(family, ComplementMode.DERIVED, 1) == complement(
        family, ComplementMode.FACES
    )
    assert complement(family, ComplementMode.DERIVED, 2) == complement(
        family, ComplementMode.POINTWISE
    )
    with pytest.raises(DomainError, match="level must be 1 or 2"):
        complement(family, ComplementMode.DERIVED, 3)


def test_extremal_masks() -> None:
    """Test function."""
    masks = (0, 0b01, 0b10, 0b100, 0b11)
    assert sorted(extremal_masks(masks, ExtremalMode.MAXIMAL)) == [0b11, 0b100]
    assert extremal_masks(masks, ExtremalMode.MINIMAL) == [0]
    assert extremal_masks((), ExtremalMode.MAXIMAL) == []


def test_extremals() -> None:
    """Test function."""
    family = Family(3, [0b01, 0b11, 0b100])
    assert extremals(family, ExtremalMode.MAXIMAL).masks == (0b100, 0b11)
    assert extremals(family, ExtremalMode.MINIMAL).masks == (0b01, 0b100)


def test_facets(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    assert facets(boundary_triangle).get_faces() == ((1, 2), (1, 3), (2, 3))
    assert facets(SimplicialComplex(2, [0])).is_trivial()


def test_non_faces(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    assert non_faces(boundary_triangle, NonFaceMode.MNF).get_faces() == ((1, 2, 3),)
    assert non_faces(SimplicialComplex(2), NonFaceMode.MNF).is_trivial()
    assert non_faces(SimplicialComplex(2, [0]), NonFaceMode.MNF).masks == (1, 2)
    assert non_faces(Family(2, [0b01, 0b11]), NonFaceMode.MNU).masks == (0b10,)
    assert non_faces(Family(2), NonFaceMode.MNU).masks == (0b11,)
    with pytest.raises(DomainError, match="downward-closed"):
        non_faces(Family(2, [0b11]), NonFaceMode.MNF)
    with pytest.raises(DomainError, match="upward-closed"):
        non_faces(Family(2, [0]), NonFaceMode.MNU)


def test_classify() -> None:
    """Test function."""
    flags = classify(Family(2, [0b01]))
    assert flags == FamilyFlags(
        is_simplicial=False, is_upward=False, is_transversal=True, is_reduced=True
    )
    full = classify(power_set(2))
    assert full.is_simplicial
    assert full.is_upward
    assert not full.is_transversal
    assert not full.is_reduced
    empty = classify(Family(2))
    assert empty.is_simplicial
    assert empty.is_upward
    assert empty.is_transversal


def test_is_transversal() -> None:
    """Test function."""
    assert is_transversal(Family(3, [0b011, 0b110]))
    assert not is_transversal(Family(3, [0b010, 0b110]))


def test_dimension() -> None:
    """Test function."""
    assert dimension(SimplicialComplex(2)) is None
    assert dimension(SimplicialComplex(2, [0])) == -1
    assert dimension(power_set(3)) == 2


def test_is_pure() -> None:
    """Test function."""
    assert is_pure(NamedComplex.complete_pure(4, 2).realized)
    mixed = SimplicialComplex.from_facets(3, [[1, 2], [3]])
    assert not is_pure(mixed)


def test_relabel() -> None:
    """Test function."""
    point = SimplicialComplex(2, [0, 0b01])
    moved = relabel(point, (2, 1))
    assert isinstance(moved, SimplicialComplex)
    assert moved.masks == (0, 0b10)
    assert relabel(Family(3, [0b011]), (3, 1, 2)).masks == (0b101,)
    with pytest.raises(DomainError):
        relabel(point, (1, 2, 3))


def test_rebuild() -> None:
    """Test function."""
    rebuilt = rebuild(SimplicialComplex(1, [0]), 2, [0, 1])
    assert isinstance(rebuilt, SimplicialComplex)
    assert rebuilt.ambient == 2
    plain = rebuild(Family(1), 2, {3})
    assert type(plain) is Family


def test_join() -> None:
    """Test function."""
    point = NamedComplex.point().realized
    assert join(point, point) == power_set(2)
    assert join(point, SimplicialComplex(2)).is_empty()
    assert join(SimplicialComplex(0, [0]), point) == point
    assert len(join(point, SimplicialComplex(2, [0]))) == 2


def test_slot_join() -> None:
    """Test function."""
    outer = SimplicialComplex(2, [0, 0b01])
    point = NamedComplex.point().realized
    assert slot_join(outer, point, 2) == power_set(2)
    with pytest.raises(PreconditionError, match="not a ghost vertex"):
        slot_join(outer, point, 1)
    with pytest.raises(DomainError, match="out of range"):
        slot_join(outer, point, 3)
