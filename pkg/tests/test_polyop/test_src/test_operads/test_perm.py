"""module."""

import pytest

from polyop.src.errors import DomainError
from polyop.src.operads.perm import PermElement, PermOperad, perm_compose


class TestPermElement:
    """Test class."""

    def test___post_init__(self) -> None:
        """Test method."""
        assert PermElement(3, 3).value == 3
        with pytest.raises(DomainError, match="no element 4"):
            PermElement(3, 4)
        with pytest.raises(DomainError):
            PermElement(0, 0)

    def test___str__(self) -> None:
        """Test method."""
        assert str(PermElement(4, 3)) == "3∈[4]"


def test_perm_compose() -> None:
    """Test function."""
    outer = PermElement(4, 3)
    inner = PermElement(3, 2)
    assert perm_compose(outer, 2, inner) == PermElement(6, 5)
    assert perm_compose(outer, 3, inner) == PermElement(6, 4)
    assert perm_compose(outer, 4, inner) == PermElement(6, 3)
    with pytest.raises(DomainError, match="out of range"):
        perm_compose(outer, 5, inner)


class TestPermOperad:
    """Test class."""

    def test_arity(self) -> None:
        """Test method."""
        assert PermOperad().arity(PermElement(5, 1)) == 5

    def test_compose(self) -> None:
        """Test method."""
        inst = PermOperad()
        unit = inst.get_unit()
        for element in inst.enumerate_arity(3):
            assert inst.compose(unit, 1, element) == element
            for slot in range(1, 4):
                assert inst.compose(element, slot, unit) == element

    def test_act(self) -> None:
        """Test method."""
        inst = PermOperad()
        assert inst.act(PermElement(3, 1), (2, 3, 1)) == PermElement(3, 2)
        with pytest.raises(DomainError):
            inst.act(PermElement(3, 1), (1, 2))

    def test_enumerate_arity(self) -> None:
        """Test method."""
        assert [e.value for e in PermOperad().enumerate_arity(3)] == [1, 2, 3]

    def test_get_unit(self) -> None:
        """Test method."""
        assert PermOperad().get_unit() == PermElement(1, 1)
