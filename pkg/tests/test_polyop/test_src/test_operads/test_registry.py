"""module."""

import pytest

from polyop.src.errors import DomainError
from polyop.src.operads.registry import (
    OPERAD_CLASSES,
    get_all_operads,
    get_operad,
    get_operad_names,
)
from polyop.src.operads.scpx import SubstitutionOperad


def test_get_operad_names() -> None:
    """Test function."""
    names = get_operad_names()
    assert len(names) == len(set(names)) == len(OPERAD_CLASSES) == 18
    assert names[0] == "perm"
    assert "relscpx-join" in names


def test_get_all_operads() -> None:
    """Test function."""
    operads = get_all_operads()
    assert [inst.name for inst in operads] == get_operad_names()


def test_get_operad() -> None:
    """Test function."""
    assert isinstance(get_operad("scpx-subst"), SubstitutionOperad)
    with pytest.raises(DomainError, match="unknown operad 'nope'"):
        get_operad("nope")
