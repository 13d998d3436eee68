"""module."""

import os

import pytest
from pytest_mock import MockerFixture

from polyop.src.consts import AMBIENT_CAP_ENV_VAR
from polyop.src.families.family import SimplicialComplex
from polyop.src.utils import get_ambient_cap


@pytest.mark.usefixtures("fresh_config")
def test_fresh_config(mocker: MockerFixture) -> None:
    """Test function."""
    mocker.patch.dict(os.environ, {AMBIENT_CAP_ENV_VAR: "7"})
    assert get_ambient_cap() == 7


def test_small_complexes(small_complexes: list[SimplicialComplex]) -> None:
    """Test function."""
    assert len(small_complexes) == 3 + 6 + 20
    assert {complex_.ambient for complex_ in small_complexes} == {1, 2, 3}


def test_nondegenerate_complexes(
    nondegenerate_complexes: list[SimplicialComplex],
) -> None:
    """Test function."""
    assert len(nondegenerate_complexes) == 1 + 4 + 18
    assert not any(complex_.is_trivial() for complex_ in nondegenerate_complexes)


def test_boundary_triangle(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    assert len(boundary_triangle) == 7
    assert boundary_triangle.vertices == (1, 2, 3)
