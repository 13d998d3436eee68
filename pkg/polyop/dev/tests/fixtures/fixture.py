"""Fixtures for testing.

This module provides custom fixtures for pytest that can be plugged into tests
across the entire test suite.
All fixtures defined under the fixtures package are auto plugged in automatically
by pyrig via the pytest_plugins mechanism.
"""

from collections.abc import Iterator

import pytest

from polyop.src.families.enumeration import enumerate_complexes
from polyop.src.families.family import SimplicialComplex
from polyop.src.families.named import NamedComplex
from polyop.src.utils import get_ambient_cap, get_decompose_bound


@pytest.fixture
def fresh_config() -> Iterator[None]:
    """Forget cached environment settings before and after a test."""
    get_ambient_cap.cache_clear()
    get_decompose_bound.cache_clear()
    yield
    get_ambient_cap.cache_clear()
    get_decompose_bound.cache_clear()


@pytest.fixture
def small_complexes() -> list[SimplicialComplex]:
    """Get every complex on [1], [2] and [3]."""
    return [
        complex_ for ambient in (1, 2, 3) for complex_ in enumerate_complexes(ambient)
    ]


@pytest.fixture
def nondegenerate_complexes() -> list[SimplicialComplex]:
    """Get every complex on [1], [2] and [3] other than ∅ and {∅}."""
    return [
        complex_
        for ambient in (1, 2, 3)
        for complex_ in enumerate_complexes(ambient)
        if not complex_.is_empty() and not complex_.is_trivial()
    ]


@pytest.fixture
def boundary_triangle() -> SimplicialComplex:
    """Get ∂Δ_[3], the 3-cycle."""
    return NamedComplex.boundary_simplex(3).realized
