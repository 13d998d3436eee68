"""module."""

import pytest

from polyop.src.errors import DomainError, UnsupportedDimensionError
from polyop.src.families.family import SimplicialComplex
from polyop.src.families.named import NamedComplex
from polyop.src.pl.recognition import (
    OTHER,
    UNKNOWN,
    PLClaim,
    PLKind,
    _link_at,
    _recognize_graph,
    _recognize_points,
    _recognize_surface,
    _ridge_counts,
    combinatorial_boundary,
    euler_characteristic,
    recognize_low_dim,
    skeleton_graph,
    vertex_link_claims,
)

# six vertices, ten triangles, every edge on two of them
PROJECTIVE_PLANE = SimplicialComplex.from_facets(
    6,
    [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [3, 4, 6],
        [2, 4, 5],
        [3, 5, 6],
        [2, 4, 6],
    ],
)


def _cone_disk() -> SimplicialComplex:
    return SimplicialComplex.from_facets(4, [[1, 2, 4], [2, 3, 4], [1, 3, 4]])


class TestPLKind:
    """Test class."""

    def test_values(self) -> None:
        """Test method."""
        assert [kind.value for kind in PLKind] == ["sphere", "ball", "other", "unknown"]


class TestPLClaim:
    """Test class."""

    def test_sphere(self) -> None:
        """Test method."""
        assert PLClaim.sphere(2) == PLClaim(PLKind.SPHERE, 2)

    def test_ball(self) -> None:
        """Test method."""
        assert PLClaim.ball(0).kind is PLKind.BALL
        assert PLClaim.ball(0).dimension == 0

    def test___str__(self) -> None:
        """Test method."""
        assert str(PLClaim.sphere(-1)) == "sphere(-1)"
        assert str(PLClaim.ball(3)) == "ball(3)"
        assert str(OTHER) == "other"
        assert str(UNKNOWN) == "unknown"


def test_combinatorial_boundary(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    triangle = NamedComplex.simplex(3).realized
    assert combinatorial_boundary(triangle) == boundary_triangle
    assert combinatorial_boundary(boundary_triangle) == SimplicialComplex(3)
    point = NamedComplex.point().realized
    assert combinatorial_boundary(point).is_trivial()
    cone_boundary = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [1, 3]])
    assert combinatorial_boundary(_cone_disk()) == cone_boundary
    with pytest.raises(DomainError, match="dimension ≥ 0"):
        combinatorial_boundary(SimplicialComplex(2))
    with pytest.raises(DomainError, match="dimension ≥ 0"):
        combinatorial_boundary(SimplicialComplex(2, [0]))
    with pytest.raises(DomainError, match="not pure"):
        combinatorial_boundary(SimplicialComplex.from_facets(3, [[1, 2], [3]]))
    with pytest.raises(DomainError, match="branches along 4 faces"):
        combinatorial_boundary(NamedComplex.complete_pure(4, 2).realized)


def test__ridge_counts() -> None:
    """Test function."""
    counts = _ridge_counts(NamedComplex.simplex(3).realized)
    assert dict(counts) == {0b110: 1, 0b101: 1, 0b011: 1}
    counts = _ridge_counts(_cone_disk())
    assert counts[0b1001] == 2
    assert counts[0b0011] == 1


def test_euler_characteristic(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    assert euler_characteristic(boundary_triangle) == 0
    assert euler_characteristic(NamedComplex.simplex(3).realized) == 1
    assert euler_characteristic(NamedComplex.boundary_simplex(4).realized) == 2
    assert euler_characteristic(PROJECTIVE_PLANE) == 1
    assert euler_characteristic(SimplicialComplex(2, [0])) == 0
    with pytest.raises(DomainError, match="undefined"):
        euler_characteristic(SimplicialComplex(2))


def test_skeleton_graph(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    graph = skeleton_graph(boundary_triangle)
    assert sorted(graph.nodes) == [1, 2, 3]
    assert graph.number_of_edges() == 3
    ghost = skeleton_graph(SimplicialComplex.from_facets(3, [[1, 2]]))
    assert sorted(ghost.nodes) == [1, 2]


def test__link_at(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    link = _link_at(boundary_triangle, 1)
    assert link.ambient == 3
    assert link.masks == (0, 0b010, 0b100)


def test__recognize_points() -> None:
    """Test function."""
    assert _recognize_points(NamedComplex.discrete(2).realized) == PLClaim.sphere(0)
    assert _recognize_points(NamedComplex.point().realized) == PLClaim.ball(0)
    assert _recognize_points(NamedComplex.discrete(3).realized) == OTHER


def test__recognize_graph(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    assert _recognize_graph(boundary_triangle) == PLClaim.sphere(1)
    path = SimplicialComplex.from_facets(3, [[1, 2], [2, 3]])
    assert _recognize_graph(path) == PLClaim.ball(1)
    star = SimplicialComplex.from_facets(4, [[1, 2], [1, 3], [1, 4]])
    assert _recognize_graph(star) == OTHER
    edge_and_point = SimplicialComplex.from_facets(3, [[1, 2], [3]])
    assert _recognize_graph(edge_and_point) == OTHER


def test__recognize_surface() -> None:
    """Test function."""
    sphere = NamedComplex.boundary_simplex(4).realized
    assert _recognize_surface(sphere) == PLClaim.sphere(2)
    assert _recognize_surface(_cone_disk()) == PLClaim.ball(2)
    strip = SimplicialComplex.from_facets(4, [[1, 2, 3], [2, 3, 4]])
    assert _recognize_surface(strip) == PLClaim.ball(2)
    bowtie = SimplicialComplex.from_facets(5, [[1, 2, 3], [3, 4, 5]])
    assert _recognize_surface(bowtie) == OTHER
    flagged = SimplicialComplex.from_facets(4, [[1, 2, 3], [3, 4]])
    assert _recognize_surface(flagged) == OTHER
    assert _recognize_surface(PROJECTIVE_PLANE) == OTHER


def test_recognize_low_dim(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    assert recognize_low_dim(boundary_triangle) == PLClaim.sphere(1)
    boundary = NamedComplex.boundary_simplex(4).realized
    assert recognize_low_dim(boundary) == PLClaim.sphere(2)
    assert recognize_low_dim(NamedComplex.simplex(3).realized) == PLClaim.ball(2)
    assert recognize_low_dim(NamedComplex.complete_pure(4, 2).realized) == OTHER
    assert recognize_low_dim(SimplicialComplex(3, [0])) == PLClaim.sphere(-1)
    assert recognize_low_dim(SimplicialComplex(3)) == OTHER
    with pytest.raises(UnsupportedDimensionError, match="dimension 2, got 3"):
        recognize_low_dim(NamedComplex.simplex(4).realized)


def test_vertex_link_claims(boundary_triangle: SimplicialComplex) -> None:
    """Test function."""
    sphere = NamedComplex.boundary_simplex(4).realized
    assert vertex_link_claims(sphere) == dict.fromkeys(
        (1, 2, 3, 4), PLClaim.sphere(1)
    )
    assert vertex_link_claims(boundary_triangle) == dict.fromkeys(
        (1, 2, 3), PLClaim.sphere(0)
    )
    ghost = SimplicialComplex.from_facets(3, [[1, 2]])
    assert set(vertex_link_claims(ghost)) == {1, 2}
