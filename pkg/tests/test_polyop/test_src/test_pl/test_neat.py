"""module."""

import pytest

from polyop.src.consts import RECOGNIZER_MAX_DIM
from polyop.src.errors import DomainError
from polyop.src.families.family import RelativePair, SimplicialComplex
from polyop.src.families.named import NamedComplex
from polyop.src.pl.certificates import (
    ProvenanceRule,
    boundary_certificate,
    format_provenance,
    simplex_certificate,
)
from polyop.src.pl.neat import (
    NeatPair,
    interior_vertices,
    neat_compose,
    neat_violations,
)
from polyop.src.pl.recognition import (
    PLClaim,
    combinatorial_boundary,
    recognize_low_dim,
)


def _cone_pair() -> RelativePair:
    return RelativePair(
        SimplicialComplex.from_facets(4, [[1, 2, 4], [2, 3, 4], [1, 3, 4]]),
        SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [1, 3]]),
    )


def _simplex_pair(ambient: int) -> RelativePair:
    return RelativePair(
        NamedComplex.simplex(ambient).realized,
        NamedComplex.boundary_simplex(ambient).realized,
    )


def test_interior_vertices() -> None:
    """Test function."""
    assert interior_vertices(_cone_pair()) == (4,)
    assert interior_vertices(_simplex_pair(3)) == ()


def test_neat_violations() -> None:
    """Test function."""
    assert neat_violations(_simplex_pair(3)) == []
    assert neat_violations(_simplex_pair(1)) == []
    assert neat_violations(_cone_pair()) == ["interior vertices (4,)"]
    wrong_sub = RelativePair(
        NamedComplex.simplex(2).realized, SimplicialComplex(2, [0])
    )
    problems = neat_violations(wrong_sub)
    assert len(problems) == 2
    assert "is not the boundary" in problems[0]
    empty = RelativePair(SimplicialComplex(2), SimplicialComplex(2))
    assert len(neat_violations(empty)) == 1
    ghost_point = RelativePair(
        SimplicialComplex.from_facets(2, [[1]]), SimplicialComplex(2, [0])
    )
    assert neat_violations(ghost_point) == ["a point is neat only as (pt, {∅}) on [1]"]


class TestNeatPair:
    """Test class."""

    def test___post_init__(self) -> None:
        """Test method."""
        pair = _simplex_pair(3)
        neat = NeatPair(pair, simplex_certificate(3), boundary_certificate(3))
        assert neat.pair == pair
        with pytest.raises(DomainError, match="ball\\(1\\) does not certify a 2-ball"):
            NeatPair(pair, simplex_certificate(2), boundary_certificate(3))
        with pytest.raises(DomainError, match="does not certify ∂B"):
            NeatPair(pair, simplex_certificate(3), boundary_certificate(2))
        with pytest.raises(DomainError, match="not a neat pair"):
            NeatPair(_cone_pair(), simplex_certificate(3), boundary_certificate(3))

    def test_simplex(self) -> None:
        """Test method."""
        neat = NeatPair.simplex(3)
        assert neat.pair == _simplex_pair(3)
        assert neat.certificate.claim == PLClaim.ball(2)
        assert neat.boundary_certificate.claim == PLClaim.sphere(1)

    def test_unit(self) -> None:
        """Test method."""
        unit = NeatPair.unit()
        assert unit.ambient == 1
        assert unit.dimension == 0
        assert unit.pair.sub.is_trivial()

    def test_from_pair(self, boundary_triangle: SimplicialComplex) -> None:
        """Test method."""
        neat = NeatPair.from_pair(_simplex_pair(3))
        assert neat.certificate.provenance.rule is ProvenanceRule.RECOGNIZER
        assert neat.boundary_certificate.claim == PLClaim.sphere(1)
        assert neat.boundary_certificate.provenance.rule is (
            ProvenanceRule.BALL_BOUNDARY
        )
        given = NeatPair.from_pair(_simplex_pair(3), simplex_certificate(3))
        assert given.certificate == simplex_certificate(3)
        closed = RelativePair(boundary_triangle, SimplicialComplex(3))
        with pytest.raises(DomainError, match="not certified as a ball"):
            NeatPair.from_pair(closed)
        with pytest.raises(DomainError, match="not a neat pair"):
            NeatPair.from_pair(_cone_pair())

    def test_ambient(self) -> None:
        """Test method."""
        assert NeatPair.simplex(4).ambient == 4

    def test_dimension(self) -> None:
        """Test method."""
        assert NeatPair.simplex(4).dimension == 3

    def test_with_ghost_vertex(self) -> None:
        """Test method."""
        edge = NeatPair.simplex(2)
        shifted = edge.with_ghost_vertex(1)
        assert shifted.ambient == 3
        assert shifted.pair.total == SimplicialComplex.from_facets(3, [[2, 3]])
        assert shifted.pair.total.ghost_vertices() == (1,)
        assert shifted.pair.sub == SimplicialComplex.from_facets(3, [[2], [3]])
        last = edge.with_ghost_vertex(3)
        assert last.pair.total == SimplicialComplex.from_facets(3, [[1, 2]])
        assert last.dimension == 1
        with pytest.raises(DomainError, match="not a neat pair"):
            NeatPair.unit().with_ghost_vertex(1)
        with pytest.raises(DomainError):
            edge.with_ghost_vertex(4)


def test_neat_compose() -> None:
    """Test function."""
    edge = NeatPair.simplex(2)
    composite = neat_compose(edge, 1, edge)
    assert composite.pair == _simplex_pair(3)
    assert composite.certificate.claim == PLClaim.ball(2)
    assert composite.boundary_certificate.claim == PLClaim.sphere(1)
    assert format_provenance(composite.certificate).splitlines() == [
        "ball(2) <- neat_compose: ∘1",
        "  ball(1) <- simplex: Δ_[2]",
        "  ball(1) <- simplex: Δ_[2]",
    ]
    # composing at a ghost suspends the outer ball
    ghosted = edge.with_ghost_vertex(3)
    suspension = neat_compose(ghosted, 3, edge)
    assert suspension.pair.total == SimplicialComplex.from_facets(
        4, [[1, 2, 3], [1, 2, 4]]
    )
    assert suspension.pair.sub == SimplicialComplex.from_facets(
        4, [[1, 3], [2, 3], [1, 4], [2, 4]]
    )
    assert suspension.dimension == 2
    unit = NeatPair.unit()
    assert neat_compose(unit, 1, edge).pair == edge.pair
    assert neat_compose(edge, 2, unit).pair == edge.pair
    for outer_size in range(1, 4):
        for inner_size in range(1, 4):
            size = outer_size + inner_size - 1
            for slot in range(1, outer_size + 1):
                glued = neat_compose(
                    NeatPair.simplex(outer_size), slot, NeatPair.simplex(inner_size)
                )
                assert glued.pair == _simplex_pair(size)
                assert combinatorial_boundary(glued.pair.total) == glued.pair.sub
                assert glued.dimension == size - 1
                if size - 1 <= RECOGNIZER_MAX_DIM:
                    ball = recognize_low_dim(glued.pair.total)
                    assert ball == PLClaim.ball(size - 1)
                if size - 2 <= RECOGNIZER_MAX_DIM:
                    sphere = recognize_low_dim(glued.pair.sub)
                    assert sphere == PLClaim.sphere(size - 2)
