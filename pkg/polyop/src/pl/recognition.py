"""Exact PL sphere and ball recognition for complexes of dimension at most two.

Ghost vertices are ignored throughout. Connectivity is decided on the
1-skeleton with networkx.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum

import networkx as nx

from polyop.src.consts import RECOGNIZER_MAX_DIM
from polyop.src.errors import DomainError, UnsupportedDimensionError
from polyop.src.families.family import SimplicialComplex, downward_closure_masks
from polyop.src.families.operations import dimension, facets, is_pure
from polyop.src.utils import bit, iter_members

logger = logging.getLogger(__name__)


class PLKind(StrEnum):
    """What a complex is known to be, up to PL homeomorphism."""

    SPHERE = "sphere"
    BALL = "ball"
    OTHER = "other"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PLClaim:
    """A claim "K is a PL sphere or ball of some dimension".

    Attributes:
        kind: sphere, ball, other or unknown.
        dimension: The dimension the claim is about; None for other and
            unknown.
    """

    kind: PLKind
    dimension: int | None = None

    @classmethod
    def sphere(cls, dim: int) -> "PLClaim":
        """Claim a PL sphere of dimension dim."""
        return cls(PLKind.SPHERE, dim)

    @classmethod
    def ball(cls, dim: int) -> "PLClaim":
        """Claim a PL ball of dimension dim."""
        return cls(PLKind.BALL, dim)

    def __str__(self) -> str:
        """Render as sphere(d), ball(d), other or unknown."""
        if self.dimension is None:
            return str(self.kind)
        return f"{self.kind}({self.dimension})"


OTHER = PLClaim(PLKind.OTHER)
UNKNOWN = PLClaim(PLKind.UNKNOWN)


def combinatorial_boundary(complex_: SimplicialComplex) -> SimplicialComplex:
    """Get the closure of the codimension-one faces lying in a single facet.

    Args:
        complex_: A pure complex of dimension d ≥ 0 in which every
            (d-1)-face lies in at most two facets.

    Returns:
        The boundary on the same ambient; ∅ for a closed pseudomanifold and
        {∅} for a point.

    Raises:
        DomainError: If K is empty, {∅}, not pure, or branches.
    """
    dim = dimension(complex_)
    if dim is None or dim < 0:
        msg = f"the boundary needs a complex of dimension ≥ 0, got {complex_}"
        raise DomainError(msg)
    if not is_pure(complex_):
        msg = f"{complex_} is not pure"
        raise DomainError(msg)
    counts = _ridge_counts(complex_)
    branching = [ridge for ridge, count in counts.items() if count > 2]  # noqa: PLR2004
    if branching:
        msg = f"{complex_} branches along {len(branching)} faces"
        raise DomainError(msg)
    free = [ridge for ridge, count in counts.items() if count == 1]
    return SimplicialComplex(
        complex_.ambient, downward_closure_masks(free), validate=False
    )


def _ridge_counts(complex_: SimplicialComplex) -> Counter[int]:
    counts: Counter[int] = Counter()
    for facet in facets(complex_):
        for position in iter_members(facet):
            counts[facet ^ bit(position)] += 1
    return counts


def euler_characteristic(complex_: SimplicialComplex) -> int:
    """Get the alternating count of nonempty faces.

    Args:
        complex_: A nonempty complex.

    Returns:
        Σ (-1)^dim F over the nonempty faces F.

    Raises:
        DomainError: If K is the empty complex.
    """
    if complex_.is_empty():
        msg = "the Euler characteristic of the empty complex is undefined"
        raise DomainError(msg)
    return sum(
        1 if mask.bit_count() % 2 else -1 for mask in complex_.masks if mask
    )


def skeleton_graph(complex_: SimplicialComplex) -> nx.Graph:
    """Get the 1-skeleton on the non-ghost vertices."""
    graph = nx.Graph()
    graph.add_nodes_from(complex_.vertices)
    edges = [mask for mask in complex_.masks if mask.bit_count() == 2]  # noqa: PLR2004
    graph.add_edges_from(tuple(iter_members(mask)) for mask in edges)
    return graph


def _link_at(complex_: SimplicialComplex, vertex: int) -> SimplicialComplex:
    marker = bit(vertex)
    return SimplicialComplex(
        complex_.ambient,
        (mask ^ marker for mask in complex_.masks if mask & marker),
        validate=False,
    )


def _recognize_points(complex_: SimplicialComplex) -> PLClaim:
    count = len(complex_.vertices)
    if count == 2:  # noqa: PLR2004
        return PLClaim.sphere(0)
    if count == 1:
        return PLClaim.ball(0)
    return OTHER


def _recognize_graph(complex_: SimplicialComplex) -> PLClaim:
    graph = skeleton_graph(complex_)
    if not nx.is_connected(graph) or any(
        degree == 0 for _, degree in graph.degree()
    ):
        return OTHER
    degrees = Counter(degree for _, degree in graph.degree())
    if set(degrees) == {2}:
        return PLClaim.sphere(1)
    if degrees[1] == 2 and set(degrees) <= {1, 2}:  # noqa: PLR2004
        return PLClaim.ball(1)
    return OTHER


def _recognize_surface(complex_: SimplicialComplex) -> PLClaim:
    if not is_pure(complex_) or not nx.is_connected(skeleton_graph(complex_)):
        return OTHER
    counts = _ridge_counts(complex_)
    if any(count > 2 for count in counts.values()):  # noqa: PLR2004
        return OTHER
    for vertex in complex_.vertices:
        claim = _recognize_graph(_link_at(complex_, vertex))
        if claim.kind is PLKind.OTHER:
            logger.debug("link of %d in %s is not a circle or arc", vertex, complex_)
            return OTHER
    chi = euler_characteristic(complex_)
    boundary_edges = [edge for edge, count in counts.items() if count == 1]
    if not boundary_edges:
        return PLClaim.sphere(2) if chi == 2 else OTHER  # noqa: PLR2004
    boundary = SimplicialComplex(
        complex_.ambient, downward_closure_masks(boundary_edges), validate=False
    )
    if chi == 1 and _recognize_graph(boundary) == PLClaim.sphere(1):
        return PLClaim.ball(2)
    return OTHER


def recognize_low_dim(complex_: SimplicialComplex) -> PLClaim:
    """Decide whether a complex of dimension ≤ 2 is a PL sphere or ball.

    In dimension 0 two points form a sphere and one point a ball. In
    dimension 1 the graph must be connected with every vertex on an edge;
    a cycle is a sphere and a path a ball. In dimension 2 the complex must
    be pure and connected with every vertex link a circle or an arc; it is
    a sphere when closed with χ = 2 and a ball when its boundary is one
    circle and χ = 1.

    Args:
        complex_: A complex of dimension at most two.

    Returns:
        The verdict; {∅} is the (-1)-sphere and ∅ is never a sphere or ball.

    Raises:
        UnsupportedDimensionError: If dim K > 2.
    """
    dim = dimension(complex_)
    if dim is None:
        return OTHER
    if dim > RECOGNIZER_MAX_DIM:
        msg = f"recognition stops at dimension {RECOGNIZER_MAX_DIM}, got {dim}"
        raise UnsupportedDimensionError(msg)
    recognizers = {
        -1: lambda _: PLClaim.sphere(-1),
        0: _recognize_points,
        1: _recognize_graph,
        2: _recognize_surface,
    }
    claim = recognizers[dim](complex_)
    logger.debug("%s recognized as %s", complex_, claim)
    return claim


def vertex_link_claims(complex_: SimplicialComplex) -> dict[int, PLClaim]:
    """Recognize the link of every non-ghost vertex.

    Args:
        complex_: A complex of dimension at most three.

    Returns:
        The verdict per vertex.
    """
    return {
        vertex: recognize_low_dim(_link_at(complex_, vertex))
        for vertex in complex_.vertices
    }
