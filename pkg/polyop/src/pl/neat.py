"""Neat PL pairs and their composition under the simplicial join operad.

A neat pair (B, ∂B) is a PL ball with its boundary sphere in which every
vertex of B lies on ∂B. The point (pt, {∅}) is the unit and the only
neat pair of dimension zero.
"""

import logging
from dataclasses import dataclass
from typing import Self

from polyop.src.errors import ConsistencyError, DomainError
from polyop.src.families.family import RelativePair, SimplicialComplex
from polyop.src.families.named import NamedComplex
from polyop.src.families.operations import dimension
from polyop.src.operads.relscpx import join_compose
from polyop.src.pl.certificates import (
    PLCertificate,
    ProvenanceNode,
    ProvenanceRule,
    ball_boundary_certificate,
    boundary_certificate,
    certify_complex,
    confirm_claim,
    simplex_certificate,
)
from polyop.src.pl.recognition import (
    PLClaim,
    PLKind,
    combinatorial_boundary,
)
from polyop.src.utils import check_ambient, check_slot, open_position

logger = logging.getLogger(__name__)


def interior_vertices(pair: RelativePair) -> tuple[int, ...]:
    """Get the vertices of B that do not lie on ∂B."""
    boundary = set(pair.sub.vertices)
    return tuple(vertex for vertex in pair.total.vertices if vertex not in boundary)


def neat_violations(pair: RelativePair) -> list[str]:
    """List the ways a pair fails to be neat, ignoring certificates.

    Args:
        pair: The candidate (B, ∂B).

    Returns:
        Empty when ∂B is the combinatorial boundary of B and, for B of
        dimension at least one, B has no interior vertex.
    """
    try:
        boundary = combinatorial_boundary(pair.total)
    except DomainError as error:
        return [str(error)]
    problems = []
    if boundary != pair.sub:
        problems.append(f"{pair.sub} is not the boundary {boundary}")
    dim = dimension(pair.total)
    if dim == 0 and pair.ambient != 1:
        problems.append("a point is neat only as (pt, {∅}) on [1]")
    elif dim is not None and dim >= 1 and interior_vertices(pair):
        problems.append(f"interior vertices {interior_vertices(pair)}")
    return problems


@dataclass(frozen=True)
class NeatPair:
    """A neat PL pair with certificates for the ball and its boundary.

    Attributes:
        pair: The relative complex (B, ∂B).
        certificate: B is a PL ball of dimension d.
        boundary_certificate: ∂B is a PL sphere of dimension d-1.
    """

    pair: RelativePair
    certificate: PLCertificate
    boundary_certificate: PLCertificate

    def __post_init__(self) -> None:
        """Check neatness and the shape of both claims."""
        problems = neat_violations(self.pair)
        if problems:
            msg = f"{self.pair} is not a neat pair: {'; '.join(problems)}"
            raise DomainError(msg)
        dim = dimension(self.pair.total)
        if self.certificate.claim != PLClaim.ball(dim or 0):
            msg = f"{self.certificate.claim} does not certify a {dim}-ball"
            raise DomainError(msg)
        if self.boundary_certificate.claim != PLClaim.sphere((dim or 0) - 1):
            msg = f"{self.boundary_certificate.claim} does not certify ∂B"
            raise DomainError(msg)

    @classmethod
    def simplex(cls, ambient: int) -> Self:
        """Get (Δ_[n], ∂Δ_[n]) with the simplex axioms as certificates."""
        return cls(
            RelativePair(
                NamedComplex.simplex(ambient).realized,
                NamedComplex.boundary_simplex(ambient).realized,
            ),
            simplex_certificate(ambient),
            boundary_certificate(ambient),
        )

    @classmethod
    def unit(cls) -> Self:
        """Get (pt, {∅})."""
        return cls.simplex(1)

    @classmethod
    def from_pair(
        cls, pair: RelativePair, certificate: PLCertificate | None = None
    ) -> Self:
        """Certify a relative pair as neat.

        Args:
            pair: The candidate (B, ∂B).
            certificate: A ball certificate for B; derived with
                certify_complex when omitted.

        Returns:
            The neat pair; the boundary claim follows from the ball claim.

        Raises:
            DomainError: If B cannot be certified as a ball or the pair is
                not neat.
        """
        certificate = certificate or certify_complex(pair.total)
        if certificate.claim.kind is not PLKind.BALL:
            msg = f"{pair.total} is not certified as a ball: {certificate.claim}"
            raise DomainError(msg)
        return cls(pair, certificate, ball_boundary_certificate(certificate))

    @property
    def ambient(self) -> int:
        """Get n for a pair on [n]."""
        return self.pair.ambient

    @property
    def dimension(self) -> int:
        """Get the dimension d of the ball."""
        return self.certificate.claim.dimension or 0

    def with_ghost_vertex(self, position: int) -> Self:
        """Insert a ghost vertex at a position of [n+1], shifting the rest up.

        Args:
            position: Where the ghost goes, 1 ≤ position ≤ n+1.

        Returns:
            The same ball and boundary on [n+1].

        Raises:
            DomainError: For the unit, which has no neat ghost extension.
        """
        check_slot(position, self.ambient + 1)
        ambient = self.ambient + 1
        check_ambient(ambient)

        def shifted(complex_: SimplicialComplex) -> SimplicialComplex:
            return SimplicialComplex(
                ambient,
                (open_position(mask, position) for mask in complex_.masks),
                validate=False,
            )

        return type(self)(
            RelativePair(shifted(self.pair.total), shifted(self.pair.sub)),
            self.certificate,
            self.boundary_certificate,
        )


def neat_compose(outer: NeatPair, slot: int, inner: NeatPair) -> NeatPair:
    """Compose neat pairs by (B, ∂B) ∘_k (B', ∂B').

    The total is a (p+q)-ball and the sub its boundary (p+q-1)-sphere,
    whether k is a vertex of B or a ghost. Boundary, interior vertices and,
    up to dimension two, the recognizer verdicts are checked.

    Args:
        outer: A neat p-ball pair on [n].
        slot: The slot k.
        inner: A neat q-ball pair on [m].

    Returns:
        The composite neat pair on [n+m-1].

    Raises:
        ConsistencyError: If the composite fails a check.
    """
    composite = join_compose(outer.pair, slot, inner.pair)
    dim = outer.dimension + inner.dimension
    detail = f"∘{slot}"
    certificate = PLCertificate(
        PLClaim.ball(dim),
        ProvenanceNode(
            ProvenanceRule.NEAT_COMPOSE,
            detail,
            (outer.certificate, inner.certificate),
        ),
    )
    boundary = PLCertificate(
        PLClaim.sphere(dim - 1),
        ProvenanceNode(
            ProvenanceRule.NEAT_COMPOSE,
            detail,
            (outer.boundary_certificate, inner.certificate),
        ),
    )
    problems = neat_violations(composite)
    if problems or dimension(composite.total) != dim:
        msg = f"composite {composite} is not a neat {dim}-ball pair: {problems}"
        raise ConsistencyError(msg)
    confirm_claim(composite.total, certificate.claim)
    confirm_claim(composite.sub, boundary.claim)
    logger.debug("neat composite %s certified %s", composite, certificate.claim)
    return NeatPair(composite, certificate, boundary)
