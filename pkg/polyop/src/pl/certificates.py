"""Certificates recording why a complex is a PL sphere or ball.

Above dimension two nothing is recognized directly; claims come from the
simplex axioms and propagate through joins and neat compositions. Each
certificate carries the tree of rules it was derived by.
"""

from dataclasses import dataclass
from enum import StrEnum

from polyop.src.consts import RECOGNIZER_MAX_DIM
from polyop.src.errors import ConsistencyError
from polyop.src.families.family import SimplicialComplex
from polyop.src.families.named import NamedComplex
from polyop.src.families.operations import dimension
from polyop.src.pl.recognition import (
    UNKNOWN,
    PLClaim,
    PLKind,
    recognize_low_dim,
)


class ProvenanceRule(StrEnum):
    """Rules a certificate can be derived by."""

    SIMPLEX = "simplex"
    BOUNDARY_SIMPLEX = "boundary_simplex"
    RECOGNIZER = "recognizer"
    JOIN = "join"
    NEAT_COMPOSE = "neat_compose"
    BALL_BOUNDARY = "ball_boundary"
    WEDGE = "wedge"


@dataclass(frozen=True)
class ProvenanceNode:
    """One derivation step.

    Attributes:
        rule: The rule applied.
        detail: What the rule was applied to.
        premises: Certificates the rule consumed.
    """

    rule: ProvenanceRule
    detail: str
    premises: tuple["PLCertificate", ...] = ()


@dataclass(frozen=True)
class PLCertificate:
    """A claim with its derivation."""

    claim: PLClaim
    provenance: ProvenanceNode

    @property
    def is_known(self) -> bool:
        """Whether the claim is a sphere or a ball."""
        return self.claim.kind in (PLKind.SPHERE, PLKind.BALL)


def simplex_certificate(ambient: int) -> PLCertificate:
    """Certify Δ_[n] as a ball of dimension n-1."""
    return PLCertificate(
        PLClaim.ball(ambient - 1),
        ProvenanceNode(ProvenanceRule.SIMPLEX, f"Δ_[{ambient}]"),
    )


def boundary_certificate(ambient: int) -> PLCertificate:
    """Certify ∂Δ_[n] as a sphere of dimension n-2."""
    return PLCertificate(
        PLClaim.sphere(ambient - 2),
        ProvenanceNode(ProvenanceRule.BOUNDARY_SIMPLEX, f"∂Δ_[{ambient}]"),
    )


def recognizer_certificate(complex_: SimplicialComplex) -> PLCertificate:
    """Certify a complex of dimension ≤ 2 by exact recognition."""
    return PLCertificate(
        recognize_low_dim(complex_),
        ProvenanceNode(ProvenanceRule.RECOGNIZER, str(complex_)),
    )


def ball_boundary_certificate(ball: PLCertificate) -> PLCertificate:
    """Certify the boundary of a certified d-ball as a (d-1)-sphere."""
    if ball.claim.kind is not PLKind.BALL or ball.claim.dimension is None:
        return PLCertificate(
            UNKNOWN, ProvenanceNode(ProvenanceRule.BALL_BOUNDARY, "", (ball,))
        )
    return PLCertificate(
        PLClaim.sphere(ball.claim.dimension - 1),
        ProvenanceNode(ProvenanceRule.BALL_BOUNDARY, "∂ of a ball", (ball,)),
    )


def confirm_claim(complex_: SimplicialComplex, claim: PLClaim) -> None:
    """Check a claim with the recognizer where it applies.

    Raises:
        ConsistencyError: If the complex has dimension ≤ 2 and the
            recognizer disagrees.
    """
    dim = dimension(complex_)
    if dim is None or dim > RECOGNIZER_MAX_DIM:
        return
    verdict = recognize_low_dim(complex_)
    if verdict != claim:
        msg = f"recognizer says {verdict} for {complex_}, certificate says {claim}"
        raise ConsistencyError(msg)


def certify_complex(complex_: SimplicialComplex) -> PLCertificate:
    """Certify a complex as far as possible.

    Args:
        complex_: Any complex.

    Returns:
        The recognizer verdict up to dimension two, an axiom for Δ_[n] and
        ∂Δ_[n], and an unknown claim otherwise.
    """
    dim = dimension(complex_)
    if dim is None or dim <= RECOGNIZER_MAX_DIM:
        return recognizer_certificate(complex_)
    ambient = complex_.ambient
    if complex_ == NamedComplex.simplex(ambient).realized:
        return simplex_certificate(ambient)
    if complex_ == NamedComplex.boundary_simplex(ambient).realized:
        return boundary_certificate(ambient)
    return PLCertificate(
        UNKNOWN, ProvenanceNode(ProvenanceRule.RECOGNIZER, "dimension too high")
    )


def join_claim(left: PLClaim, right: PLClaim) -> PLClaim:
    """Combine claims along a join.

    A p-ball joined with a q-ball is a (p+q+1)-ball, a p-ball joined with
    an s-sphere is a (p+s+1)-ball and an a-sphere joined with a b-sphere
    is an (a+b+1)-sphere. Anything else is unknown.
    """
    if left.dimension is None or right.dimension is None:
        return UNKNOWN
    known = (PLKind.SPHERE, PLKind.BALL)
    if left.kind not in known or right.kind not in known:
        return UNKNOWN
    dim = left.dimension + right.dimension + 1
    if left.kind is PLKind.SPHERE and right.kind is PLKind.SPHERE:
        return PLClaim.sphere(dim)
    return PLClaim.ball(dim)


def join_certificate(left: PLCertificate, right: PLCertificate) -> PLCertificate:
    """Certify K ∗ L from certificates of K and L."""
    return PLCertificate(
        join_claim(left.claim, right.claim),
        ProvenanceNode(ProvenanceRule.JOIN, "", (left, right)),
    )


def format_provenance(certificate: PLCertificate, indent: int = 0) -> str:
    """Render a certificate as an indented tree, one step per line.

    Args:
        certificate: The certificate.
        indent: Depth of the root.

    Returns:
        Lines "claim <- rule: detail", premises indented below.
    """
    node = certificate.provenance
    head = f"{'  ' * indent}{certificate.claim} <- {node.rule}"
    if node.detail:
        head += f": {node.detail}"
    lines = [head]
    lines.extend(format_provenance(premise, indent + 1) for premise in node.premises)
    return "\n".join(lines)
