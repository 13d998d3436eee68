"""The J-construction: iterated wedges, which keep PL spheres spheres."""

import logging
from collections.abc import Sequence

from polyop.src.errors import DomainError
from polyop.src.families.family import SimplicialComplex
from polyop.src.families.operations import dimension
from polyop.src.operads.modules import wed_vertex
from polyop.src.pl.certificates import (
    PLCertificate,
    ProvenanceNode,
    ProvenanceRule,
    certify_complex,
    confirm_claim,
)
from polyop.src.pl.recognition import PLClaim, PLKind
from polyop.src.utils import check_ambient

logger = logging.getLogger(__name__)


def _check_multiplicities(complex_: SimplicialComplex, counts: Sequence[int]) -> None:
    if len(counts) != complex_.ambient:
        msg = f"J has {len(counts)} entries for a complex on [{complex_.ambient}]"
        raise DomainError(msg)
    if any(count < 1 for count in counts):
        msg = f"J must be positive, got {tuple(counts)}"
        raise DomainError(msg)
    check_ambient(sum(counts))


def j_construction(
    complex_: SimplicialComplex, counts: Sequence[int]
) -> SimplicialComplex:
    """Apply J_i - 1 wedges at every vertex i.

    Slots are processed from n down to 1 so that the wedges at i never
    shift the slots still to be processed.

    Args:
        complex_: The complex K on [n].
        counts: J = (J_1, ..., J_n), all positive.

    Returns:
        K(J) on [Σ J_i], of dimension dim K + Σ (J_i - 1).
    """
    _check_multiplicities(complex_, counts)
    result = complex_
    for slot in range(complex_.ambient, 0, -1):
        for _ in range(counts[slot - 1] - 1):
            result = wed_vertex(result, slot)
    return result


def certified_j_construction(
    complex_: SimplicialComplex,
    counts: Sequence[int],
    certificate: PLCertificate | None = None,
) -> tuple[SimplicialComplex, PLCertificate]:
    """Run the J-construction and carry a sphere certificate through it.

    Args:
        complex_: The complex K on [n].
        counts: J, all positive.
        certificate: A certificate for K; derived with certify_complex when
            omitted.

    Returns:
        K(J) with a sphere certificate of dimension dim K + Σ (J_i - 1) when
        K is certified a sphere, and with certify_complex of K(J) otherwise.
    """
    certificate = certificate or certify_complex(complex_)
    result = j_construction(complex_, counts)
    claim = certificate.claim
    if claim.kind is not PLKind.SPHERE or claim.dimension is None:
        return result, certify_complex(result)
    wedges = sum(counts) - len(counts)
    derived = PLCertificate(
        PLClaim.sphere(claim.dimension + wedges),
        ProvenanceNode(
            ProvenanceRule.WEDGE, f"J={tuple(counts)}", (certificate,)
        ),
    )
    confirm_claim(result, derived.claim)
    logger.debug(
        "J-construction of dimension %s certified %s",
        dimension(result),
        derived.claim,
    )
    return result, derived
