"""Named suboperads of the complex operads and the constructions they act by.

The one-element-per-arity families 𝒯 (trivial), 𝒟 (discrete), 𝒮 (simplices)
and ∂𝒮 (boundaries of simplices) are suboperads; composing with them on the
right or the left realizes classical operations on complexes.
"""

from enum import StrEnum
from typing import NamedTuple

from polyop.src.errors import PreconditionError
from polyop.src.families.family import SimplicialComplex, downward_closure_masks
from polyop.src.families.named import NamedComplex
from polyop.src.families.operations import facets
from polyop.src.operads.power import ComposeVariant
from polyop.src.operads.scpx import compose, compose_c, substitute
from polyop.src.utils import bit, check_ambient, check_slot, insert_block


class SuboperadKind(StrEnum):
    """The named one-element-per-arity families."""

    TRIVIAL = "T"
    DISCRETE = "D"
    SIMPLEX = "S"
    BOUNDARY_SIMPLEX = "dS"


# variants under which each family is closed
SUBOPERAD_VARIANTS: dict[SuboperadKind, tuple[ComposeVariant, ...]] = {
    SuboperadKind.TRIVIAL: (ComposeVariant.SUBST, ComposeVariant.COMP),
    SuboperadKind.DISCRETE: (ComposeVariant.SUBST,),
    SuboperadKind.SIMPLEX: (ComposeVariant.SUBST, ComposeVariant.COMP),
    SuboperadKind.BOUNDARY_SIMPLEX: (ComposeVariant.COMP,),
}


def suboperad_element(kind: SuboperadKind, arity: int) -> SimplicialComplex:
    """Get the element of a named family in a given arity.

    Args:
        kind: The family.
        arity: The arity n ≥ 1.

    Returns:
        {∅}, discrete(n), Δ_[n] or ∂Δ_[n] on [n].
    """
    builders = {
        SuboperadKind.TRIVIAL: NamedComplex.trivial,
        SuboperadKind.DISCRETE: NamedComplex.discrete,
        SuboperadKind.SIMPLEX: NamedComplex.simplex,
        SuboperadKind.BOUNDARY_SIMPLEX: NamedComplex.boundary_simplex,
    }
    return builders[kind](arity).realized


def is_unital_suboperad(kind: SuboperadKind, variant: ComposeVariant) -> bool:
    """Check whether the arity-one element of a family is the unit."""
    unit_masks = (0, 1) if variant is ComposeVariant.SUBST else (0,)
    return suboperad_element(kind, 1).masks == unit_masks


def suboperad_closure_failures(
    kind: SuboperadKind, variant: ComposeVariant, max_arity: int
) -> list[tuple[int, int, int]]:
    """Find compositions that leave a named family.

    Args:
        kind: The family.
        variant: subst or comp.
        max_arity: Largest arity of either operand.

    Returns:
        Every (n, k, m) with element(n) ∘_k element(m) ≠ element(n+m-1).
    """
    failures = []
    for outer_arity in range(1, max_arity + 1):
        outer = suboperad_element(kind, outer_arity)
        for inner_arity in range(1, max_arity + 1):
            inner = suboperad_element(kind, inner_arity)
            expected = suboperad_element(kind, outer_arity + inner_arity - 1)
            for slot in range(1, outer_arity + 1):
                if compose(outer, slot, inner, variant) != expected:
                    failures.append((outer_arity, slot, inner_arity))
    return failures


class FacetImages(NamedTuple):
    """Blocks on [2] replacing vertex k in facets that contain it or miss it."""

    with_vertex: tuple[int, ...]
    without_vertex: tuple[int, ...]


def _rebuild_from_facets(
    complex_: SimplicialComplex, slot: int, images: FacetImages
) -> SimplicialComplex:
    check_slot(slot, complex_.ambient)
    ambient = complex_.ambient + 1
    check_ambient(ambient)
    if complex_.is_empty():
        return SimplicialComplex(ambient)
    generators = []
    for facet in facets(complex_):
        blocks = images.with_vertex if facet & bit(slot) else images.without_vertex
        generators.extend(insert_block(facet, slot, block, 2) for block in blocks)
    return SimplicialComplex(
        ambient, downward_closure_masks(generators), validate=False
    )


DUP_IMAGES = FacetImages(with_vertex=(0b11,), without_vertex=(0b00,))
PARA_IMAGES = FacetImages(with_vertex=(0b01, 0b10), without_vertex=(0b00,))
UNIVERSAL_IMAGES = FacetImages(with_vertex=(0b11,), without_vertex=(0b11,))
WED_IMAGES = FacetImages(with_vertex=(0b11,), without_vertex=(0b01, 0b10))


def dup_vertex(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Duplicate vertex i: facets containing i also receive i+1.

    Args:
        complex_: The complex K on [n].
        slot: The vertex i.

    Returns:
        dup_i(K) on [n+1], equal to K ∘_i^c {∅ on [2]}.
    """
    return _rebuild_from_facets(complex_, slot, DUP_IMAGES)


def para_vertex(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Make a parallel copy of vertex i: facets containing i are doubled.

    Args:
        complex_: The complex K on [n].
        slot: The vertex i.

    Returns:
        para_i(K) on [n+1], equal to K ∘_i discrete(2).
    """
    return _rebuild_from_facets(complex_, slot, PARA_IMAGES)


def universal_dup(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Replace vertex i by a universal edge {i, i+1} added to every facet.

    Args:
        complex_: The complex K on [n].
        slot: The vertex i.

    Returns:
        The complex on [n+1], equal to K ∘_i^c Δ_[2].
    """
    return _rebuild_from_facets(complex_, slot, UNIVERSAL_IMAGES)


def wed_vertex(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Wedge at vertex i.

    Facets containing i receive i+1, facets missing i are doubled with i
    added to one copy and i+1 to the other.

    Args:
        complex_: The complex K on [n].
        slot: The vertex i.

    Returns:
        wed_i(K) on [n+1], equal to K ∘_i^c ∂Δ_[2].
    """
    return _rebuild_from_facets(complex_, slot, WED_IMAGES)


def _check_nonempty(*complexes: SimplicialComplex) -> None:
    for complex_ in complexes:
        if complex_.is_empty():
            msg = "disjoint unions and joins here need nonempty complexes"
            raise PreconditionError(msg)


def disjoint_union(
    left: SimplicialComplex, right: SimplicialComplex
) -> SimplicialComplex:
    """Get K ⊔ (L+n) on [n+m].

    Args:
        left: The nonempty complex K on [n].
        right: The nonempty complex L on [m].

    Returns:
        The complex whose faces are those of K and the shifted faces of L.
    """
    _check_nonempty(left, right)
    ambient = left.ambient + right.ambient
    check_ambient(ambient)
    shift = left.ambient
    masks = set(left.masks) | {mask << shift for mask in right.masks}
    return SimplicialComplex(ambient, masks, validate=False)


def disjoint_union_via_subst(
    left: SimplicialComplex, right: SimplicialComplex
) -> SimplicialComplex:
    """Realize K ⊔ (L+n) as (discrete(2) ∘₂ L) ∘₁ K."""
    _check_nonempty(left, right)
    discrete = suboperad_element(SuboperadKind.DISCRETE, 2)
    return substitute(substitute(discrete, 2, right), 1, left)


def join_via_simplices(
    left: SimplicialComplex, right: SimplicialComplex
) -> SimplicialComplex:
    """Realize the join K ∗ L as (Δ_[2] ∘₂ L) ∘₁ K."""
    _check_nonempty(left, right)
    simplex = suboperad_element(SuboperadKind.SIMPLEX, 2)
    return substitute(substitute(simplex, 2, right), 1, left)


def join_via_trivial(
    left: SimplicialComplex, right: SimplicialComplex
) -> SimplicialComplex:
    """Realize the join K ∗ L as ({∅ on [2]} ∘₂^c L) ∘₁^c K.

    Under composition, faces avoiding the slot are joined with every face
    of the operand, so trivial outer complexes produce joins.
    """
    _check_nonempty(left, right)
    trivial = suboperad_element(SuboperadKind.TRIVIAL, 2)
    return compose_c(compose_c(trivial, 2, right), 1, left)
