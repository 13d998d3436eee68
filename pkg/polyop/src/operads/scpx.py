"""Substitution and composition of simplicial complexes.

Substitution K ∘_k L replaces vertex k of K by L, composition K ∘_k^c L is
its complement-conjugate and is closed downward after the elementwise step.
Both are the elementwise power-set compositions, so an empty operand gives
the empty complex.
"""

import random
from collections.abc import Sequence
from enum import StrEnum
from typing import ClassVar

from polyop.src.errors import DomainError, PreconditionError
from polyop.src.families.enumeration import (
    enumerate_antichains,
    enumerate_complexes,
    enumerate_upward_complexes,
    sample_antichain,
    sample_complex,
)
from polyop.src.families.family import (
    Family,
    SimplicialComplex,
    downward_closure_masks,
)
from polyop.src.families.operations import (
    ClosureMode,
    ComplementMode,
    ExtremalMode,
    classify,
    closure,
    complement,
    extremal_masks,
    extremals,
    facets,
    relabel,
)
from polyop.src.operads.base import OperadInstance
from polyop.src.operads.power import ComposeVariant, family_compose
from polyop.src.permutations import Permutation
from polyop.src.utils import bit, check_slot, full_mask, insert_block

COMPLEX_VARIANTS = (ComposeVariant.SUBST, ComposeVariant.COMP)


class TransversalMode(StrEnum):
    """Transports of a complex composition to transversal families."""

    HAT = "hat"
    CHECK = "check"


def check_variant(variant: ComposeVariant) -> None:
    """Reject the power variant, which complexes do not use."""
    if variant not in COMPLEX_VARIANTS:
        msg = f"complexes compose by subst or comp, not {variant}"
        raise DomainError(msg)


def substitute(
    outer: SimplicialComplex, slot: int, inner: SimplicialComplex
) -> SimplicialComplex:
    """Substitute L for vertex k of K.

    Args:
        outer: The complex K on [n].
        slot: The vertex k.
        inner: The complex L on [m].

    Returns:
        K ∘_k L on [n+m-1]; faces of K missing k are kept with the gap
        closed, faces containing k receive every face of L.
    """
    raw = family_compose(outer, slot, inner, ComposeVariant.SUBST)
    return SimplicialComplex(raw.ambient, raw.masks, validate=False)


def compose_c(
    outer: SimplicialComplex, slot: int, inner: SimplicialComplex
) -> SimplicialComplex:
    """Compose L into K at k with the complement-conjugate rule.

    Args:
        outer: The complex K on [n].
        slot: The vertex k.
        inner: The complex L on [m].

    Returns:
        K ∘_k^c L on [n+m-1], the downward closure of the faces missing k
        joined with faces of L and the faces containing k joined with [m].
    """
    raw = family_compose(outer, slot, inner, ComposeVariant.COMP)
    return SimplicialComplex(
        raw.ambient, downward_closure_masks(raw.masks), validate=False
    )


def compose(
    outer: SimplicialComplex,
    slot: int,
    inner: SimplicialComplex,
    variant: ComposeVariant,
) -> SimplicialComplex:
    """Dispatch to substitute or compose_c."""
    check_variant(variant)
    if variant is ComposeVariant.SUBST:
        return substitute(outer, slot, inner)
    return compose_c(outer, slot, inner)


def _check_nondegenerate(complex_: Family, role: str) -> None:
    if complex_.is_empty() or complex_.is_trivial():
        msg = f"the {role} complex must be neither ∅ nor {{∅}}, got {complex_}"
        raise PreconditionError(msg)


def facets_of_composition(
    outer: SimplicialComplex,
    slot: int,
    inner: SimplicialComplex,
    variant: ComposeVariant,
) -> Family:
    """Get the facets of a composite from the facets of its operands.

    Args:
        outer: The complex K, neither ∅ nor {∅}.
        slot: The vertex k.
        inner: The complex L on [m], neither ∅ nor {∅}.
        variant: subst or comp.

    Returns:
        The facets of compose(K, k, L, variant).
    """
    check_variant(variant)
    _check_nondegenerate(outer, "outer")
    _check_nondegenerate(inner, "inner")
    check_slot(slot, outer.ambient)
    size = inner.ambient
    inner_facets = facets(inner).masks
    comp = variant is ComposeVariant.COMP
    masks: set[int] = set()
    for facet in facets(outer):
        if facet & bit(slot):
            if comp:
                masks.add(insert_block(facet, slot, full_mask(size), size))
            else:
                masks.update(insert_block(facet, slot, f, size) for f in inner_facets)
        elif comp:
            masks.update(insert_block(facet, slot, f, size) for f in inner_facets)
        else:
            masks.add(insert_block(facet, slot, 0, size))
    # [m] from a facet containing k can lie below a facet missing k when L is
    # a full simplex
    return extremals(Family(outer.ambient + size - 1, masks), ExtremalMode.MAXIMAL)


def composition_dimension(
    outer: SimplicialComplex,
    slot: int,
    inner: SimplicialComplex,
    variant: ComposeVariant,
) -> int | None:
    """Get the dimension of a composite without building it.

    A facet F of K contributes dim F + dim L when it contains k under
    substitution, dim F when it misses k; under composition it contributes
    dim F + m - 1 when it contains k and dim F + dim L + 1 otherwise.

    Args:
        outer: The complex K.
        slot: The vertex k.
        inner: The complex L on [m].
        variant: subst or comp.

    Returns:
        The dimension, or None when the composite is empty.
    """
    check_variant(variant)
    check_slot(slot, outer.ambient)
    if outer.is_empty() or inner.is_empty():
        return None
    inner_dim = inner.masks[-1].bit_count() - 1
    size = inner.ambient
    best = -1
    for facet in facets(outer):
        dim = facet.bit_count() - 1
        if facet & bit(slot):
            dim += size - 1 if variant is ComposeVariant.COMP else inner_dim
        elif variant is ComposeVariant.COMP:
            dim += inner_dim + 1
        best = max(best, dim)
    return best


def _check_transversal(family: Family) -> None:
    if not classify(family).is_transversal:
        msg = f"{family} is not a transversal family"
        raise DomainError(msg)


def transversal_compose(
    outer: Family,
    slot: int,
    inner: Family,
    mode: TransversalMode,
    variant: ComposeVariant,
) -> Family:
    """Compose transversal families through a closure and back.

    The hat transport closes both downward, composes the complexes and keeps
    the facets. The check transport closes both upward, composes
    elementwise and keeps the minimal members.

    Args:
        outer: Transversal family S on [n].
        slot: The slot k.
        inner: Transversal family T on [m].
        mode: hat or check.
        variant: subst or comp.

    Returns:
        A transversal family on [n+m-1].
    """
    check_variant(variant)
    _check_transversal(outer)
    _check_transversal(inner)
    if mode is TransversalMode.HAT:
        composite: Family = compose(
            SimplicialComplex.from_family(closure(outer, ClosureMode.DOWN)),
            slot,
            SimplicialComplex.from_family(closure(inner, ClosureMode.DOWN)),
            variant,
        )
        return extremals(composite, ExtremalMode.MAXIMAL)
    composite = family_compose(
        closure(outer, ClosureMode.UP), slot, closure(inner, ClosureMode.UP), variant
    )
    return Family(
        composite.ambient, extremal_masks(composite.masks, ExtremalMode.MINIMAL)
    )


def conjugate_by_pointwise_complement(
    outer: SimplicialComplex, slot: int, inner: SimplicialComplex
) -> tuple[Family, Family]:
    """Evaluate both sides of ℂ'(K ∘_k L) = ℂ'K ∘_k^c ℂ'L.

    The right side is the raw composition of upward complexes.

    Returns:
        The pointwise complement of the substitution, then the composition
        of the pointwise complements.
    """
    left = complement(substitute(outer, slot, inner), ComplementMode.POINTWISE)
    right = family_compose(
        complement(outer, ComplementMode.POINTWISE),
        slot,
        complement(inner, ComplementMode.POINTWISE),
        ComposeVariant.COMP,
    )
    return left, right


class FamilyOperad(OperadInstance[Family]):
    """Operads whose elements are families on [n], relabeled pointwise."""

    def arity(self, element: Family) -> int:
        """Get the ambient size."""
        return element.ambient

    def act(self, element: Family, sigma: Permutation) -> Family:
        """Relabel every member."""
        return relabel(element, sigma)

    def describe(self, element: Family) -> str:
        """Render with the ambient size, which equality depends on."""
        return f"{element} on [{element.ambient}]"


class ComplexOperad(FamilyOperad):
    """Simplicial complexes under substitution or composition."""

    variant: ClassVar[ComposeVariant]
    nonempty: ClassVar[bool] = False
    operand_bound = 2

    def compose(self, outer: Family, slot: int, inner: Family) -> Family:
        """Compose the complexes."""
        return compose(
            SimplicialComplex.from_family(outer),
            slot,
            SimplicialComplex.from_family(inner),
            self.variant,
        )

    def enumerate_arity(self, arity: int) -> Sequence[Family]:
        """Get every complex on [n], ∅ only when admitted."""
        return [
            complex_
            for complex_ in enumerate_complexes(arity)
            if not (self.nonempty and complex_.is_empty())
        ]

    def sample_arity(self, arity: int, rng: random.Random) -> Family:
        """Draw a random admitted complex on [n]."""
        while True:
            complex_ = sample_complex(arity, rng)
            if not (self.nonempty and complex_.is_empty()):
                return complex_

    def get_unit(self) -> Family:
        """Get pt for substitution and {∅} on [1] for composition."""
        if self.variant is ComposeVariant.SUBST:
            return SimplicialComplex(1, [0, 1])
        return SimplicialComplex(1, [0])


class SubstitutionOperad(ComplexOperad):
    """(scpx, ∘)."""

    name = "scpx-subst"
    description = "simplicial complexes under substitution"
    variant = ComposeVariant.SUBST


class NonemptySubstitutionOperad(ComplexOperad):
    """(scpx without ∅, ∘)."""

    name = "scpx-subst-nonempty"
    description = "nonempty simplicial complexes under substitution"
    variant = ComposeVariant.SUBST
    nonempty = True


class CompositionOperad(ComplexOperad):
    """(scpx, ∘^c)."""

    name = "scpx-comp"
    description = "simplicial complexes under composition"
    variant = ComposeVariant.COMP


class NonemptyCompositionOperad(ComplexOperad):
    """(scpx without ∅, ∘^c)."""

    name = "scpx-comp-nonempty"
    description = "nonempty simplicial complexes under composition"
    variant = ComposeVariant.COMP
    nonempty = True


class UpwardComplexOperad(FamilyOperad):
    """Upward-closed families under the raw composition, unit {∅,{1}}."""

    name = "ucpx-comp"
    description = "upward complexes under raw composition"
    operand_bound = 2

    def compose(self, outer: Family, slot: int, inner: Family) -> Family:
        """Compose elementwise without closing."""
        return family_compose(outer, slot, inner, ComposeVariant.COMP)

    def enumerate_arity(self, arity: int) -> Sequence[Family]:
        """Get every upward complex on [n]."""
        return enumerate_upward_complexes(arity)

    def sample_arity(self, arity: int, rng: random.Random) -> Family:
        """Draw the pointwise complement of a random complex."""
        return complement(sample_complex(arity, rng), ComplementMode.POINTWISE)

    def get_unit(self) -> Family:
        """Get {∅,{1}} on [1]."""
        return Family(1, [0, 1])


class TransversalOperad(FamilyOperad):
    """Transversal families under one transport of a complex composition."""

    mode: ClassVar[TransversalMode]
    variant: ClassVar[ComposeVariant]
    operand_bound = 2

    def compose(self, outer: Family, slot: int, inner: Family) -> Family:
        """Compose through the transport."""
        return transversal_compose(outer, slot, inner, self.mode, self.variant)

    def enumerate_arity(self, arity: int) -> Sequence[Family]:
        """Get every antichain on [n]."""
        return enumerate_antichains(arity)

    def sample_arity(self, arity: int, rng: random.Random) -> Family:
        """Draw a random antichain on [n]."""
        return sample_antichain(arity, rng)

    def get_unit(self) -> Family:
        """Get {{1}} for substitution and {∅} for composition."""
        return Family(1, [1 if self.variant is ComposeVariant.SUBST else 0])


class HatSubstitutionOperad(TransversalOperad):
    """Facets of substitutions."""

    name = "transv-hat-subst"
    description = "transversal families, maximal transport of substitution"
    mode = TransversalMode.HAT
    variant = ComposeVariant.SUBST


class CheckSubstitutionOperad(TransversalOperad):
    """Minimal members of upward substitutions."""

    name = "transv-check-subst"
    description = "transversal families, minimal transport of substitution"
    mode = TransversalMode.CHECK
    variant = ComposeVariant.SUBST


class HatCompositionOperad(TransversalOperad):
    """Facets of compositions."""

    name = "transv-hat-comp"
    description = "transversal families, maximal transport of composition"
    mode = TransversalMode.HAT
    variant = ComposeVariant.COMP


class CheckCompositionOperad(TransversalOperad):
    """Minimal members of upward compositions."""

    name = "transv-check-comp"
    description = "transversal families, minimal transport of composition"
    mode = TransversalMode.CHECK
    variant = ComposeVariant.COMP
