"""The simplicial join operad on relative simplicial complexes.

The simplicial join product of K on [n] with pairs (M_i, N_i) is the union
over faces I of K of the joins picking M_i for i in I and N_i otherwise.
Replacing a single vertex k by a pair gives the right action K ⊳_k (M, N),
and acting on both members of a relative complex gives the composition
(K, L) ∘_k (M, N).
"""

import random
from collections.abc import Sequence
from enum import StrEnum
from itertools import product
from typing import NamedTuple

from polyop.src.errors import ConsistencyError, DomainError
from polyop.src.families.enumeration import enumerate_pairs, sample_pair
from polyop.src.families.family import (
    RelativePair,
    SimplicialComplex,
    downward_closure_masks,
)
from polyop.src.families.named import NamedComplex
from polyop.src.families.operations import facets, join, relabel, slot_join
from polyop.src.operads.base import OperadInstance
from polyop.src.operads.modules import wed_vertex
from polyop.src.operads.power import ComposeVariant, compose_mask
from polyop.src.permutations import Permutation
from polyop.src.utils import (
    bit,
    check_ambient,
    check_slot,
    has_member,
    remove_block,
)

type PairSequence = Sequence[RelativePair]


def get_unit_pair() -> RelativePair:
    """Get (pt, {∅}) on [1]."""
    return RelativePair(SimplicialComplex(1, [0, 1]), SimplicialComplex(1, [0]))


def _check_length(complex_: SimplicialComplex, pairs: PairSequence) -> None:
    if len(pairs) != complex_.ambient:
        msg = f"{len(pairs)} pairs given for a complex on [{complex_.ambient}]"
        raise DomainError(msg)


def _offsets(pairs: PairSequence) -> list[int]:
    offsets = []
    total = 0
    for pair in pairs:
        offsets.append(total)
        total += pair.ambient
    check_ambient(total)
    return offsets


def simplicial_join_product(
    complex_: SimplicialComplex, pairs: PairSequence
) -> SimplicialComplex:
    """Get the simplicial join product of K with a sequence of pairs.

    Computed on facets: for a facet F of K the term is the join of the
    facets of M_i (i in F) and N_i (i not in F), and the result is the
    downward closure of all terms.

    Args:
        complex_: The complex K on [n].
        pairs: The pairs (M_i, N_i), one per vertex.

    Returns:
        The complex on [Σ m_i].
    """
    _check_length(complex_, pairs)
    offsets = _offsets(pairs)
    ambient = sum(pair.ambient for pair in pairs)
    total_facets = [facets(pair.total).masks for pair in pairs]
    sub_facets = [facets(pair.sub).masks for pair in pairs]
    generators: set[int] = set()
    for facet in facets(complex_):
        choices = [
            total_facets[i] if has_member(facet, i + 1) else sub_facets[i]
            for i in range(len(pairs))
        ]
        for picked in product(*choices):
            mask = 0
            for offset, part in zip(offsets, picked, strict=True):
                mask |= part << offset
            generators.add(mask)
    return SimplicialComplex(
        ambient, downward_closure_masks(generators), validate=False
    )


def join_product_by_faces(
    complex_: SimplicialComplex, pairs: PairSequence
) -> SimplicialComplex:
    """Get the simplicial join product face by face with iterated joins."""
    _check_length(complex_, pairs)
    ambient = sum(pair.ambient for pair in pairs)
    check_ambient(ambient)
    masks: set[int] = set()
    for face in complex_.masks:
        term = SimplicialComplex(0, [0])
        for position, pair in enumerate(pairs, start=1):
            term = join(term, pair.total if has_member(face, position) else pair.sub)
        masks.update(term.masks)
    return SimplicialComplex(ambient, masks, validate=False)


def right_action(
    complex_: SimplicialComplex, slot: int, pair: RelativePair
) -> SimplicialComplex:
    """Get K ⊳_k (M, N).

    Args:
        complex_: The complex K on [n].
        slot: The vertex k.
        pair: The pair (M, N) on [m].

    Returns:
        The complex on [n+m-1] whose faces substitute faces of M into the
        faces of K containing k and compose faces of N into the others.
    """
    check_slot(slot, complex_.ambient)
    size = pair.ambient
    ambient = complex_.ambient + size - 1
    check_ambient(ambient)
    masks: set[int] = set()
    for face in complex_.masks:
        if face & bit(slot):
            masks.update(
                compose_mask(face, slot, j, size, ComposeVariant.SUBST)
                for j in pair.total.masks
            )
        else:
            masks.update(
                compose_mask(face, slot, j, size, ComposeVariant.COMP)
                for j in pair.sub.masks
            )
    return SimplicialComplex(ambient, masks, validate=False)


def right_action_by_join_product(
    complex_: SimplicialComplex, slot: int, pair: RelativePair
) -> SimplicialComplex:
    """Get K ⊳_k (M, N) as the join product with units away from k."""
    check_slot(slot, complex_.ambient)
    unit = get_unit_pair()
    pairs = [
        pair if position == slot else unit
        for position in range(1, complex_.ambient + 1)
    ]
    return simplicial_join_product(complex_, pairs)


class LocalOp(StrEnum):
    """Local operations on a complex at a vertex."""

    LINK = "link"
    STAR = "star"
    DELETE = "delete"
    WEDGE = "wedge"


def link(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Get Lk_k(K) = {I : k ∉ I, I ∪ {k} ∈ K} on [n]."""
    check_slot(slot, complex_.ambient)
    vertex = bit(slot)
    return SimplicialComplex(
        complex_.ambient,
        (face ^ vertex for face in complex_.masks if face & vertex),
        validate=False,
    )


def star(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Get St_k(K) = {I : I ∪ {k} ∈ K} on [n]."""
    check_slot(slot, complex_.ambient)
    vertex = bit(slot)
    masks: set[int] = set()
    for face in complex_.masks:
        if face & vertex:
            masks.update((face, face ^ vertex))
    return SimplicialComplex(complex_.ambient, masks, validate=False)


def delete(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Get K ∖ k on [n], keeping k as a ghost vertex."""
    check_slot(slot, complex_.ambient)
    vertex = bit(slot)
    return SimplicialComplex(
        complex_.ambient,
        {face & ~vertex for face in complex_.masks},
        validate=False,
    )


def compact_delete(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Get K ∖ k on [n-1], closing the gap left by k."""
    check_slot(slot, complex_.ambient)
    return SimplicialComplex(
        complex_.ambient - 1,
        {remove_block(face, slot, 1) for face in complex_.masks},
        validate=False,
    )


def wedge(complex_: SimplicialComplex, slot: int) -> SimplicialComplex:
    """Get the wedge of K at k, on [n+1]."""
    return wed_vertex(complex_, slot)


def local_op(
    complex_: SimplicialComplex, slot: int, kind: LocalOp
) -> SimplicialComplex:
    """Apply a local operation at vertex k.

    Args:
        complex_: The complex K on [n].
        slot: The vertex k.
        kind: link, star, delete or wedge.

    Returns:
        The resulting complex; wedges live on [n+1], the others on [n].
    """
    operations = {
        LocalOp.LINK: link,
        LocalOp.STAR: star,
        LocalOp.DELETE: delete,
        LocalOp.WEDGE: wedge,
    }
    return operations[kind](complex_, slot)


def local_op_pair(kind: LocalOp) -> RelativePair:
    """Get the pair (M, N) with K ⊳_k (M, N) equal to the local operation.

    Args:
        kind: The local operation.

    Returns:
        ({∅}, ∅) for link, (pt, ∅) for star, ({∅}, {∅}) for delete and
        (Δ_[2], ∂Δ_[2]) for wedge.
    """
    if kind is LocalOp.WEDGE:
        return RelativePair(
            NamedComplex.simplex(2).realized,
            NamedComplex.boundary_simplex(2).realized,
        )
    totals = {
        LocalOp.LINK: [0],
        LocalOp.STAR: [0, 1],
        LocalOp.DELETE: [0],
    }
    subs = {LocalOp.LINK: [], LocalOp.STAR: [], LocalOp.DELETE: [0]}
    return RelativePair(
        SimplicialComplex(1, totals[kind]), SimplicialComplex(1, subs[kind])
    )


class PushoutSquare(NamedTuple):
    """The square A₁ ∩ A₂ → A₁, A₂ → A₁ ∪ A₂."""

    first: SimplicialComplex
    second: SimplicialComplex
    meet: SimplicialComplex
    union: SimplicialComplex


def pushout_witness(
    complex_: SimplicialComplex, slot: int, pair: RelativePair
) -> PushoutSquare:
    """Decompose K ⊳_k (M, N) along the link and the deletion of k.

    Args:
        complex_: The complex K on [n].
        slot: The vertex k.
        pair: The pair (M, N) on [m].

    Returns:
        A₁ = Lk_k(K) ∗_k M, A₂ = (K∖k) ∗_k N, their meet Lk_k(K) ∗_k N and
        their union, which equals K ⊳_k (M, N).
    """
    lk = link(complex_, slot)
    deletion = delete(complex_, slot)
    first = slot_join(lk, pair.total, slot)
    second = slot_join(deletion, pair.sub, slot)
    meet = slot_join(lk, pair.sub, slot)
    union = first.union(second)
    if first.intersection(second) != meet:
        msg = f"pushout meet differs from Lk ∗ N for {complex_} at {slot}"
        raise ConsistencyError(msg)
    if union != right_action(complex_, slot, pair):
        msg = f"pushout union differs from K ⊳ (M, N) for {complex_} at {slot}"
        raise ConsistencyError(msg)
    return PushoutSquare(
        first,
        second,
        meet,
        SimplicialComplex(union.ambient, union.masks, validate=False),
    )


def right_action_by_pushout(
    complex_: SimplicialComplex, slot: int, pair: RelativePair
) -> SimplicialComplex:
    """Get K ⊳_k (M, N) as (Lk_k(K) ∗_k M) ∪ ((K∖k) ∗_k N)."""
    lk = link(complex_, slot)
    first = slot_join(lk, pair.total, slot)
    second = slot_join(delete(complex_, slot), pair.sub, slot)
    union = first.union(second)
    return SimplicialComplex(union.ambient, union.masks, validate=False)


def join_compose(outer: RelativePair, slot: int, inner: RelativePair) -> RelativePair:
    """Get (K, L) ∘_k (M, N) = (K ⊳_k (M, N), L ⊳_k (M, N))."""
    return RelativePair(
        right_action(outer.total, slot, inner),
        right_action(outer.sub, slot, inner),
    )


def algebra_total_map(pair: RelativePair, pairs: PairSequence) -> RelativePair:
    """Apply the join product to both members of a relative complex.

    Args:
        pair: The relative complex (K, L) on [n].
        pairs: One pair per vertex.

    Returns:
        (𝒵(K), 𝒵(L)) on [Σ m_i].
    """
    return RelativePair(
        simplicial_join_product(pair.total, pairs),
        simplicial_join_product(pair.sub, pairs),
    )


def substitution_algebra_map(
    complex_: SimplicialComplex, pairs: PairSequence
) -> RelativePair:
    """Get (𝒵(K), ∗N_i), the algebra map of the substitution operad.

    Args:
        complex_: A nonempty complex K on [n].
        pairs: One pair per vertex.

    Returns:
        The image of (K, {∅}).
    """
    if complex_.is_empty():
        msg = "the substitution algebra map needs a nonempty complex"
        raise DomainError(msg)
    return algebra_total_map(
        RelativePair(complex_, SimplicialComplex(complex_.ambient, [0])), pairs
    )


def composition_algebra_map(
    complex_: SimplicialComplex, pairs: PairSequence
) -> RelativePair:
    """Get (∗M_i, 𝒵(K)), the image of (Δ_[n], K)."""
    simplex = NamedComplex.simplex(complex_.ambient).realized
    return algebra_total_map(RelativePair(simplex, complex_), pairs)


class AlgebraAxiomSides(NamedTuple):
    """Both sides of the algebra axiom for one composite."""

    composite_first: RelativePair
    composite_last: RelativePair

    @property
    def holds(self) -> bool:
        """Whether the sides agree."""
        return self.composite_first == self.composite_last


def check_algebra_axiom(
    outer: RelativePair,
    slot: int,
    inner: RelativePair,
    pairs: PairSequence,
) -> AlgebraAxiomSides:
    """Evaluate both sides of the algebra axiom.

    The left side maps P ∘_k Q with all n+m-1 pairs. The right side maps Q
    with the block of pairs at positions k..k+m-1 and substitutes the
    result at position k of the remaining sequence before mapping P.

    Args:
        outer: The relative complex P on [n].
        slot: The slot k.
        inner: The relative complex Q on [m].
        pairs: n+m-1 pairs.

    Returns:
        The two sides.
    """
    check_slot(slot, outer.ambient)
    size = inner.ambient
    if len(pairs) != outer.ambient + size - 1:
        msg = f"{len(pairs)} pairs given for arity {outer.ambient + size - 1}"
        raise DomainError(msg)
    block = pairs[slot - 1 : slot - 1 + size]
    reduced = [
        *pairs[: slot - 1],
        algebra_total_map(inner, block),
        *pairs[slot - 1 + size :],
    ]
    return AlgebraAxiomSides(
        algebra_total_map(join_compose(outer, slot, inner), pairs),
        algebra_total_map(outer, reduced),
    )


def relabel_pair(pair: RelativePair, sigma: Permutation) -> RelativePair:
    """Relabel both members of a relative complex."""
    return RelativePair(relabel(pair.total, sigma), relabel(pair.sub, sigma))


class RelativeComplexOperad(OperadInstance[RelativePair]):
    """Relative simplicial complexes under the join composition."""

    name = "relscpx-join"
    description = "relative simplicial complexes under the simplicial join"
    exhaustive_bound = 2
    operand_bound = 2

    def arity(self, element: RelativePair) -> int:
        """Get the ambient size."""
        return element.ambient

    def compose(
        self, outer: RelativePair, slot: int, inner: RelativePair
    ) -> RelativePair:
        """Compose by the right action on both members."""
        return join_compose(outer, slot, inner)

    def act(self, element: RelativePair, sigma: Permutation) -> RelativePair:
        """Relabel both members."""
        return relabel_pair(element, sigma)

    def enumerate_arity(self, arity: int) -> Sequence[RelativePair]:
        """Get every relative pair on [n]."""
        return enumerate_pairs(arity)

    def sample_arity(self, arity: int, rng: random.Random) -> RelativePair:
        """Draw a random relative pair on [n]."""
        return sample_pair(arity, rng)

    def get_unit(self) -> RelativePair:
        """Get (pt, {∅})."""
        return get_unit_pair()
