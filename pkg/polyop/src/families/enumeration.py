"""Exhaustive enumerators and seeded samplers of families on [n].

Complexes are generated Dedekind-style: a complex on [n] is a complex D on
[n-1] together with a subcomplex L' of D, the link of n, and equals
D ∪ {I ∪ {n} : I ∈ L'}. Counts are 2, 3, 6, 20, 168, 7581 for n = 0..5.
"""

import logging
import random
from collections.abc import Iterator
from functools import cache

from polyop.src.consts import ENUMERATION_BOUND, FAMILY_ENUMERATION_BOUND
from polyop.src.errors import DomainError, ResourceBoundError
from polyop.src.families.family import (
    Family,
    RelativePair,
    SimplicialComplex,
    downward_closure_masks,
)
from polyop.src.families.operations import ExtremalMode, extremal_masks
from polyop.src.utils import bit, face_key, full_mask

logger = logging.getLogger(__name__)


def _check_bound(ambient: int, bound: int, what: str) -> None:
    if ambient < 0:
        msg = f"ambient size must be nonnegative, got {ambient}"
        raise DomainError(msg)
    if ambient > bound:
        msg = f"enumerating {what} on [{ambient}] exceeds the bound {bound}"
        raise ResourceBoundError(msg)


def enumerate_subsets(ambient: int) -> tuple[int, ...]:
    """Get the masks of all subsets of [n] in canonical order."""
    return tuple(sorted(range(1 << ambient), key=face_key))


@cache
def _complex_mask_sets(ambient: int) -> tuple[frozenset[int], ...]:
    if ambient == 0:
        return frozenset(), frozenset([0])
    smaller = _complex_mask_sets(ambient - 1)
    apex = bit(ambient)
    generated = []
    for base in smaller:
        for link in smaller:
            if link <= base:
                generated.append(base | {face | apex for face in link})
    return tuple(generated)


@cache
def enumerate_complexes(ambient: int) -> tuple[SimplicialComplex, ...]:
    """Get all simplicial complexes on [n], including ∅ and {∅}.

    Args:
        ambient: The size n, at most the enumeration bound.

    Returns:
        The complexes in canonical order.
    """
    _check_bound(ambient, ENUMERATION_BOUND, "complexes")
    complexes = sorted(
        (
            SimplicialComplex(ambient, masks, validate=False)
            for masks in _complex_mask_sets(ambient)
        ),
        key=SimplicialComplex.sort_key,
    )
    logger.debug("enumerated %d complexes on [%d]", len(complexes), ambient)
    return tuple(complexes)


def _antichain_masks(ambient: int) -> Iterator[tuple[int, ...]]:
    subsets = enumerate_subsets(ambient)

    def extend(start: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield chosen
        for index in range(start, len(subsets)):
            candidate = subsets[index]
            # later subsets never lie strictly below earlier ones
            if all(candidate & member != member for member in chosen):
                yield from extend(index + 1, (*chosen, candidate))

    return extend(0, ())


@cache
def enumerate_antichains(ambient: int) -> tuple[Family, ...]:
    """Get all transversal families on [n], the empty family included.

    Args:
        ambient: The size n, at most the enumeration bound.

    Returns:
        The antichains in canonical order.
    """
    _check_bound(ambient, ENUMERATION_BOUND, "antichains")
    families = sorted(
        (Family(ambient, masks) for masks in _antichain_masks(ambient)),
        key=Family.sort_key,
    )
    return tuple(families)


@cache
def enumerate_families(ambient: int) -> tuple[Family, ...]:
    """Get all hypergraphs on [n], i.e. all subsets of ℘([n]).

    Args:
        ambient: The size n, at most the family enumeration bound.

    Returns:
        The families in canonical order.
    """
    _check_bound(ambient, FAMILY_ENUMERATION_BOUND, "hypergraphs")
    subsets = enumerate_subsets(ambient)
    families = (
        Family(
            ambient,
            (subsets[i] for i in range(len(subsets)) if selector >> i & 1),
        )
        for selector in range(1 << len(subsets))
    )
    return tuple(sorted(families, key=Family.sort_key))


def enumerate_upward_complexes(ambient: int) -> tuple[Family, ...]:
    """Get all upward-closed families on [n], as pointwise complements of complexes."""
    full = full_mask(ambient)
    upward = (
        Family(ambient, (full ^ mask for mask in complex_.masks))
        for complex_ in enumerate_complexes(ambient)
    )
    return tuple(sorted(upward, key=Family.sort_key))


@cache
def enumerate_pairs(ambient: int) -> tuple[RelativePair, ...]:
    """Get all relative pairs (K, L) with L a subcomplex of K on [n]."""
    complexes = enumerate_complexes(ambient)
    return tuple(
        RelativePair(total, sub)
        for total in complexes
        for sub in complexes
        if sub.issubset(total)
    )


def sample_antichain(ambient: int, rng: random.Random) -> Family:
    """Draw a random transversal family on [n].

    Args:
        ambient: The size n.
        rng: Source of randomness.

    Returns:
        The maximal members of a few random subsets.
    """
    if rng.random() < 0.1:  # noqa: PLR2004
        return Family(ambient, rng.choice([(), (0,)]))
    count = rng.randint(1, ambient + 1)
    masks = sorted(
        {rng.getrandbits(ambient) if ambient else 0 for _ in range(count)},
        key=face_key,
    )
    return Family(ambient, extremal_masks(tuple(masks), ExtremalMode.MAXIMAL))


def sample_complex(ambient: int, rng: random.Random) -> SimplicialComplex:
    """Draw a random complex on [n] as the closure of a random antichain."""
    generators = sample_antichain(ambient, rng)
    return SimplicialComplex(
        ambient, downward_closure_masks(generators.masks), validate=False
    )


def sample_family(ambient: int, rng: random.Random) -> Family:
    """Draw a random hypergraph on [n]."""
    size = 1 << ambient
    half = 0.5
    return Family(ambient, (mask for mask in range(size) if rng.random() < half))


def sample_pair(ambient: int, rng: random.Random) -> RelativePair:
    """Draw a random relative pair on [n]."""
    total = sample_complex(ambient, rng)
    if total.is_empty() or rng.random() < 0.2:  # noqa: PLR2004
        return RelativePair(total, SimplicialComplex(ambient))
    chosen = [
        facet
        for facet in extremal_masks(total.masks, ExtremalMode.MAXIMAL)
        if rng.random() < 0.5  # noqa: PLR2004
    ]
    sub = SimplicialComplex(
        ambient, downward_closure_masks([0, *chosen]), validate=False
    )
    return RelativePair(total, sub)
