"""Search for ways to write a complex as a composite of two non-units.

For a nonempty X on [n] and a split n = p + q - 1 with slot k, any K with
compose(K, k, L) = X deletes to the outer projection of X, i.e. the faces
of K missing k are exactly the faces of X with the block k..k+q-1 removed.
So K is fixed by its link at k, a subcomplex of that projection. L is then
either read back from X or irrelevant, in which case the first admissible
complex in canonical order is taken.
"""

import logging
from collections.abc import Iterator
from functools import partial
from multiprocessing import Pool
from typing import NamedTuple

from polyop.src.errors import DomainError, ResourceBoundError
from polyop.src.families.enumeration import enumerate_complexes
from polyop.src.families.family import SimplicialComplex
from polyop.src.operads.power import ComposeVariant
from polyop.src.operads.scpx import check_variant, compose
from polyop.src.utils import (
    bit,
    extract_block,
    get_decompose_bound,
    insert_block,
    open_position,
    remove_block,
)

logger = logging.getLogger(__name__)


class Decomposition(NamedTuple):
    """A witness X = outer ∘_slot inner."""

    outer: SimplicialComplex
    slot: int
    inner: SimplicialComplex


def get_unit(variant: ComposeVariant) -> SimplicialComplex:
    """Get pt for substitution and {∅} on [1] for composition."""
    if variant is ComposeVariant.SUBST:
        return SimplicialComplex(1, [0, 1])
    return SimplicialComplex(1, [0])


def _check_target(target: SimplicialComplex, bound: int) -> None:
    if target.ambient < 1:
        msg = "only complexes on [n] with n ≥ 1 can be decomposed"
        raise DomainError(msg)
    if target.ambient > bound:
        msg = f"decomposing on [{target.ambient}] exceeds the bound {bound}"
        raise ResourceBoundError(msg)


def _splits(ambient: int) -> Iterator[tuple[int, int]]:
    for outer_arity in range(1, ambient + 1):
        for slot in range(1, outer_arity + 1):
            yield outer_arity, slot


def _first_free_inner(size: int, variant: ComposeVariant) -> SimplicialComplex:
    if size == 1 and variant is ComposeVariant.SUBST:
        return SimplicialComplex(1, [0])
    if size == 1:
        return SimplicialComplex(1, [0, 1])
    return SimplicialComplex(size, [0])


def _outer_candidates(
    target: SimplicialComplex, outer_arity: int, slot: int
) -> list[SimplicialComplex]:
    size = target.ambient - outer_arity + 1
    projection = {remove_block(mask, slot, size) for mask in target.masks}
    deletion = SimplicialComplex(outer_arity - 1, projection, validate=False)
    kept = [open_position(mask, slot) for mask in deletion.masks]
    candidates = [
        SimplicialComplex(
            outer_arity,
            kept + [open_position(mask, slot) | bit(slot) for mask in link.masks],
            validate=False,
        )
        for link in enumerate_complexes(outer_arity - 1)
        if link.issubset(deletion)
    ]
    return sorted(candidates, key=SimplicialComplex.sort_key)


def _forced_inner(
    target: SimplicialComplex,
    outer: SimplicialComplex,
    slot: int,
    variant: ComposeVariant,
) -> SimplicialComplex | None:
    """Read L back from X, or None when L does not affect the composite."""
    size = target.ambient - outer.ambient + 1
    if variant is ComposeVariant.SUBST:
        if bit(slot) not in outer:
            return None
        anchor = 0
    else:
        open_faces = [
            mask
            for mask in outer.masks
            if not mask & bit(slot) and mask | bit(slot) not in outer
        ]
        if not open_faces:
            return None
        anchor = insert_block(open_faces[0], slot, 0, size)
    masks = [
        extract_block(mask, slot, size)
        for mask in target.masks
        if mask & ~(((1 << size) - 1) << (slot - 1)) == anchor
    ]
    return SimplicialComplex(size, masks, validate=False)


def search_split(
    target: SimplicialComplex,
    variant: ComposeVariant,
    split: tuple[int, int],
) -> Decomposition | None:
    """Find the first witness with a given outer arity and slot.

    Args:
        target: The nonempty complex X on [n].
        variant: subst or comp.
        split: The outer arity p and the slot k.

    Returns:
        The first witness in canonical order, or None.
    """
    outer_arity, slot = split
    unit = get_unit(variant)
    size = target.ambient - outer_arity + 1
    logger.debug("searching p=%d k=%d q=%d", outer_arity, slot, size)
    for outer in _outer_candidates(target, outer_arity, slot):
        if outer == unit:
            continue
        inner = _forced_inner(target, outer, slot, variant)
        if inner is None:
            inner = _first_free_inner(size, variant)
        elif inner == unit:
            continue
        if compose(outer, slot, inner, variant) == target:
            return Decomposition(outer, slot, inner)
    return None


def decompose(
    target: SimplicialComplex,
    variant: ComposeVariant,
    *,
    workers: int = 1,
) -> Decomposition | None:
    """Write X as K ∘_k L with neither K nor L the unit, if possible.

    Witnesses are ordered by outer arity, then slot, then K and L in
    canonical order; the first one is returned whatever the worker count.

    Args:
        target: The complex X on [n], n at most the configured bound.
        variant: subst or comp.
        workers: Number of processes sharing the (p, k) splits.

    Returns:
        The first witness, or None when X is indecomposable.
    """
    check_variant(variant)
    _check_target(target, get_decompose_bound())
    if target.is_empty():
        return Decomposition(
            SimplicialComplex(1), 1, SimplicialComplex(target.ambient)
        )
    splits = list(_splits(target.ambient))
    search = partial(search_split, target, variant)
    witness = None
    if workers > 1:
        with Pool(workers) as pool:
            found = pool.map(search, splits)
        witness = next((result for result in found if result is not None), None)
    else:
        witness = next(
            (result for result in map(search, splits) if result is not None), None
        )
    if witness is None:
        logger.info("%s is indecomposable under %s", target, variant)
    else:
        logger.info(
            "%s = %s ∘%d %s", target, witness.outer, witness.slot, witness.inner
        )
    return witness


def decompose_exhaustively(
    target: SimplicialComplex, variant: ComposeVariant
) -> Decomposition | None:
    """Try every K and L in canonical order; the reference for small n.

    Args:
        target: The complex X on [n], n at most the enumeration bound.
        variant: subst or comp.

    Returns:
        The first witness, or None.
    """
    check_variant(variant)
    _check_target(target, get_decompose_bound())
    unit = get_unit(variant)
    for outer_arity, slot in _splits(target.ambient):
        inners = enumerate_complexes(target.ambient - outer_arity + 1)
        for outer in enumerate_complexes(outer_arity):
            if outer == unit:
                continue
            for inner in inners:
                if inner != unit and compose(outer, slot, inner, variant) == target:
                    return Decomposition(outer, slot, inner)
    return None
