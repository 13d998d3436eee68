"""Closures, complements, extremal elements and joins of families."""

from dataclasses import dataclass
from enum import StrEnum

from polyop.src.errors import DomainError, PreconditionError, ResourceBoundError
from polyop.src.families.family import (
    Family,
    SimplicialComplex,
    downward_closure_masks,
    upward_closure_masks,
)
from polyop.src.permutations import Permutation, check_permutation
from polyop.src.utils import (
    bit,
    check_ambient,
    check_slot,
    full_mask,
    get_ambient_cap,
    insert_block,
    iter_members,
)


class ClosureMode(StrEnum):
    """Kinds of closure of a family."""

    DOWN = "down"
    REDUCED_DOWN = "reduced_down"
    UP = "up"


class ComplementMode(StrEnum):
    """Kinds of complement of a family at power two."""

    FACES = "faces"
    POINTWISE = "pointwise"
    DERIVED = "derived"


class ExtremalMode(StrEnum):
    """Which inclusionwise extremal members to keep."""

    MAXIMAL = "maximal"
    MINIMAL = "minimal"


class NonFaceMode(StrEnum):
    """Minimal non-faces of a complex or maximal non-members of an upward family."""

    MNF = "mnf"
    MNU = "mnu"


@dataclass(frozen=True)
class FamilyFlags:
    """Closure classes a family belongs to."""

    is_simplicial: bool
    is_upward: bool
    is_transversal: bool
    is_reduced: bool


def power_set(ambient: int) -> SimplicialComplex:
    """Get ℘([n]), the full simplex Δ_[n] as a complex."""
    check_ambient(ambient)
    return SimplicialComplex(ambient, range(1 << ambient), validate=False)


def closure(family: Family, mode: ClosureMode) -> Family:
    """Close a family downward, downward without ∅, or upward.

    Args:
        family: The family F.
        mode: down gives the smallest complex containing F, reduced_down
            drops the empty face and requires a nonempty F without ∅, up gives
            the smallest upward-closed family containing F.

    Returns:
        The closure; a SimplicialComplex for the down mode.
    """
    if mode is ClosureMode.DOWN:
        return SimplicialComplex(
            family.ambient, downward_closure_masks(family.masks), validate=False
        )
    if mode is ClosureMode.REDUCED_DOWN:
        if family.is_empty() or 0 in family:
            msg = "reduced closure needs a nonempty family without the empty set"
            raise DomainError(msg)
        closed = downward_closure_masks(family.masks)
        closed.discard(0)
        return Family(family.ambient, closed)
    return Family(family.ambient, upward_closure_masks(family.masks, family.ambient))


def complement(
    family: Family, mode: ComplementMode, level: int | None = None
) -> Family:
    """Complement a family at power two.

    The faces mode is ℘([n]) minus F and the pointwise mode replaces every
    member by its complement in [n]. The derived mode selects one of them by
    level: level 1 is faces and level 2 is pointwise.

    Args:
        family: The family F.
        mode: Which complement.
        level: Required for the derived mode, 1 or 2.

    Returns:
        The complemented family.
    """
    if mode is ComplementMode.DERIVED:
        if level == 1:
            mode = ComplementMode.FACES
        elif level == 2:  # noqa: PLR2004
            mode = ComplementMode.POINTWISE
        else:
            msg = f"derived complement level must be 1 or 2, got {level}"
            raise DomainError(msg)
    if mode is ComplementMode.POINTWISE:
        full = full_mask(family.ambient)
        return Family(family.ambient, (full ^ mask for mask in family.masks))
    if family.ambient > get_ambient_cap():
        msg = f"℘([{family.ambient}]) is too large to complement in"
        raise ResourceBoundError(msg)
    present = family.mask_set
    return Family(
        family.ambient,
        (mask for mask in range(1 << family.ambient) if mask not in present),
    )


def extremal_masks(masks: tuple[int, ...], mode: ExtremalMode) -> list[int]:
    """Get the inclusionwise maximal or minimal masks.

    Args:
        masks: Masks in canonical order (increasing cardinality).
        mode: Which extremal members to keep.

    Returns:
        The extremal masks.
    """
    kept: list[int] = []
    if mode is ExtremalMode.MAXIMAL:
        # a non-maximal member lies below some maximal one, and maximal
        # members are met first when walking down in size
        for mask in reversed(masks):
            if not any(mask & other == mask for other in kept):
                kept.append(mask)
    else:
        for mask in masks:
            if not any(mask & other == other for other in kept):
                kept.append(mask)
    return kept


def extremals(family: Family, mode: ExtremalMode) -> Family:
    """Get the facets (maximal) or the minimal members of a family.

    Args:
        family: The family F.
        mode: maximal or minimal.

    Returns:
        A transversal family on the same ambient.
    """
    return Family(family.ambient, extremal_masks(family.masks, mode))


def facets(complex_: Family) -> Family:
    """Get the facets of a complex."""
    return extremals(complex_, ExtremalMode.MAXIMAL)


def non_faces(family: Family, mode: NonFaceMode) -> Family:
    """Get minimal non-faces of a complex or maximal non-members of an upward family.

    Args:
        family: A downward-closed family for mnf, an upward-closed one for mnu.
        mode: mnf gives the minimal elements of ℘([n]) minus K, mnu the
            maximal elements of ℘([n]) minus U.

    Returns:
        A transversal family.
    """
    flags = classify(family)
    ambient = family.ambient
    present = family.mask_set
    found: set[int] = set()
    if mode is NonFaceMode.MNF:
        if not flags.is_simplicial:
            msg = f"minimal non-faces need a downward-closed family, got {family}"
            raise DomainError(msg)
        if not present:
            return Family(ambient, [0])
        for mask in present:
            for position in range(1, ambient + 1):
                candidate = mask | bit(position)
                if candidate in present or candidate in found:
                    continue
                if all(candidate ^ bit(i) in present for i in iter_members(candidate)):
                    found.add(candidate)
        return Family(ambient, found)
    if not flags.is_upward:
        msg = f"maximal non-members need an upward-closed family, got {family}"
        raise DomainError(msg)
    full = full_mask(ambient)
    if not present:
        return Family(ambient, [full])
    for mask in present:
        for position in iter_members(mask):
            candidate = mask ^ bit(position)
            if candidate in present or candidate in found:
                continue
            if all(
                candidate | bit(i) in present for i in iter_members(full ^ candidate)
            ):
                found.add(candidate)
    return Family(ambient, found)


def classify(family: Family) -> FamilyFlags:
    """Compute the closure-class flags of a family."""
    present = family.mask_set
    full = full_mask(family.ambient)
    is_simplicial = all(
        mask ^ bit(i) in present for mask in present for i in iter_members(mask)
    )
    is_upward = all(
        mask | bit(i) in present
        for mask in present
        for i in iter_members(full ^ mask)
    )
    is_transversal = len(extremal_masks(family.masks, ExtremalMode.MAXIMAL)) == len(
        family
    )
    return FamilyFlags(
        is_simplicial=is_simplicial,
        is_upward=is_upward,
        is_transversal=is_transversal,
        is_reduced=0 not in present,
    )


def is_transversal(family: Family) -> bool:
    """Check that no member contains another."""
    return classify(family).is_transversal


def dimension(complex_: Family) -> int | None:
    """Get the dimension of a complex.

    Args:
        complex_: A downward-closed family.

    Returns:
        The largest face size minus one, so -1 for {∅}, and None for the
        empty complex, which has no faces at all.
    """
    if complex_.is_empty():
        return None
    return complex_.masks[-1].bit_count() - 1


def is_pure(complex_: Family) -> bool:
    """Check whether all facets of a nonempty complex have the same size."""
    sizes = {mask.bit_count() for mask in facets(complex_)}
    return len(sizes) == 1


def relabel[F: Family](family: F, sigma: Permutation) -> F:
    """Send every position i to sigma(i) in every member.

    Args:
        family: The family F on [n].
        sigma: A permutation of [n].

    Returns:
        σ(F), of the same kind as F.
    """
    check_permutation(sigma, family.ambient)
    images = [bit(image) for image in sigma]
    relabeled = []
    for mask in family.masks:
        image = 0
        for position in iter_members(mask):
            image |= images[position - 1]
        relabeled.append(image)
    return rebuild(family, family.ambient, relabeled)


def rebuild[F: Family](template: F, ambient: int, masks: list[int] | set[int]) -> F:
    """Build a family of the same kind as template.

    Closure under the operation that produced the masks is assumed, so
    complexes are not revalidated.
    """
    if isinstance(template, SimplicialComplex):
        return type(template)(ambient, masks, validate=False)
    return type(template)(ambient, masks)


def join(left: SimplicialComplex, right: SimplicialComplex) -> SimplicialComplex:
    """Get the join K ∗ L on [n1+n2], with faces I1 ⊔ (I2+n1).

    Args:
        left: The complex K on [n1].
        right: The complex L on [n2].

    Returns:
        The join; empty if either side is empty.
    """
    shift = left.ambient
    ambient = left.ambient + right.ambient
    check_ambient(ambient)
    return SimplicialComplex(
        ambient,
        (a | (b << shift) for a in left.masks for b in right.masks),
        validate=False,
    )


def slot_join(
    outer: SimplicialComplex, inner: SimplicialComplex, slot: int
) -> SimplicialComplex:
    """Get A ∗_k B = A_{<k} ∗ (B+k-1) ∗ (A_{>k}+m-1) for a ghost vertex k of A.

    Args:
        outer: The complex A on [n] with {k} not a face.
        inner: The complex B on [m].
        slot: The ghost vertex k.

    Returns:
        The complex on [n+m-1].
    """
    check_slot(slot, outer.ambient)
    if bit(slot) in outer:
        msg = f"vertex {slot} of {outer} is not a ghost vertex"
        raise PreconditionError(msg)
    size = inner.ambient
    ambient = outer.ambient + size - 1
    check_ambient(ambient)
    return SimplicialComplex(
        ambient,
        (insert_block(a, slot, b, size) for a in outer.masks for b in inner.masks),
        validate=False,
    )
