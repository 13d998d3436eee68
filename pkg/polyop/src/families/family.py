"""Families of subsets of [n], simplicial complexes and relative pairs.

A family is stored as a tuple of bitmasks in canonical order (cardinality,
then mask value). Two families are equal iff their ambient sizes and mask
tuples coincide, so {∅} on [1] differs from {∅} on [2].
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import Self

from polyop.src.errors import DomainError
from polyop.src.families.subset import Subset
from polyop.src.utils import (
    check_ambient,
    face_key,
    full_mask,
    iter_members,
    mask_from_members,
)


class Family:
    """A finite set of subsets of [n], also called a hypergraph."""

    def __init__(self, ambient: int, masks: Iterable[int] = ()) -> None:
        """Initialize the family.

        Args:
            ambient: The size n of [n].
            masks: Bitmasks of the member subsets, in any order, duplicates allowed.
        """
        check_ambient(ambient)
        unique = frozenset(masks)
        limit = full_mask(ambient)
        for mask in unique:
            if mask < 0 or mask > limit:
                msg = f"mask {mask} has positions outside [{ambient}]"
                raise DomainError(msg)
        self._ambient = ambient
        self._mask_set = unique
        self._masks = tuple(sorted(unique, key=face_key))

    @classmethod
    def from_faces(cls, ambient: int, faces: Iterable[Iterable[int]]) -> Self:
        """Build a family from subsets given as 1-based positions.

        Args:
            ambient: The size n of [n].
            faces: Each face as an iterable of positions.

        Returns:
            The family.
        """
        masks = [mask_from_members(face) for face in faces]
        for mask in masks:
            if mask > full_mask(ambient):
                members = sorted(iter_members(mask))
                msg = f"face {members} is not a subset of [{ambient}]"
                raise DomainError(msg)
        return cls(ambient, masks)

    @classmethod
    def from_subsets(cls, ambient: int, subsets: Iterable[Subset]) -> Self:
        """Build a family from Subset values sharing the ambient size."""
        masks = []
        for subset in subsets:
            if subset.ambient != ambient:
                msg = f"subset {subset} does not live in [{ambient}]"
                raise DomainError(msg)
            masks.append(subset.mask)
        return cls(ambient, masks)

    @property
    def ambient(self) -> int:
        """The size n of [n]."""
        return self._ambient

    @property
    def masks(self) -> tuple[int, ...]:
        """The member masks in canonical order."""
        return self._masks

    @property
    def mask_set(self) -> frozenset[int]:
        """The member masks as a set."""
        return self._mask_set

    def get_subsets(self) -> tuple[Subset, ...]:
        """Get the members as Subset values in canonical order."""
        return tuple(Subset(self._ambient, mask) for mask in self._masks)

    def get_faces(self) -> tuple[tuple[int, ...], ...]:
        """Get the members as tuples of positions in canonical order."""
        return tuple(tuple(iter_members(mask)) for mask in self._masks)

    @cached_property
    def support(self) -> int:
        """Mask of all positions occurring in some member."""
        union = 0
        for mask in self._masks:
            union |= mask
        return union

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order of families: number of members, then members."""
        return len(self._masks), self._masks

    def is_empty(self) -> bool:
        """Check whether the family has no members."""
        return not self._masks

    def is_trivial(self) -> bool:
        """Check whether the family is {∅}."""
        return self._masks == (0,)

    def union(self, other: "Family") -> "Family":
        """Get the union with a family on the same ambient."""
        self._check_same_ambient(other)
        return Family(self._ambient, self._mask_set | other.mask_set)

    def intersection(self, other: "Family") -> "Family":
        """Get the intersection with a family on the same ambient."""
        self._check_same_ambient(other)
        return Family(self._ambient, self._mask_set & other.mask_set)

    def issubset(self, other: "Family") -> bool:
        """Check inclusion in a family on the same ambient."""
        return self._ambient == other.ambient and self._mask_set <= other.mask_set

    def _check_same_ambient(self, other: "Family") -> None:
        if self._ambient != other.ambient:
            msg = f"ambient sizes differ: {self._ambient} and {other.ambient}"
            raise DomainError(msg)

    def __contains__(self, item: object) -> bool:
        """Check membership of a mask or of a Subset on the same ambient."""
        if isinstance(item, Subset):
            return item.ambient == self._ambient and item.mask in self._mask_set
        return item in self._mask_set

    def __iter__(self) -> Iterator[int]:
        """Iterate over member masks in canonical order."""
        return iter(self._masks)

    def __len__(self) -> int:
        """Get the number of members."""
        return len(self._masks)

    def __eq__(self, other: object) -> bool:
        """Compare ambient sizes and members."""
        if not isinstance(other, Family):
            return NotImplemented
        return self._ambient == other.ambient and self._masks == other.masks

    def __hash__(self) -> int:
        """Hash ambient size and members."""
        return hash((self._ambient, self._masks))

    def __repr__(self) -> str:
        """Render with explicit ambient size."""
        return f"{type(self).__name__}(n={self._ambient}, {self})"

    def __str__(self) -> str:
        """Render as {∅,{1},{1,2}}."""
        faces = []
        for mask in self._masks:
            members = ",".join(str(member) for member in iter_members(mask))
            faces.append(f"{{{members}}}" if mask else "∅")
        return "{" + ",".join(faces) + "}"


class SimplicialComplex(Family):
    """A downward-closed family; may be empty (∅) or trivial ({∅})."""

    def __init__(
        self, ambient: int, masks: Iterable[int] = (), *, validate: bool = True
    ) -> None:
        """Initialize the complex.

        Args:
            ambient: The size n of [n].
            masks: The faces.
            validate: Check downward closure. Kernels that produce closed
                families by construction pass False.
        """
        super().__init__(ambient, masks)
        if validate:
            for mask in self.masks:
                for member in iter_members(mask):
                    if mask & ~(1 << (member - 1)) not in self.mask_set:
                        msg = f"{self} is not downward closed"
                        raise DomainError(msg)

    @classmethod
    def from_facets(cls, ambient: int, facets: Iterable[Iterable[int]]) -> Self:
        """Build the downward closure of the given facets.

        Args:
            ambient: The size n of [n].
            facets: Generating faces as iterables of positions.

        Returns:
            The smallest complex containing every facet.
        """
        generators = Family.from_faces(ambient, facets)
        return cls(ambient, downward_closure_masks(generators.masks), validate=False)

    @classmethod
    def from_family(cls, family: Family) -> Self:
        """Reinterpret a family as a complex, validating downward closure."""
        return cls(family.ambient, family.masks)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Non-ghost vertices: positions i with {i} a face."""
        return tuple(
            position
            for position in range(1, self.ambient + 1)
            if 1 << (position - 1) in self.mask_set
        )

    def ghost_vertices(self) -> tuple[int, ...]:
        """Positions i of [n] with {i} not a face."""
        present = set(self.vertices)
        return tuple(
            position
            for position in range(1, self.ambient + 1)
            if position not in present
        )


def downward_closure_masks(masks: Iterable[int]) -> set[int]:
    """Get all subsets of the given masks.

    Args:
        masks: Generating subsets.

    Returns:
        The set of all their subsets.
    """
    closed: set[int] = set()
    stack = list(masks)
    while stack:
        mask = stack.pop()
        if mask in closed:
            continue
        closed.add(mask)
        rest = mask
        while rest:
            low = rest & -rest
            smaller = mask ^ low
            if smaller not in closed:
                stack.append(smaller)
            rest ^= low
    return closed


def upward_closure_masks(masks: Iterable[int], ambient: int) -> set[int]:
    """Get all supersets within [ambient] of the given masks."""
    full = full_mask(ambient)
    closed: set[int] = set()
    stack = list(masks)
    while stack:
        mask = stack.pop()
        if mask in closed:
            continue
        closed.add(mask)
        rest = full ^ mask
        while rest:
            low = rest & -rest
            larger = mask | low
            if larger not in closed:
                stack.append(larger)
            rest ^= low
    return closed


@dataclass(frozen=True)
class RelativePair:
    """A relative simplicial complex (K, L) with L a subcomplex of K."""

    total: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self) -> None:
        """Validate the common ambient size and the inclusion."""
        if self.total.ambient != self.sub.ambient:
            msg = (
                f"pair ambient sizes differ: {self.total.ambient} "
                f"and {self.sub.ambient}"
            )
            raise DomainError(msg)
        if not self.sub.issubset(self.total):
            msg = f"{self.sub} is not a subcomplex of {self.total}"
            raise DomainError(msg)

    @property
    def ambient(self) -> int:
        """The common size n of [n]."""
        return self.total.ambient

    def sort_key(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """Canonical order: total first, then sub."""
        return self.total.sort_key(), self.sub.sort_key()

    def __str__(self) -> str:
        """Render as (K, L) on [n]."""
        return f"({self.total}, {self.sub}) on [{self.ambient}]"
