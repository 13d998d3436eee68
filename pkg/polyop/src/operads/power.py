"""Power-set iterates of Perm: subsets of [n] and hypergraphs on [n].

Level one holds subsets of [n] (IdemCom, IdemCom^c, ComTrias, ℘(Perm)) and
level two holds families of subsets (hypergraphs). Three composition rules
share one kernel:

- subst: I ∘_k J inserts J at k when k ∈ I, and only closes the gap otherwise,
  for every J including the empty one (IdemCom).
- comp: the complement-conjugate rule, inserting all of [m] when k ∈ I and J
  when k ∉ I (IdemCom^c).
- power: the literal power-set rule {i ∘_k j : i ∈ I, j ∈ J}, equal to subst
  except that an empty J absorbs (℘(Perm)).

At level two compositions are elementwise, and an empty operand family
always yields the empty family.
"""

import random
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import ClassVar

from polyop.src.errors import DomainError
from polyop.src.families.enumeration import (
    enumerate_families,
    enumerate_subsets,
    sample_family,
)
from polyop.src.families.family import Family
from polyop.src.families.operations import relabel
from polyop.src.families.subset import Subset
from polyop.src.operads.base import OperadInstance
from polyop.src.operads.perm import PermElement
from polyop.src.permutations import Permutation
from polyop.src.utils import (
    bit,
    check_ambient,
    check_slot,
    full_mask,
    insert_block,
)


class ComposeVariant(StrEnum):
    """Composition rules on subsets."""

    SUBST = "subst"
    COMP = "comp"
    POWER = "power"


def compose_mask(
    outer: int, slot: int, inner: int, size: int, variant: ComposeVariant
) -> int:
    """Compose masks I ⊆ [n] and J ⊆ [m] at slot k.

    Args:
        outer: The mask of I.
        slot: The slot k.
        inner: The mask of J.
        size: The size m of the inner ambient.
        variant: The composition rule.

    Returns:
        The mask of the composite in [n+m-1].
    """
    if variant is ComposeVariant.POWER and not inner:
        return 0
    if outer & bit(slot):
        block = full_mask(size) if variant is ComposeVariant.COMP else inner
    else:
        block = inner if variant is ComposeVariant.COMP else 0
    return insert_block(outer, slot, block, size)


def subset_compose(
    outer: Subset, slot: int, inner: Subset, variant: ComposeVariant
) -> Subset:
    """Compose J ⊆ [m] into I ⊆ [n] at slot k.

    Args:
        outer: The subset I.
        slot: The slot k in [n].
        inner: The subset J; m = 0 deletes the slot.
        variant: The composition rule.

    Returns:
        The composite subset of [n+m-1].
    """
    check_slot(slot, outer.ambient)
    ambient = outer.ambient + inner.ambient - 1
    return Subset(
        ambient, compose_mask(outer.mask, slot, inner.mask, inner.ambient, variant)
    )


def family_compose(
    outer: Family, slot: int, inner: Family, variant: ComposeVariant
) -> Family:
    """Compose hypergraphs elementwise, {I ∘_k J : I ∈ A, J ∈ B}.

    Args:
        outer: The family A on [n].
        slot: The slot k in [n].
        inner: The family B on [m].
        variant: The rule applied to each pair of members.

    Returns:
        The family on [n+m-1], without any closure applied.
    """
    check_slot(slot, outer.ambient)
    size = inner.ambient
    ambient = outer.ambient + size - 1
    check_ambient(ambient)
    return Family(
        ambient,
        {
            compose_mask(i, slot, j, size, variant)
            for i in outer.masks
            for j in inner.masks
        },
    )


@dataclass(frozen=True)
class PowerPermElement:
    """An element of ℘(Perm)(n) (level one) or ℘²(Perm)(n) (level two)."""

    arity: int
    level: int
    payload: Subset | Family

    def __post_init__(self) -> None:
        """Validate the level and the payload's ambient size."""
        if self.level == 1:
            if not isinstance(self.payload, Subset):
                msg = "level-one payloads are subsets"
                raise DomainError(msg)
        elif self.level == 2:  # noqa: PLR2004
            if not isinstance(self.payload, Family):
                msg = "level-two payloads are families"
                raise DomainError(msg)
        else:
            msg = f"power level must be 1 or 2, got {self.level}"
            raise DomainError(msg)
        if self.payload.ambient != self.arity:
            msg = f"payload lives on [{self.payload.ambient}], not [{self.arity}]"
            raise DomainError(msg)

    @classmethod
    def of(cls, payload: Subset | Family) -> "PowerPermElement":
        """Wrap a subset or a family at its natural level and arity."""
        level = 1 if isinstance(payload, Subset) else 2
        return cls(payload.ambient, level, payload)

    def __str__(self) -> str:
        """Render the payload with its ambient size."""
        if isinstance(self.payload, Subset):
            return str(self.payload)
        return f"{self.payload} on [{self.arity}]"


def power_compose(
    outer: PowerPermElement,
    slot: int,
    inner: PowerPermElement,
    variant: ComposeVariant,
) -> PowerPermElement:
    """Compose two power elements of the same level.

    Args:
        outer: Element of arity n.
        slot: The slot k.
        inner: Element of arity m.
        variant: The rule applied to subsets.

    Returns:
        The element of arity n+m-1.
    """
    if outer.level != inner.level:
        msg = f"cannot compose level {inner.level} into level {outer.level}"
        raise DomainError(msg)
    if isinstance(outer.payload, Subset) and isinstance(inner.payload, Subset):
        return PowerPermElement.of(
            subset_compose(outer.payload, slot, inner.payload, variant)
        )
    if isinstance(outer.payload, Family) and isinstance(inner.payload, Family):
        return PowerPermElement.of(
            family_compose(outer.payload, slot, inner.payload, variant)
        )
    msg = "payload kinds do not match the level"
    raise DomainError(msg)


def monad_unit(element: PermElement | PowerPermElement) -> PowerPermElement:
    """Wrap an element as a singleton one level up, η(x) = {x}.

    Args:
        element: An element of Perm or a level-one power element.

    Returns:
        The singleton at the next level.
    """
    if isinstance(element, PermElement):
        return PowerPermElement.of(Subset(element.arity, bit(element.value)))
    if isinstance(element.payload, Subset):
        return PowerPermElement.of(
            Family(element.arity, [element.payload.mask])
        )
    msg = "the unit is only defined up to level two"
    raise DomainError(msg)


def monad_mult(element: PowerPermElement) -> PowerPermElement:
    """Flatten a hypergraph to the union of its members, μ(A) = ∪A."""
    if not isinstance(element.payload, Family):
        msg = "the product flattens level-two elements"
        raise DomainError(msg)
    return PowerPermElement.of(Subset(element.arity, element.payload.support))


class SubsetOperad(OperadInstance[PowerPermElement]):
    """Level-one power operads: subsets of [n] under one composition rule."""

    variant: ClassVar[ComposeVariant]
    reduced: ClassVar[bool] = False
    unit_mask: ClassVar[int]

    def arity(self, element: PowerPermElement) -> int:
        """Get n."""
        return element.arity

    def compose(
        self, outer: PowerPermElement, slot: int, inner: PowerPermElement
    ) -> PowerPermElement:
        """Compose with this operad's rule."""
        return power_compose(outer, slot, inner, self.variant)

    def act(self, element: PowerPermElement, sigma: Permutation) -> PowerPermElement:
        """Relabel the subset."""
        if not isinstance(element.payload, Subset):
            msg = "expected a level-one element"
            raise DomainError(msg)
        return PowerPermElement.of(element.payload.relabel(sigma))

    def enumerate_arity(self, arity: int) -> Sequence[PowerPermElement]:
        """Get every subset of [n], the empty one only when unreduced."""
        return [
            PowerPermElement.of(Subset(arity, mask))
            for mask in enumerate_subsets(arity)
            if mask or not self.reduced
        ]

    def get_unit(self) -> PowerPermElement:
        """Get the unit subset of [1]."""
        return PowerPermElement.of(Subset(1, self.unit_mask))


class IdemComOperad(SubsetOperad):
    """IdemCom: all subsets under substitution, unit {1}."""

    name = "idemcom"
    description = "subsets of [n] under substitution"
    variant = ComposeVariant.SUBST
    unit_mask = 1


class IdemComComplementOperad(SubsetOperad):
    """IdemCom^c: all subsets under the complement-conjugate rule, unit ∅."""

    name = "idemcom-c"
    description = "subsets of [n] under the complement-conjugate composition"
    variant = ComposeVariant.COMP
    unit_mask = 0


class PowerPermOperad(SubsetOperad):
    """℘(Perm): the literal power set of Perm, with ℘(Perm)(0) = {∅}."""

    name = "power-perm"
    description = "power set of Perm, empty operands absorb"
    variant = ComposeVariant.POWER
    min_arity = 0
    unit_mask = 1


class ComTriasOperad(SubsetOperad):
    """ComTrias, realized as the nonempty subsets of [n] under substitution."""

    name = "comtrias"
    description = "reduced power set of Perm"
    variant = ComposeVariant.SUBST
    reduced = True
    unit_mask = 1


class HypergraphOperad(OperadInstance[PowerPermElement]):
    """Level-two power operads: hypergraphs under elementwise composition."""

    variant: ClassVar[ComposeVariant]
    reduced: ClassVar[bool] = False
    exhaustive_bound = 2
    operand_bound = 2

    def arity(self, element: PowerPermElement) -> int:
        """Get n."""
        return element.arity

    def compose(
        self, outer: PowerPermElement, slot: int, inner: PowerPermElement
    ) -> PowerPermElement:
        """Compose elementwise with this operad's rule."""
        return power_compose(outer, slot, inner, self.variant)

    def act(self, element: PowerPermElement, sigma: Permutation) -> PowerPermElement:
        """Relabel every member."""
        if not isinstance(element.payload, Family):
            msg = "expected a level-two element"
            raise DomainError(msg)
        return PowerPermElement.of(relabel(element.payload, sigma))

    def admits(self, family: Family) -> bool:
        """Check membership in the element universe."""
        return not self.reduced or (not family.is_empty() and 0 not in family)

    def enumerate_arity(self, arity: int) -> Sequence[PowerPermElement]:
        """Get every admitted hypergraph on [n]."""
        return [
            PowerPermElement.of(family)
            for family in enumerate_families(arity)
            if self.admits(family)
        ]

    def sample_arity(self, arity: int, rng: random.Random) -> PowerPermElement:
        """Draw a random admitted hypergraph on [n]."""
        while True:
            family = sample_family(arity, rng)
            if self.admits(family):
                return PowerPermElement.of(family)

    def get_unit(self) -> PowerPermElement:
        """Get the level-two image of the level-one unit."""
        unit_mask = 0 if self.variant is ComposeVariant.COMP else 1
        return PowerPermElement.of(Family(1, [unit_mask]))


class HypergraphSubstitutionOperad(HypergraphOperad):
    """Hypergraphs under elementwise substitution, unit {{1}}."""

    name = "hypg-subst"
    description = "hypergraphs under elementwise substitution"
    variant = ComposeVariant.SUBST


class ReducedHypergraphSubstitutionOperad(HypergraphOperad):
    """Nonempty hypergraphs of nonempty subsets under elementwise substitution."""

    name = "hypg-subst-reduced"
    description = "reduced hypergraphs under elementwise substitution"
    variant = ComposeVariant.SUBST
    reduced = True


class HypergraphCompositionOperad(HypergraphOperad):
    """Hypergraphs under the elementwise complement-conjugate rule, unit {∅}."""

    name = "hypg-comp"
    description = "hypergraphs under elementwise composition"
    variant = ComposeVariant.COMP
