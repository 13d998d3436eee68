"""The permutative operad Perm, with Perm(n) = [n]."""

from collections.abc import Sequence
from dataclasses import dataclass

from polyop.src.errors import DomainError
from polyop.src.operads.base import OperadInstance
from polyop.src.permutations import Permutation, check_permutation
from polyop.src.utils import check_slot


@dataclass(frozen=True, slots=True)
class PermElement:
    """The element i of Perm(n)."""

    arity: int
    value: int

    def __post_init__(self) -> None:
        """Validate 1 <= value <= arity."""
        if not 1 <= self.value <= self.arity:
            msg = f"Perm({self.arity}) has no element {self.value}"
            raise DomainError(msg)

    def __str__(self) -> str:
        """Render as i∈[n]."""
        return f"{self.value}∈[{self.arity}]"


def perm_compose(outer: PermElement, slot: int, inner: PermElement) -> PermElement:
    """Compose j ∈ [m] into i ∈ [n] at slot k.

    Args:
        outer: The element i.
        slot: The slot k in [n].
        inner: The element j.

    Returns:
        i+m-1 if k < i, i+j-1 if k = i and i if k > i, in [n+m-1].
    """
    check_slot(slot, outer.arity)
    arity = outer.arity + inner.arity - 1
    if slot < outer.value:
        return PermElement(arity, outer.value + inner.arity - 1)
    if slot == outer.value:
        return PermElement(arity, outer.value + inner.value - 1)
    return PermElement(arity, outer.value)


class PermOperad(OperadInstance[PermElement]):
    """Perm with its natural action of the symmetric groups."""

    name = "perm"
    description = "permutative operad, Perm(n) = [n]"
    exhaustive_bound = 4
    operand_bound = 4

    def arity(self, element: PermElement) -> int:
        """Get n for i ∈ [n]."""
        return element.arity

    def compose(self, outer: PermElement, slot: int, inner: PermElement) -> PermElement:
        """Compose by index arithmetic."""
        return perm_compose(outer, slot, inner)

    def act(self, element: PermElement, sigma: Permutation) -> PermElement:
        """Send i to sigma(i)."""
        check_permutation(sigma, element.arity)
        return PermElement(element.arity, sigma[element.value - 1])

    def enumerate_arity(self, arity: int) -> Sequence[PermElement]:
        """Get 1, ..., n in [n]."""
        return [PermElement(arity, value) for value in range(1, arity + 1)]

    def get_unit(self) -> PermElement:
        """Get 1 ∈ [1]."""
        return PermElement(1, 1)
