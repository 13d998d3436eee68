"""Subsets of [n] with an explicit ambient size."""

from collections.abc import Iterable
from dataclasses import dataclass

from polyop.src.errors import DomainError
from polyop.src.permutations import Permutation, check_permutation
from polyop.src.utils import (
    bit,
    check_ambient,
    face_key,
    full_mask,
    iter_members,
    mask_from_members,
)


@dataclass(frozen=True, slots=True)
class Subset:
    """A subset of [ambient] stored as a bitmask, bit i-1 for position i."""

    ambient: int
    mask: int = 0

    def __post_init__(self) -> None:
        """Validate the ambient size and the mask."""
        check_ambient(self.ambient)
        if self.mask < 0 or self.mask > full_mask(self.ambient):
            msg = f"mask {self.mask} has positions outside [{self.ambient}]"
            raise DomainError(msg)

    @classmethod
    def from_members(cls, ambient: int, members: Iterable[int]) -> "Subset":
        """Build a subset from its 1-based positions.

        Args:
            ambient: The size n of [n].
            members: Positions in 1..n.

        Returns:
            The subset.
        """
        return cls(ambient, mask_from_members(members))

    @classmethod
    def full(cls, ambient: int) -> "Subset":
        """Get [n] itself."""
        return cls(ambient, full_mask(ambient))

    def get_members(self) -> tuple[int, ...]:
        """Get the positions in ascending order."""
        return tuple(iter_members(self.mask))

    def complement(self) -> "Subset":
        """Get [n] minus this subset."""
        return Subset(self.ambient, full_mask(self.ambient) ^ self.mask)

    def relabel(self, sigma: Permutation) -> "Subset":
        """Send every position i to sigma(i)."""
        check_permutation(sigma, self.ambient)
        return Subset.from_members(
            self.ambient, (sigma[i - 1] for i in iter_members(self.mask))
        )

    def sort_key(self) -> tuple[int, int]:
        """Get the canonical sort key."""
        return face_key(self.mask)

    def __contains__(self, position: object) -> bool:
        """Check membership of a 1-based position."""
        return (
            isinstance(position, int)
            and 1 <= position <= self.ambient
            and bool(self.mask & bit(position))
        )

    def __len__(self) -> int:
        """Get the cardinality."""
        return self.mask.bit_count()

    def __str__(self) -> str:
        """Render as {1,3}⊆[5]."""
        members = ",".join(str(member) for member in self.get_members())
        return f"{{{members}}}⊆[{self.ambient}]"
