"""Base class for operad instances checked by the law harness."""

import random
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import ClassVar

from polyop.src.permutations import Permutation


class OperadInstance[E](ABC):
    """An operad given by its elements per arity, unit, composition and action.

    Subclasses describe one operad each. Elements must be immutable and
    compare by value. Exhaustive law checks enumerate arities up to
    exhaustive_bound for the outer element and operand_bound for operands.
    """

    name: ClassVar[str]
    description: ClassVar[str] = ""
    min_arity: ClassVar[int] = 1
    exhaustive_bound: ClassVar[int] = 3
    operand_bound: ClassVar[int] = 3

    @abstractmethod
    def arity(self, element: E) -> int:
        """Get the arity of an element."""

    @abstractmethod
    def compose(self, outer: E, slot: int, inner: E) -> E:
        """Compose inner into outer at a slot."""

    @abstractmethod
    def act(self, element: E, sigma: Permutation) -> E:
        """Relabel an element by a permutation of its arity."""

    @abstractmethod
    def enumerate_arity(self, arity: int) -> Sequence[E]:
        """Get every element of an arity, duplicate-free and in a fixed order."""

    @abstractmethod
    def get_unit(self) -> E | None:
        """Get the unit of arity one, or None for a non-unital operad."""

    def sample_arity(self, arity: int, rng: random.Random) -> E:
        """Draw a random element of an arity.

        Args:
            arity: The arity.
            rng: Source of randomness.

        Returns:
            An element drawn from the enumeration; subclasses override this
            where the enumeration is too large.
        """
        return rng.choice(self.enumerate_arity(arity))

    def is_unital(self) -> bool:
        """Check whether the operad has a unit."""
        return self.get_unit() is not None

    def describe(self, element: E) -> str:
        """Render an element for reports."""
        return str(element)
