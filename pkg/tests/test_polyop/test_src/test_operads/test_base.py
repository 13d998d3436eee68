"""module."""

import random
from collections.abc import Sequence

from polyop.src.operads.base import OperadInstance
from polyop.src.operads.perm import PermElement, PermOperad
from polyop.src.permutations import Permutation


class CountingOperad(OperadInstance[int]):
    """Arity-only operad without a unit."""

    name = "counting"

    def arity(self, element: int) -> int:
        """Get the element itself."""
        return element

    def compose(self, outer: int, slot: int, inner: int) -> int:  # noqa: ARG002
        """Add arities."""
        return outer + inner - 1

    def act(self, element: int, sigma: Permutation) -> int:  # noqa: ARG002
        """Ignore the permutation."""
        return element

    def enumerate_arity(self, arity: int) -> Sequence[int]:
        """Get the single element."""
        return [arity]

    def get_unit(self) -> None:
        """Get no unit."""


class TestOperadInstance:
    """Test class."""

    def test_arity(self) -> None:
        """Test method."""
        assert CountingOperad().arity(4) == 4

    def test_compose(self) -> None:
        """Test method."""
        assert CountingOperad().compose(3, 2, 2) == 4

    def test_act(self) -> None:
        """Test method."""
        assert CountingOperad().act(2, (2, 1)) == 2

    def test_enumerate_arity(self) -> None:
        """Test method."""
        assert list(PermOperad().enumerate_arity(2)) == [
            PermElement(2, 1),
            PermElement(2, 2),
        ]

    def test_get_unit(self) -> None:
        """Test method."""
        assert CountingOperad().get_unit() is None

    def test_sample_arity(self) -> None:
        """Test method."""
        inst = PermOperad()
        rng = random.Random(5)
        for _ in range(10):
            assert inst.sample_arity(3, rng) in inst.enumerate_arity(3)

    def test_is_unital(self) -> None:
        """Test method."""
        assert PermOperad().is_unital()
        assert not CountingOperad().is_unital()

    def test_describe(self) -> None:
        """Test method."""
        assert PermOperad().describe(PermElement(3, 2)) == "2∈[3]"
        assert CountingOperad().min_arity == 1
