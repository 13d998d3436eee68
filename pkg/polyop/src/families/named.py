"""Named simplicial complexes and their command-line shorthands."""

import re
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

from polyop.src.errors import DomainError
from polyop.src.families.family import SimplicialComplex, downward_closure_masks
from polyop.src.utils import bit, full_mask, mask_from_members


class NamedKind(StrEnum):
    """The families of named complexes."""

    TRIVIAL = "trivial"
    DISCRETE = "discrete"
    SIMPLEX = "simplex"
    BOUNDARY_SIMPLEX = "bd"
    COMPLETE_PURE = "pure"
    POINT = "pt"


@dataclass(frozen=True)
class NamedComplex:
    """A named complex together with its parameters and realization."""

    kind: NamedKind
    params: tuple[int, ...]
    realized: SimplicialComplex

    @classmethod
    def trivial(cls, ambient: int) -> "NamedComplex":
        """Get {∅} on [n]."""
        return cls(
            NamedKind.TRIVIAL, (ambient,), SimplicialComplex(ambient, [0])
        )

    @classmethod
    def discrete(cls, ambient: int) -> "NamedComplex":
        """Get {∅,{1},...,{n}}."""
        masks = [0, *(bit(i) for i in range(1, ambient + 1))]
        return cls(
            NamedKind.DISCRETE,
            (ambient,),
            SimplicialComplex(ambient, masks, validate=False),
        )

    @classmethod
    def simplex(cls, ambient: int) -> "NamedComplex":
        """Get Δ_[n] = ℘([n])."""
        return cls(
            NamedKind.SIMPLEX,
            (ambient,),
            SimplicialComplex(ambient, range(1 << ambient), validate=False),
        )

    @classmethod
    def boundary_simplex(cls, ambient: int) -> "NamedComplex":
        """Get ∂Δ_[n], all proper subsets of [n]."""
        return cls(
            NamedKind.BOUNDARY_SIMPLEX,
            (ambient,),
            SimplicialComplex(
                ambient, range(full_mask(ambient)), validate=False
            ),
        )

    @classmethod
    def complete_pure(cls, ambient: int, size: int) -> "NamedComplex":
        """Get Δ^(k-1)_[n], the closure of all k-subsets of [n].

        Args:
            ambient: The size n.
            size: The facet size k, between 0 and n.

        Returns:
            The complete pure complex.
        """
        if not 0 <= size <= ambient:
            msg = f"facet size {size} out of range 0..{ambient}"
            raise DomainError(msg)
        generators = (
            mask_from_members(members)
            for members in combinations(range(1, ambient + 1), size)
        )
        return cls(
            NamedKind.COMPLETE_PURE,
            (ambient, size),
            SimplicialComplex(
                ambient, downward_closure_masks(generators), validate=False
            ),
        )

    @classmethod
    def point(cls) -> "NamedComplex":
        """Get pt = {∅,{1}} on [1]."""
        return cls(NamedKind.POINT, (), SimplicialComplex(1, [0, 1]))

    def __str__(self) -> str:
        """Render as the command-line shorthand."""
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"


SHORTHAND_PATTERN = re.compile(r"^(?P<kind>[a-z]+)(?::(?P<params>\d+(?:,\d+)*))?$")


def parse_shorthand(text: str) -> NamedComplex | None:
    """Parse shorthands such as simplex:3, bd:3, discrete:2, trivial:2, pure:4,2, pt.

    Args:
        text: Candidate shorthand.

    Returns:
        The named complex, or None when text is not a shorthand.
    """
    match = SHORTHAND_PATTERN.match(text.strip())
    if match is None:
        return None
    try:
        kind = NamedKind(match["kind"])
    except ValueError:
        return None
    raw = match["params"]
    params = tuple(int(p) for p in raw.split(",")) if raw else ()
    expected = {NamedKind.POINT: 0, NamedKind.COMPLETE_PURE: 2}.get(kind, 1)
    if len(params) != expected:
        msg = f"shorthand {text!r} needs {expected} parameter(s)"
        raise DomainError(msg)
    if kind is NamedKind.POINT:
        return NamedComplex.point()
    if kind is NamedKind.COMPLETE_PURE:
        return NamedComplex.complete_pure(*params)
    builders = {
        NamedKind.TRIVIAL: NamedComplex.trivial,
        NamedKind.DISCRETE: NamedComplex.discrete,
        NamedKind.SIMPLEX: NamedComplex.simplex,
        NamedKind.BOUNDARY_SIMPLEX: NamedComplex.boundary_simplex,
    }
    return builders[kind](params[0])
