"""Registry of every operad the law harness knows by name."""

from typing import Any

from polyop.src.errors import DomainError
from polyop.src.operads.base import OperadInstance
from polyop.src.operads.perm import PermOperad
from polyop.src.operads.power import (
    ComTriasOperad,
    HypergraphCompositionOperad,
    HypergraphSubstitutionOperad,
    IdemComComplementOperad,
    IdemComOperad,
    PowerPermOperad,
    ReducedHypergraphSubstitutionOperad,
)
from polyop.src.operads.relscpx import RelativeComplexOperad
from polyop.src.operads.scpx import (
    CheckCompositionOperad,
    CheckSubstitutionOperad,
    CompositionOperad,
    HatCompositionOperad,
    HatSubstitutionOperad,
    NonemptyCompositionOperad,
    NonemptySubstitutionOperad,
    SubstitutionOperad,
    UpwardComplexOperad,
)

OPERAD_CLASSES: tuple[type[OperadInstance[Any]], ...] = (
    PermOperad,
    IdemComOperad,
    IdemComComplementOperad,
    PowerPermOperad,
    ComTriasOperad,
    HypergraphSubstitutionOperad,
    ReducedHypergraphSubstitutionOperad,
    HypergraphCompositionOperad,
    SubstitutionOperad,
    NonemptySubstitutionOperad,
    CompositionOperad,
    NonemptyCompositionOperad,
    UpwardComplexOperad,
    HatSubstitutionOperad,
    CheckSubstitutionOperad,
    HatCompositionOperad,
    CheckCompositionOperad,
    RelativeComplexOperad,
)


def get_operad_names() -> list[str]:
    """Get the registered names in registration order."""
    return [cls.name for cls in OPERAD_CLASSES]


def get_all_operads() -> list[OperadInstance[Any]]:
    """Get a fresh instance of every registered operad."""
    return [cls() for cls in OPERAD_CLASSES]


def get_operad(name: str) -> OperadInstance[Any]:
    """Get a fresh instance of the operad registered under a name.

    Args:
        name: The registered name, e.g. "scpx-subst".

    Returns:
        The operad instance.

    Raises:
        DomainError: If no operad has that name.
    """
    for cls in OPERAD_CLASSES:
        if cls.name == name:
            return cls()
    msg = f"unknown operad {name!r}, expected one of {', '.join(get_operad_names())}"
    raise DomainError(msg)
