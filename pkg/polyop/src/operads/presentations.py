"""Presentations by generators and relations of ComTrias and ℘(Perm).

Relations are not rewritten; both sides are evaluated with the subset
kernel and compared.
"""

import logging
from dataclasses import dataclass
from itertools import product

from polyop.src.families.subset import Subset
from polyop.src.operads.power import ComposeVariant, subset_compose
from polyop.src.permutations import transposition
from polyop.src.utils import full_mask

logger = logging.getLogger(__name__)

# generators of ComTrias in arity two
COMTRIAS_GENERATORS: dict[str, Subset] = {
    "a": Subset(2, 0b01),
    "b": Subset(2, 0b10),
    "c": Subset(2, 0b11),
}

# each relation lists terms x∘_k y that must all coincide
type Term = tuple[str, int, str]

COMTRIAS_RELATIONS: tuple[tuple[str, tuple[Term, ...]], ...] = (
    ("■□□", (("a", 1, "a"), ("a", 2, "a"), ("a", 2, "b"), ("a", 2, "c"))),
    ("□□■", (("b", 2, "b"), ("b", 1, "a"), ("b", 1, "b"), ("b", 1, "c"))),
    ("□■□", (("a", 1, "b"), ("b", 2, "a"))),
    ("■□■", (("c", 1, "a"), ("c", 2, "b"))),
    ("□■■", (("c", 1, "b"), ("b", 2, "c"))),
    ("■■□", (("a", 1, "c"), ("c", 2, "a"))),
    ("■■■", (("c", 1, "c"), ("c", 2, "c"))),
)


@dataclass(frozen=True)
class RelationCheck:
    """The outcome of one relation.

    Attributes:
        label: Name of the relation.
        equalities: Number of pairwise equalities the relation states.
        holds: Whether every equality holds.
        detail: The evaluated sides, or the first counterexample.
    """

    label: str
    equalities: int
    holds: bool
    detail: str


@dataclass(frozen=True)
class PresentationReport:
    """The outcomes of all relations of a presentation."""

    name: str
    checks: tuple[RelationCheck, ...]

    @property
    def total_equalities(self) -> int:
        """Number of pairwise equalities checked."""
        return sum(check.equalities for check in self.checks)

    @property
    def holding_equalities(self) -> int:
        """Number of pairwise equalities in relations that hold."""
        return sum(check.equalities for check in self.checks if check.holds)

    def all_hold(self) -> bool:
        """Check whether every relation holds."""
        return all(check.holds for check in self.checks)

    def format_summary(self) -> str:
        """Render one line per relation and a total."""
        lines = [
            f"{check.label}: {'pass' if check.holds else 'FAIL'} ({check.detail})"
            for check in self.checks
        ]
        lines.append(
            f"{self.name}: {self.holding_equalities}/{self.total_equalities} hold"
        )
        return "\n".join(lines)


def _evaluate(term: Term) -> Subset:
    outer, slot, inner = term
    return subset_compose(
        COMTRIAS_GENERATORS[outer],
        slot,
        COMTRIAS_GENERATORS[inner],
        ComposeVariant.SUBST,
    )


def comtrias_relations_check() -> PresentationReport:
    """Verify the eleven ComTrias relations and the swap of generators.

    The generators are {1}, {2} and {1,2} in [2] under substitution. A final
    check confirms that the transposition of [2] exchanges {1} and {2} and
    fixes {1,2}.

    Returns:
        The report, one entry per relation plus the swap.
    """
    checks = []
    for label, terms in COMTRIAS_RELATIONS:
        values = [_evaluate(term) for term in terms]
        holds = all(value == values[0] for value in values)
        rendered = " = ".join(
            f"{x}∘{k}{y}↦{value}"
            for (x, k, y), value in zip(terms, values, strict=True)
        )
        checks.append(RelationCheck(label, len(terms) - 1, holds, rendered))
    swap = transposition(2, 1, 2)
    images = {name: gen.relabel(swap) for name, gen in COMTRIAS_GENERATORS.items()}
    swap_holds = (
        images["a"] == COMTRIAS_GENERATORS["b"]
        and images["b"] == COMTRIAS_GENERATORS["a"]
        and images["c"] == COMTRIAS_GENERATORS["c"]
    )
    checks.append(RelationCheck("(12)", 0, swap_holds, "a↔b, c fixed"))
    report = PresentationReport("comtrias", tuple(checks))
    logger.info(
        "comtrias relations: %d/%d hold",
        report.holding_equalities,
        report.total_equalities,
    )
    return report


def _power(outer: Subset, slot: int, inner: Subset) -> Subset:
    return subset_compose(outer, slot, inner, ComposeVariant.POWER)


def empty_relations_check() -> PresentationReport:
    """Verify the relations involving ∅₀ in ℘(Perm), over all binary elements.

    With I, I', J, J', J'' ranging over the subsets of [2], the relations
    are I∘₁∅₀ = I'∘₂∅₀, (I∘₁∅₀)∘₁(I∘₁∅₀) = I∘₁∅₀ and
    (I∘₁∅₀)∘₁J = J'∘₁(I∘₁∅₀) = J''∘₂(I∘₁∅₀). A last check confirms that
    every composite with an empty operand on either side is empty.

    Returns:
        The report, one entry per relation.
    """
    empty0 = Subset(0)
    binary = [Subset(2, mask) for mask in range(full_mask(2) + 1)]
    checks = []

    counterexample = next(
        (
            f"I={i}, I'={i2}"
            for i, i2 in product(binary, repeat=2)
            if _power(i, 1, empty0) != _power(i2, 2, empty0)
        ),
        None,
    )
    checks.append(_empty_check("I∘₁∅₀ = I'∘₂∅₀", counterexample))

    counterexample = next(
        (
            f"I={i}"
            for i in binary
            if _power(_power(i, 1, empty0), 1, _power(i, 1, empty0))
            != _power(i, 1, empty0)
        ),
        None,
    )
    checks.append(_empty_check("(I∘₁∅₀)∘₁(I∘₁∅₀) = I∘₁∅₀", counterexample))

    counterexample = None
    for i, j, j1, j2 in product(binary, repeat=4):
        unary = _power(i, 1, empty0)
        sides = {_power(unary, 1, j), _power(j1, 1, unary), _power(j2, 2, unary)}
        if len(sides) != 1:
            counterexample = f"I={i}, J={j}, J'={j1}, J''={j2}"
            break
    label = "(I∘₁∅₀)∘₁J = J'∘₁(I∘₁∅₀) = J''∘₂(I∘₁∅₀)"
    checks.append(_empty_check(label, counterexample))

    counterexample = None
    for x, y in product(binary, repeat=2):
        for slot in (1, 2):
            if not x.mask or not y.mask:
                composite = _power(x, slot, y)
                if composite.mask:
                    counterexample = f"{x}∘{slot}{y}↦{composite}"
    checks.append(_empty_check("∅ absorbs", counterexample))

    report = PresentationReport("power-perm", tuple(checks))
    logger.info(
        "empty relations: %d/%d hold",
        report.holding_equalities,
        report.total_equalities,
    )
    return report


def _empty_check(label: str, counterexample: str | None) -> RelationCheck:
    if counterexample is None:
        return RelationCheck(label, 1, holds=True, detail="all binary elements")
    return RelationCheck(label, 1, holds=False, detail=counterexample)
