"""Verification of the operad axioms for any registered operad.

Four laws are checked. Unit: u ∘₁ A = A and A ∘ᵢ u = A. Parallel: for
i < j, (A ∘ᵢ B) ∘_{j+m-1} C = (A ∘ⱼ C) ∘ᵢ B with m the arity of B.
Sequential: A ∘ᵢ (B ∘ⱼ C) = (A ∘ᵢ B) ∘_{i+j-1} C. Equivariance:
σA ∘_{σ(k)} τB = block(σ, k, τ)(A ∘ₖ B).

Cases are numbered per law in a fixed order, so a report does not depend
on the number of workers: exhaustive cases follow the enumeration order
and sampled case c draws from a generator seeded by (seed, law, c).
"""

import json
import logging
import random
import time
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from functools import partial
from itertools import chain, product
from multiprocessing import Pool
from typing import Any

from polyop.src.consts import (
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    MAX_RECORDED_VIOLATIONS,
)
from polyop.src.errors import DomainError
from polyop.src.operads.base import OperadInstance
from polyop.src.operads.registry import get_all_operads
from polyop.src.permutations import (
    Permutation,
    all_permutations,
    block_permutation,
)

logger = logging.getLogger(__name__)


class Law(StrEnum):
    """The operad axioms."""

    UNIT = "unit"
    PARALLEL = "parallel"
    SEQUENTIAL = "sequential"
    EQUIVARIANCE = "equivariance"


class CheckMode(StrEnum):
    """How the case space is covered."""

    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class LawCase:
    """One instance of a law.

    Attributes:
        law: The law.
        case_id: Index of the case among the cases of its law.
        elements: A, B, C as the law needs them.
        slots: (0,) for the left unit, (i,) for the right unit at i,
            (i, j) for parallel and sequential, (k,) for equivariance.
        permutations: (σ, τ) for equivariance.
    """

    law: Law
    case_id: int
    elements: tuple[Any, ...]
    slots: tuple[int, ...]
    permutations: tuple[Permutation, ...] = ()


@dataclass(frozen=True)
class Violation:
    """A case whose sides differ, with both sides rendered."""

    case: LawCase
    left: str
    right: str

    def __str__(self) -> str:
        """Render as law #id with operands and sides."""
        operands = ", ".join(str(element) for element in self.case.elements)
        return (
            f"{self.case.law} #{self.case.case_id} [{operands}] slots="
            f"{self.case.slots} perms={self.case.permutations}: "
            f"{self.left} ≠ {self.right}"
        )


@dataclass(frozen=True)
class LawTally:
    """Counts for one law and the first violations in case order."""

    checked: int = 0
    violations: int = 0
    witnesses: tuple[Violation, ...] = ()

    def merge(self, other: "LawTally") -> "LawTally":
        """Add the counts and keep the earliest witnesses."""
        witnesses = sorted(
            chain(self.witnesses, other.witnesses),
            key=lambda violation: violation.case.case_id,
        )
        return LawTally(
            self.checked + other.checked,
            self.violations + other.violations,
            tuple(witnesses[:MAX_RECORDED_VIOLATIONS]),
        )


@dataclass(frozen=True)
class LawReport:
    """The outcome of checking every law on one operad.

    Attributes:
        operad: Name of the operad.
        mode: exhaustive or sampled.
        seed: Seed of the sampled mode.
        arity_bound: Largest outer arity.
        operand_bound: Largest operand arity.
        tallies: One tally per law.
        seconds: Wall-clock time, ignored by equality.
    """

    operad: str
    mode: CheckMode
    seed: int
    arity_bound: int
    operand_bound: int
    tallies: dict[Law, LawTally]
    seconds: float = field(default=0.0, compare=False)

    @property
    def total_violations(self) -> int:
        """Number of violations over all laws."""
        return sum(tally.violations for tally in self.tallies.values())

    @property
    def total_cases(self) -> int:
        """Number of cases over all laws."""
        return sum(tally.checked for tally in self.tallies.values())

    def merge(self, other: "LawReport") -> "LawReport":
        """Combine reports over disjoint case sets of the same run."""
        laws = dict.fromkeys(chain(self.tallies, other.tallies))
        return LawReport(
            self.operad,
            self.mode,
            self.seed,
            self.arity_bound,
            self.operand_bound,
            {
                law: self.tallies.get(law, LawTally()).merge(
                    other.tallies.get(law, LawTally())
                )
                for law in laws
            },
            max(self.seconds, other.seconds),
        )

    def format_summary(self) -> str:
        """Render one line per law, the recorded witnesses and a total."""
        lines = [
            f"{self.operad} ({self.mode}, arity ≤ {self.arity_bound}, "
            f"operands ≤ {self.operand_bound}, seed {self.seed})"
        ]
        for law, tally in self.tallies.items():
            lines.append(
                f"  {law}: {tally.checked} cases, {tally.violations} violations"
            )
            lines.extend(f"    {witness}" for witness in tally.witnesses)
        lines.append(f"{self.total_violations} violations")
        return "\n".join(lines)

    def iter_records(self) -> Iterator[str]:
        """Yield JSON lines {"law", "case", "status"}.

        Every recorded violation gives a "fail" record; each law ends with a
        record for case "all" carrying its counts.
        """
        for law, tally in self.tallies.items():
            for witness in tally.witnesses:
                yield json.dumps(
                    {"law": law, "case": witness.case.case_id, "status": "fail"}
                )
            yield json.dumps(
                {
                    "law": law,
                    "case": "all",
                    "status": "fail" if tally.violations else "pass",
                    "checked": tally.checked,
                    "violations": tally.violations,
                }
            )


type CaseShape = tuple[tuple[Any, ...], tuple[int, ...], tuple[Permutation, ...]]


type Universe = dict[int, Sequence[Any]]


def _unit_shapes(
    inst: OperadInstance[Any], outer: Any, operands: Sequence[Any]
) -> Iterator[CaseShape]:
    del operands
    if inst.is_unital():
        for slot in range(inst.arity(outer) + 1):
            yield (outer,), (slot,), ()


def _parallel_shapes(
    inst: OperadInstance[Any], outer: Any, operands: Sequence[Any]
) -> Iterator[CaseShape]:
    arity = inst.arity(outer)
    for first in range(1, arity + 1):
        for second in range(first + 1, arity + 1):
            for middle, last in product(operands, repeat=2):
                yield (outer, middle, last), (first, second), ()


def _sequential_shapes(
    inst: OperadInstance[Any], outer: Any, operands: Sequence[Any]
) -> Iterator[CaseShape]:
    for slot in range(1, inst.arity(outer) + 1):
        for middle in operands:
            for inner_slot in range(1, inst.arity(middle) + 1):
                for last in operands:
                    yield (outer, middle, last), (slot, inner_slot), ()


def _equivariance_shapes(
    inst: OperadInstance[Any], outer: Any, operands: Sequence[Any]
) -> Iterator[CaseShape]:
    arity = inst.arity(outer)
    for sigma in all_permutations(arity):
        for slot in range(1, arity + 1):
            for inner in operands:
                for tau in all_permutations(inst.arity(inner)):
                    yield (outer, inner), (slot,), (sigma, tau)


SHAPES_BY_LAW = {
    Law.UNIT: _unit_shapes,
    Law.PARALLEL: _parallel_shapes,
    Law.SEQUENTIAL: _sequential_shapes,
    Law.EQUIVARIANCE: _equivariance_shapes,
}


def _exhaustive_shapes(
    inst: OperadInstance[Any], law: Law, arity_bound: int, operand_bound: int
) -> Iterator[CaseShape]:
    universe: Universe = {
        arity: inst.enumerate_arity(arity)
        for arity in range(inst.min_arity, max(arity_bound, operand_bound) + 1)
    }
    operands = [
        element
        for arity in range(inst.min_arity, operand_bound + 1)
        for element in universe[arity]
    ]
    shapes = SHAPES_BY_LAW[law]
    for arity in range(inst.min_arity, arity_bound + 1):
        for outer in universe[arity]:
            yield from shapes(inst, outer, operands)


def _random_permutation(size: int, rng: random.Random) -> Permutation:
    return tuple(rng.sample(range(1, size + 1), size))


def _sampled_shape(
    inst: OperadInstance[Any],
    law: Law,
    arity_bound: int,
    operand_bound: int,
    rng: random.Random,
) -> CaseShape | None:
    low = inst.min_arity
    if law is Law.UNIT:
        if not inst.is_unital():
            return None
        arity = rng.randint(low, arity_bound)
        return (inst.sample_arity(arity, rng),), (rng.randint(0, arity),), ()
    if law is Law.PARALLEL:
        if arity_bound < 2:  # noqa: PLR2004
            return None
        arity = rng.randint(max(low, 2), arity_bound)
        first, second = sorted(rng.sample(range(1, arity + 1), 2))
        elements = (
            inst.sample_arity(arity, rng),
            inst.sample_arity(rng.randint(low, operand_bound), rng),
            inst.sample_arity(rng.randint(low, operand_bound), rng),
        )
        return elements, (first, second), ()
    arity = rng.randint(max(low, 1), arity_bound)
    if law is Law.SEQUENTIAL:
        middle_arity = rng.randint(max(low, 1), operand_bound)
        elements = (
            inst.sample_arity(arity, rng),
            inst.sample_arity(middle_arity, rng),
            inst.sample_arity(rng.randint(low, operand_bound), rng),
        )
        slots = (rng.randint(1, arity), rng.randint(1, middle_arity))
        return elements, slots, ()
    inner_arity = rng.randint(low, operand_bound)
    elements = (inst.sample_arity(arity, rng), inst.sample_arity(inner_arity, rng))
    permutations = (
        _random_permutation(arity, rng),
        _random_permutation(inner_arity, rng),
    )
    return elements, (rng.randint(1, arity),), permutations


def iter_cases(  # noqa: PLR0913
    inst: OperadInstance[Any],
    law: Law,
    arity_bound: int,
    mode: CheckMode,
    *,
    count: int = DEFAULT_SAMPLE_COUNT,
    seed: int = DEFAULT_SEED,
    operand_bound: int | None = None,
) -> Iterator[LawCase]:
    """Iterate over the cases of one law in case order.

    Args:
        inst: The operad.
        law: The law.
        arity_bound: Largest outer arity.
        mode: exhaustive or sampled.
        count: Number of sampled cases.
        seed: Seed of the sampled cases.
        operand_bound: Largest operand arity; the operad's own bound when
            omitted.

    Yields:
        The cases, numbered from 0.
    """
    bound = inst.operand_bound if operand_bound is None else operand_bound
    if mode is CheckMode.EXHAUSTIVE:
        shapes = _exhaustive_shapes(inst, law, arity_bound, bound)
        for case_id, (elements, slots, perms) in enumerate(shapes):
            yield LawCase(law, case_id, elements, slots, perms)
        return
    for case_id in range(count):
        rng = random.Random(f"{seed}-{law}-{case_id}")
        shape = _sampled_shape(inst, law, arity_bound, bound, rng)
        if shape is None:
            return
        elements, slots, perms = shape
        yield LawCase(law, case_id, elements, slots, perms)


def evaluate_case(inst: OperadInstance[Any], case: LawCase) -> tuple[Any, Any]:
    """Evaluate both sides of a case.

    Args:
        inst: The operad.
        case: The case.

    Returns:
        The left and the right side.
    """
    compose = inst.compose
    if case.law is Law.UNIT:
        (outer,) = case.elements
        (slot,) = case.slots
        unit = inst.get_unit()
        if slot == 0:
            return compose(unit, 1, outer), outer
        return compose(outer, slot, unit), outer
    if case.law is Law.PARALLEL:
        outer, middle, last = case.elements
        first, second = case.slots
        shift = inst.arity(middle) - 1
        left = compose(compose(outer, first, middle), second + shift, last)
        return left, compose(compose(outer, second, last), first, middle)
    if case.law is Law.SEQUENTIAL:
        outer, middle, last = case.elements
        slot, inner_slot = case.slots
        left = compose(outer, slot, compose(middle, inner_slot, last))
        return left, compose(compose(outer, slot, middle), slot + inner_slot - 1, last)
    outer, inner = case.elements
    (slot,) = case.slots
    sigma, tau = case.permutations
    left = compose(inst.act(outer, sigma), sigma[slot - 1], inst.act(inner, tau))
    right = inst.act(compose(outer, slot, inner), block_permutation(sigma, slot, tau))
    return left, right


def check_case(inst: OperadInstance[Any], case: LawCase) -> Violation | None:
    """Check one case; a domain error on either side is a violation."""
    try:
        left, right = evaluate_case(inst, case)
    except DomainError as error:
        return Violation(case, f"error: {error}", "")
    if left == right:
        return None
    return Violation(case, inst.describe(left), inst.describe(right))


def replay_violation(inst: OperadInstance[Any], violation: Violation) -> bool:
    """Re-evaluate a recorded violation.

    Returns:
        True if the case still fails.
    """
    return check_case(inst, violation.case) is not None


def _check_partition(
    inst: OperadInstance[Any],
    arity_bound: int,
    mode: CheckMode,
    settings: tuple[int, int, int],
    partition: tuple[int, int],
) -> dict[Law, LawTally]:
    count, seed, operand_bound = settings
    index, workers = partition
    tallies = {}
    for law in Law:
        checked = 0
        violations = 0
        witnesses: list[Violation] = []
        cases = iter_cases(
            inst,
            law,
            arity_bound,
            mode,
            count=count,
            seed=seed,
            operand_bound=operand_bound,
        )
        for case in cases:
            if case.case_id % workers != index:
                continue
            checked += 1
            violation = check_case(inst, case)
            if violation is not None:
                violations += 1
                if len(witnesses) < MAX_RECORDED_VIOLATIONS:
                    witnesses.append(violation)
        tallies[law] = LawTally(checked, violations, tuple(witnesses))
    return tallies


def check_laws(  # noqa: PLR0913
    inst: OperadInstance[Any],
    arity_bound: int,
    mode: CheckMode,
    *,
    count: int = DEFAULT_SAMPLE_COUNT,
    seed: int = DEFAULT_SEED,
    operand_bound: int | None = None,
    workers: int = 1,
) -> LawReport:
    """Check the unit, parallel, sequential and equivariance laws.

    Args:
        inst: The operad.
        arity_bound: Largest outer arity, at least the operad's min_arity.
        mode: exhaustive or sampled.
        count: Number of sampled cases per law.
        seed: Seed of the sampled cases.
        operand_bound: Largest operand arity; the operad's own bound when
            omitted.
        workers: Number of processes; cases are dealt out by case id.

    Returns:
        The report; violations are data and never raised.
    """
    if arity_bound < inst.min_arity:
        msg = f"{inst.name} starts at arity {inst.min_arity}, got {arity_bound}"
        raise DomainError(msg)
    bound = inst.operand_bound if operand_bound is None else operand_bound
    start = time.perf_counter()
    run: Callable[[tuple[int, int]], dict[Law, LawTally]] = partial(
        _check_partition, inst, arity_bound, mode, (count, seed, bound)
    )
    partitions = [(index, workers) for index in range(max(workers, 1))]
    if workers > 1:
        with Pool(workers) as pool:
            parts = pool.map(run, partitions)
    else:
        parts = [run((0, 1))]
    empty = LawReport(inst.name, mode, seed, arity_bound, bound, {})
    report = empty
    for tallies in parts:
        report = report.merge(
            LawReport(inst.name, mode, seed, arity_bound, bound, tallies)
        )
    report = LawReport(
        report.operad,
        mode,
        seed,
        arity_bound,
        bound,
        report.tallies,
        time.perf_counter() - start,
    )
    logger.info(
        "%s: %d cases, %d violations in %.2fs",
        inst.name,
        report.total_cases,
        report.total_violations,
        report.seconds,
    )
    return report


def check_registered_operads(workers: int = 1) -> list[LawReport]:
    """Check every registered operad exhaustively at its own scale."""
    return [
        check_laws(
            inst, inst.exhaustive_bound, CheckMode.EXHAUSTIVE, workers=workers
        )
        for inst in get_all_operads()
    ]
