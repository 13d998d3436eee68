"""Logic behind the command-line subcommands.

Every command takes plain values, returns a CommandResult with the text to
print and the exit status, and raises DomainError or ResourceBoundError on
bad input. run_command turns those errors into exit statuses.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

import typer

from polyop.src.consts import (
    EMPTY_DIMENSION_TOKEN,
    EXIT_DOMAIN_ERROR,
    EXIT_LAW_VIOLATION,
    EXIT_OK,
    EXIT_RESOURCE_ERROR,
    PAIR_SHORTHAND_SEPARATOR,
)
from polyop.src.errors import DomainError, ResourceBoundError
from polyop.src.families.enumeration import enumerate_complexes
from polyop.src.families.family import Family, RelativePair, SimplicialComplex
from polyop.src.families.formats import (
    format_family_json,
    format_family_text,
    format_pair_json,
    format_pair_text,
    is_pair_document,
    parse_complex,
    parse_family,
    parse_pair,
)
from polyop.src.families.named import parse_shorthand
from polyop.src.families.operations import (
    ExtremalMode,
    NonFaceMode,
    classify,
    dimension,
    extremals,
    is_pure,
    join,
    non_faces,
)
from polyop.src.laws import CheckMode, check_laws
from polyop.src.operads.decompose import decompose
from polyop.src.operads.power import ComposeVariant
from polyop.src.operads.registry import get_operad
from polyop.src.operads.relscpx import join_compose
from polyop.src.operads.scpx import compose
from polyop.src.pl.certificates import certify_complex, format_provenance
from polyop.src.pl.jconstruction import certified_j_construction
from polyop.src.pl.recognition import euler_characteristic

logger = logging.getLogger(__name__)


class ComposeOp(StrEnum):
    """Operations of the compose subcommand."""

    SUBST = "subst"
    COMP = "comp"
    JOIN = "join"
    PAIR = "pair"


class OutputFormat(StrEnum):
    """Document formats."""

    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class CommandResult:
    """Text to print and the exit status."""

    output: str
    exit_code: int = EXIT_OK


def read_source(source: str) -> str:
    """Read a document from a file path.

    Raises:
        DomainError: If the path is not a readable file.
    """
    path = Path(source)
    if not path.is_file():
        msg = f"{source!r} is neither a file nor a shorthand"
        raise DomainError(msg)
    return path.read_text(encoding="utf-8")


def load_family(source: str) -> Family:
    """Load a family from a shorthand or a file."""
    named = parse_shorthand(source)
    if named is not None:
        return named.realized
    return parse_family(read_source(source))


def load_complex(source: str) -> SimplicialComplex:
    """Load a simplicial complex from a shorthand or a file."""
    named = parse_shorthand(source)
    if named is not None:
        return named.realized
    return parse_complex(read_source(source))


def load_pair(source: str) -> RelativePair:
    """Load a relative pair from total//sub shorthands or a file."""
    if PAIR_SHORTHAND_SEPARATOR in source:
        total, sub = source.split(PAIR_SHORTHAND_SEPARATOR, 1)
        return RelativePair(load_complex(total), load_complex(sub))
    return parse_pair(read_source(source))


def _render(family: Family, *, as_json: bool) -> str:
    text = format_family_json(family) if as_json else format_family_text(family)
    return text.rstrip("\n")


def _render_pair(pair: RelativePair, *, as_json: bool) -> str:
    text = format_pair_json(pair) if as_json else format_pair_text(pair)
    return text.rstrip("\n")


def compose_command(
    op: ComposeOp, slot: int, left: str, right: str, *, as_json: bool = False
) -> CommandResult:
    """Compose two complexes or two relative pairs.

    Args:
        op: subst, comp, join (slot ignored) or pair.
        slot: The slot k.
        left: Source of the outer operand.
        right: Source of the inner operand.
        as_json: Print JSON instead of text.

    Returns:
        The composite in canonical order.
    """
    if op is ComposeOp.PAIR:
        pair = join_compose(load_pair(left), slot, load_pair(right))
        return CommandResult(_render_pair(pair, as_json=as_json))
    outer = load_complex(left)
    inner = load_complex(right)
    if op is ComposeOp.JOIN:
        result = join(outer, inner)
    else:
        result = compose(outer, slot, inner, ComposeVariant(op.value))
    return CommandResult(_render(result, as_json=as_json))


def facets_command(
    source: str, *, minimal: bool = False, as_json: bool = False
) -> CommandResult:
    """Print the maximal, or minimal, members of a family."""
    mode = ExtremalMode.MINIMAL if minimal else ExtremalMode.MAXIMAL
    return CommandResult(_render(extremals(load_family(source), mode), as_json=as_json))


def analyze_command(source: str) -> CommandResult:
    """Print the closure classes and, for complexes, the usual invariants."""
    family = load_family(source)
    flags = classify(family)
    lines = [
        f"n {family.ambient}",
        f"members {len(family)}",
        f"simplicial {flags.is_simplicial}",
        f"upward {flags.is_upward}",
        f"transversal {flags.is_transversal}",
        f"reduced {flags.is_reduced}",
    ]
    if flags.is_simplicial:
        complex_ = SimplicialComplex.from_family(family)
        dim = dimension(complex_)
        lines.append(f"dimension {EMPTY_DIMENSION_TOKEN if dim is None else dim}")
        if not complex_.is_empty():
            lines.append(f"pure {is_pure(complex_)}")
            lines.append(f"euler {euler_characteristic(complex_)}")
        lines.append(f"ghosts {list(complex_.ghost_vertices())}")
        lines.append(f"mnf {non_faces(complex_, NonFaceMode.MNF)}")
    if flags.is_upward and not flags.is_simplicial:
        lines.append(f"mnu {non_faces(family, NonFaceMode.MNU)}")
    return CommandResult("\n".join(lines))


def laws_command(  # noqa: PLR0913
    operad: str,
    max_arity: int | None = None,
    *,
    operand_arity: int | None = None,
    samples: int = 0,
    seed: int = 0,
    workers: int = 1,
    records: bool = False,
) -> CommandResult:
    """Check the operad laws on a registered operad.

    Args:
        operad: Registered name.
        max_arity: Largest outer arity; the operad's exhaustive bound when
            omitted.
        operand_arity: Largest operand arity.
        samples: Sampled cases per law; 0 checks exhaustively.
        seed: Seed of the sampled cases.
        workers: Number of processes.
        records: Print JSON lines instead of the summary.

    Returns:
        The report, with exit status 3 when a law fails.
    """
    inst = get_operad(operad)
    mode = CheckMode.SAMPLED if samples > 0 else CheckMode.EXHAUSTIVE
    report = check_laws(
        inst,
        inst.exhaustive_bound if max_arity is None else max_arity,
        mode,
        count=samples,
        seed=seed,
        operand_bound=operand_arity,
        workers=workers,
    )
    output = "\n".join(report.iter_records()) if records else report.format_summary()
    code = EXIT_LAW_VIOLATION if report.total_violations else EXIT_OK
    return CommandResult(output, code)


def decompose_command(
    source: str, variant: ComposeVariant, *, workers: int = 1
) -> CommandResult:
    """Print a witness K ∘_k L for a complex, or "indecomposable"."""
    witness = decompose(load_complex(source), variant, workers=workers)
    if witness is None:
        return CommandResult("indecomposable")
    lines = [
        f"slot {witness.slot}",
        "outer",
        _render(witness.outer, as_json=False),
        "inner",
        _render(witness.inner, as_json=False),
    ]
    return CommandResult("\n".join(lines))


def parse_multiplicities(text: str) -> list[int]:
    """Parse J from "2,1,3".

    Raises:
        DomainError: If an entry is not an integer.
    """
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as err:
        msg = f"J must be comma-separated integers, got {text!r}"
        raise DomainError(msg) from err


def jconstruct_command(source: str, j: str, *, as_json: bool = False) -> CommandResult:
    """Print K(J) followed by its certificate."""
    result, certificate = certified_j_construction(
        load_complex(source), parse_multiplicities(j)
    )
    lines = [_render(result, as_json=as_json), format_provenance(certificate)]
    return CommandResult("\n".join(lines))


def pl_command(source: str) -> CommandResult:
    """Print the PL verdict and its provenance."""
    certificate = certify_complex(load_complex(source))
    return CommandResult(
        f"verdict {certificate.claim}\n{format_provenance(certificate)}"
    )


def convert_command(source: str, to: OutputFormat) -> CommandResult:
    """Rewrite a family or a pair in canonical text or JSON."""
    as_json = to is OutputFormat.JSON
    if PAIR_SHORTHAND_SEPARATOR in source:
        return CommandResult(_render_pair(load_pair(source), as_json=as_json))
    named = parse_shorthand(source)
    if named is not None:
        return CommandResult(_render(named.realized, as_json=as_json))
    text = read_source(source)
    if is_pair_document(text):
        return CommandResult(_render_pair(parse_pair(text), as_json=as_json))
    return CommandResult(_render(parse_family(text), as_json=as_json))


def enumerate_command(ambient: int, *, as_json: bool = False) -> CommandResult:
    """List every complex on [n] in canonical order, one per line."""
    complexes = enumerate_complexes(ambient)
    if as_json:
        lines = [format_family_json(complex_).rstrip("\n") for complex_ in complexes]
    else:
        lines = [str(complex_) for complex_ in complexes]
        lines.append(f"{len(complexes)} complexes on [{ambient}]")
    return CommandResult("\n".join(lines))


def run_command(command: Callable[[], CommandResult]) -> None:
    """Run a command, print its output and exit with its status.

    Raises:
        typer.Exit: With status 1 on a domain error, 2 on an exceeded bound
            and the command's own status when it is nonzero.
    """
    try:
        result = command()
    except ResourceBoundError as err:
        logger.warning("resource bound exceeded: %s", err)
        typer.echo(f"error: {err}", err=True)
        raise typer.Exit(EXIT_RESOURCE_ERROR) from err
    except DomainError as err:
        logger.warning("invalid input: %s", err)
        typer.echo(f"error: {err}", err=True)
        raise typer.Exit(EXIT_DOMAIN_ERROR) from err
    typer.echo(result.output)
    if result.exit_code != EXIT_OK:
        raise typer.Exit(result.exit_code)
