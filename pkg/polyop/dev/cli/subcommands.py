"""Subcommands for the CLI.

They will be automatically imported and added to the CLI
IMPORTANT: All funcs in this file will be added as subcommands.
So best to define the logic elsewhere and just call it here in a wrapper.
"""

from typing import Annotated

import typer

from polyop.src import commands, consts
from polyop.src.operads import power

SOURCE_HELP = "File in the text or JSON format, or a shorthand such as bd:3."


def compose(  # noqa: PLR0913
    left: Annotated[str, typer.Argument(help=SOURCE_HELP)],
    right: Annotated[str, typer.Argument(help=SOURCE_HELP)],
    op: Annotated[
        commands.ComposeOp, typer.Option(help="subst, comp, join or pair.")
    ] = commands.ComposeOp.SUBST,
    slot: Annotated[int, typer.Option(help="The slot k.")] = 1,
    *,
    json: Annotated[bool, typer.Option("--json", help="Print JSON.")] = False,
) -> None:
    """Compose two complexes, or two relative pairs with --op pair."""
    commands.run_command(
        lambda: commands.compose_command(op, slot, left, right, as_json=json)
    )


def facets(
    source: Annotated[str, typer.Argument(help=SOURCE_HELP)],
    *,
    minimal: Annotated[
        bool, typer.Option("--minimal", help="Keep minimal members.")
    ] = False,
    json: Annotated[bool, typer.Option("--json", help="Print JSON.")] = False,
) -> None:
    """Print the inclusionwise maximal members of a family."""
    commands.run_command(
        lambda: commands.facets_command(source, minimal=minimal, as_json=json)
    )


def analyze(source: Annotated[str, typer.Argument(help=SOURCE_HELP)]) -> None:
    """Print closure classes, dimension, minimal non-faces and Euler number."""
    commands.run_command(lambda: commands.analyze_command(source))


def laws(  # noqa: PLR0913
    operad: Annotated[str, typer.Option(help="Registered operad name.")],
    max_arity: Annotated[
        int | None, typer.Option(help="Largest outer arity.")
    ] = None,
    operand_arity: Annotated[
        int | None, typer.Option(help="Largest operand arity.")
    ] = None,
    samples: Annotated[
        int, typer.Option(help="Sampled cases per law, 0 for exhaustive.")
    ] = 0,
    seed: Annotated[int, typer.Option(help="Seed of sampled cases.")] = (
        consts.DEFAULT_SEED
    ),
    workers: Annotated[int, typer.Option(help="Number of processes.")] = 1,
    *,
    records: Annotated[
        bool, typer.Option("--records", help="Print JSON lines.")
    ] = False,
) -> None:
    """Check the unit, parallel, sequential and equivariance laws."""
    commands.run_command(
        lambda: commands.laws_command(
            operad,
            max_arity,
            operand_arity=operand_arity,
            samples=samples,
            seed=seed,
            workers=workers,
            records=records,
        )
    )


def decompose(
    source: Annotated[str, typer.Argument(help=SOURCE_HELP)],
    variant: Annotated[
        power.ComposeVariant, typer.Option(help="subst or comp.")
    ] = power.ComposeVariant.SUBST,
    workers: Annotated[int, typer.Option(help="Number of processes.")] = 1,
) -> None:
    """Write a complex as K ∘k L with neither operand the unit."""
    commands.run_command(
        lambda: commands.decompose_command(source, variant, workers=workers)
    )


def jconstruct(
    source: Annotated[str, typer.Argument(help=SOURCE_HELP)],
    j: Annotated[str, typer.Option("--j", help="Multiplicities, e.g. 2,1,3.")],
    *,
    json: Annotated[bool, typer.Option("--json", help="Print JSON.")] = False,
) -> None:
    """Apply the J-construction and certify the result."""
    commands.run_command(lambda: commands.jconstruct_command(source, j, as_json=json))


def pl(source: Annotated[str, typer.Argument(help=SOURCE_HELP)]) -> None:
    """Print the PL sphere or ball verdict with its provenance."""
    commands.run_command(lambda: commands.pl_command(source))


def convert(
    source: Annotated[str, typer.Argument(help=SOURCE_HELP)],
    to: Annotated[
        commands.OutputFormat, typer.Option(help="text or json.")
    ] = commands.OutputFormat.JSON,
) -> None:
    """Rewrite a family or a relative pair in canonical text or JSON."""
    commands.run_command(lambda: commands.convert_command(source, to))


def enumerate(  # noqa: A001
    n: Annotated[int, typer.Argument(help="Ambient size, at most 5.")],
    *,
    json: Annotated[bool, typer.Option("--json", help="Print JSON lines.")] = False,
) -> None:
    """List every simplicial complex on [n]."""
    commands.run_command(lambda: commands.enumerate_command(n, as_json=json))
