"""Main entrypoint for the project."""

import logging

import typer

from polyop.src.consts import EXIT_LAW_VIOLATION
from polyop.src.laws import check_registered_operads


def main() -> None:
    """Check the laws of every registered operad at its exhaustive scale."""
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    reports = check_registered_operads()
    failed = [report for report in reports if report.total_violations]
    for report in failed:
        typer.echo(report.format_summary())
    total = sum(report.total_violations for report in reports)
    typer.echo(f"{len(reports)} operads, {total} violations")
    if failed:
        raise typer.Exit(EXIT_LAW_VIOLATION)


if __name__ == "__main__":
    main()
