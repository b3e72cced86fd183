"""Main CLI application for bubblelab."""

import logging
from typing import Annotated

import typer

from bubblelab import __version__
from bubblelab.cli.commands.complex import complex_command
from bubblelab.cli.commands.enumerate import enumerate_command
from bubblelab.cli.commands.paths import paths_command
from bubblelab.cli.commands.poset import poset_command
from bubblelab.cli.commands.sweep import sweep_command
from bubblelab.cli.commands.triangle import triangle_command
from bubblelab.cli.commands.verify import verify_command

app = typer.Typer(
    name="bubble",
    help="bubblelab - bubble and shuffle lattices, their complexes and triangles",
    no_args_is_help=True,
)

# -- Structure commands ------------------------------------------------------
app.command("enumerate")(enumerate_command)
app.command("poset")(poset_command)
app.command("complex")(complex_command)
app.command("paths")(paths_command)

# -- Polynomial commands -----------------------------------------------------
app.command("triangle")(triangle_command)
app.command("verify")(verify_command)
app.command("sweep")(sweep_command)


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        typer.echo(f"bubble {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            "-v",
            callback=version_callback,
            is_eager=True,
            help="Show version and exit.",
        ),
    ] = None,
    verbose: Annotated[
        bool,
        typer.Option("--verbose", help="Enable verbose logging"),
    ] = False,
) -> None:
    """bubblelab - bubble and shuffle lattices, their complexes and triangles."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s: %(message)s")
    else:
        logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")


if __name__ == "__main__":
    app()
