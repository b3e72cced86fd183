"""CLI commands for bubble."""

from bubblelab.cli.commands.complex import complex_command
from bubblelab.cli.commands.enumerate import enumerate_command
from bubblelab.cli.commands.paths import paths_command
from bubblelab.cli.commands.poset import poset_command
from bubblelab.cli.commands.sweep import sweep_command
from bubblelab.cli.commands.triangle import triangle_command
from bubblelab.cli.commands.verify import verify_command

__all__ = [
    "complex_command",
    "enumerate_command",
    "paths_command",
    "poset_command",
    "sweep_command",
    "triangle_command",
    "verify_command",
]
