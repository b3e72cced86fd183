"""CLI package for bubblelab."""

from bubblelab.cli.main import app

__all__ = ["app"]
