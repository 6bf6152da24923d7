"""Command line interface for HurwitzKit."""

from .main import cli, main

__all__ = ["cli", "main"]
