"""Shared stderr console. stdout is reserved for machine-readable output."""

from rich.console import Console

console = Console(stderr=True)


def warn(message: str) -> None:
    console.print(f"[yellow]Warning:[/yellow] {message}", highlight=False)
