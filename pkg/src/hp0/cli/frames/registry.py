"""Extension -> parser dispatch for frame files.

Anything that is not recognised by extension is read as the plain text format.
"""

import importlib
from pathlib import Path

# Parser name -> module path
MODULES = {
    "text": "hp0.cli.frames.text",
    "json": "hp0.cli.frames.json_frame",
}

DEFAULT_BY_EXT = {
    ".json": "json",
    ".frame": "text",
    ".txt": "text",
}


def load_parser(name: str):
    """Import and return a parser module by name."""
    return importlib.import_module(MODULES[name])


def resolve_parser(path: Path, parser: str | None = None) -> str:
    if parser is not None and parser not in MODULES:
        raise ValueError(f"Unknown frame format '{parser}'. Choose from: {', '.join(sorted(MODULES))}")
    return parser or DEFAULT_BY_EXT.get(path.suffix.lower(), "text")
