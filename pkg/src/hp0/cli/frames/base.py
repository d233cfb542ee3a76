"""Reading a frame file into a validated GaleFrame."""

from pathlib import Path

from hp0.cli.frames.registry import load_parser, resolve_parser
from hp0.console import warn
from hp0.matroid import FrameError, GaleFrame


def read_frame(path: Path, parser: str | None = None) -> GaleFrame:
    """Parse and validate; unreadable files surface as FrameError."""
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FrameError(f"cannot read {path}: {e.strerror or e}") from None
    k, n, rows = load_parser(resolve_parser(path, parser)).parse(content)
    if n < 1:
        raise FrameError(f"n must be at least 1, got {n}")
    if k < 0:
        raise FrameError(f"k must be non-negative, got {k}")
    frame = GaleFrame(k=k, n=n, rows=tuple(tuple(r) for r in rows))
    if frame.loops:
        cols = ", ".join(str(i + 1) for i in sorted(frame.loops))
        warn(f"zero columns {cols}: every quotient vanishes")
    return frame
