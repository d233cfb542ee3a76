from hp0.cli.frames.base import read_frame

__all__ = ["read_frame"]
