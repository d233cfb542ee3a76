from hp0.cli.main import app

__all__ = ["app"]
