__version__ = "0.1.0"


def main():
    from hp0.cli.main import app

    app()
