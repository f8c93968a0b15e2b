"""
Entry point for running taylorlike as a module: python -m taylorlike
"""

from taylorlike.cli.commands import app

if __name__ == "__main__":
    app()
