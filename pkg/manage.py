#!/usr/bin/env python
"""Command-line entry point for the lab and Django's administrative tasks."""
import sys


def main():
    try:
        from lab.cli import run
    except ImportError as exc:
        raise ImportError(
            "Couldn't import the lab. Are Django, numpy and sympy installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    sys.exit(run(sys.argv))


if __name__ == "__main__":
    main()
