"""Command-line entry point: `python fearbrake.py <command> ...`."""

import sys

from src.presentation.main import main

if __name__ == "__main__":
    sys.exit(main())
