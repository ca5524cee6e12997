"""
Main entry point for Monotone Hurwitz Lab.

Usage: python -m monotone_hurwitz {compute,table,verify,cache} ...
"""

import sys

from .cli.commands import main


def cli_main():
    """CLI entry point wrapper."""
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.stderr.write("Cancelled by user\n")
        sys.exit(1)


if __name__ == "__main__":
    cli_main()
