"""
Main entry point for MatroidKit.

Parses the command line and runs one command; the return value is the process
exit code.
"""

import sys
from typing import List, Optional

from cli import run


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code: 0 valid/found, 2 bad input, 10 refuted/nonexistent, 20 exhausted/refused
    """
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
