"""
Logging setup for command-line runs.

All diagnostics go to stderr so that stdout carries only the (deterministic) result.
"""

import logging
import sys
from typing import Optional, TextIO

_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0, stream: Optional[TextIO] = None) -> None:
    """
    Install a single stream handler on the root logger.

    Args:
        verbosity: 0 = WARNING, 1 = INFO, 2+ = DEBUG
        stream: Target stream (default: stderr)
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
