"""
Command-line interface.

Every operation is a subcommand with JSON, table or CSV output and a stable
exit-code contract.
"""

from .app import run
from .commands import COMMAND_TABLE, RunConfig
from .output import CommandResult, render

__all__ = [
    'run',
    'COMMAND_TABLE',
    'RunConfig',
    'CommandResult',
    'render',
]
