"""
Command-line driver: parse, resolve configuration, dispatch, render.
"""

import logging
import sys
from typing import List, Optional, TextIO

from core.errors import ColoringError, MatroidInputError, RefusalError
from utils.config import Config, get_config
from utils.constants import ExitCodes
from utils.log import configure_logging
from .commands import COMMAND_TABLE, RunConfig
from .output import write_result
from .parser import parse_args

logger = logging.getLogger(__name__)


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdout: Destination of the rendered result (default: sys.stdout)

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # argparse reports usage errors with exit status 2
        return ExitCodes.USAGE if e.code not in (0, None) else ExitCodes.OK

    configure_logging(args.verbose)
    try:
        config = Config(args.config) if args.config else get_config()
        run_config = RunConfig.from_args(args, config)
        result = COMMAND_TABLE[args.command](run_config)
        write_result(result, run_config.fmt, run_config.output, stdout)
    except RefusalError as e:
        logger.error("refused: %s", e)
        return ExitCodes.EXHAUSTED
    except (MatroidInputError, ColoringError, ValueError) as e:
        logger.error("%s", e)
        return ExitCodes.USAGE
    except OSError as e:
        logger.error("cannot write output: %s", e)
        return ExitCodes.USAGE

    if run_config.input is not None:
        config.add_recent_input(run_config.input)
        config.sync()
    logger.debug("%s finished with exit code %d", args.command, result.exit_code)
    return result.exit_code
