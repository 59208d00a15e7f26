# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module contains helper functions related to logging. The 'lgpc' tool prints its reports with
INFO-level messages, which go to the standard output unchanged, while everything else (debugging
output, warnings, errors) goes to the standard error stream and gets a prefix.
"""

import sys
import types
import logging
import traceback
try:
    # It is OK if 'colorama' is not available, we only lose message coloring.
    import colorama
except ImportError:
    colorama = None

# Report lines, printed as-is.
INFO = logging.INFO
# Same as 'INFO', but adds a "notice:" prefix.
NOTICE = logging.INFO + 1
DEBUG = logging.DEBUG
WARNING = logging.WARNING
ERROR = logging.ERROR
# Same as 'ERROR', but not prefixed. Used for continuation lines of an error report.
ERRINFO = logging.ERROR + 1
CRITICAL = logging.CRITICAL

_PREFIXES = ((WARNING, "warning"), (ERROR, "error"), (CRITICAL, "critical error"),
             (NOTICE, "notice"))

def _format_traceback():
    """Return the current traceback as a list of lines with the logging frames cut off."""

    if sys.exc_info()[0]:
        lines = traceback.format_exc().splitlines()
    else:
        lines = [line.strip() for line in traceback.format_stack()]

    last_idx = len(lines) - 1
    idx = 0
    while idx < len(lines):
        if lines[idx].startswith('  File "'):
            idx += 2
            last_idx = idx
        else:
            idx += 1

    return lines[0:last_idx]

def _error_out(logger, msgformat, *args, print_tb=False):
    """
    Log an error message and terminate the program with exit code 1. The traceback is printed if
    'print_tb' is 'True' or if debugging is enabled.
    """

    if print_tb or logger.getEffectiveLevel() == DEBUG:
        tback = _format_traceback()
        if tback:
            if getattr(logger, "colored", False):
                dim = colorama.Style.RESET_ALL + colorama.Style.DIM
                undim = colorama.Style.RESET_ALL
            else:
                dim = undim = ""
            logger.log(ERRINFO, "--- Debug trace starts here ---")
            logger.log(ERRINFO, "%sAn error occurred, here is the traceback:\n%s%s", dim,
                       "\n".join(tback), undim)
            logger.log(ERRINFO, "--- Debug trace ends here ---\n")

    if args:
        logger.error(msgformat, *args)
    else:
        logger.error("%s", msgformat)

    raise SystemExit(1)

def _notice(logger, fmt, *args):
    """The 'notice()' method for the logger."""
    logger.log(NOTICE, fmt, *args)

class _LgpcFormatter(logging.Formatter):
    """Format messages differently depending on the log level."""

    # pylint: disable=protected-access
    def __init__(self, prefix=None, colors=None):
        """
        The constructor. The arguments are as follows.
          * prefix - the prefix for warning, error and notice messages, usually the program name.
          * colors - a dictionary mapping log levels to 'colorama' color codes.
        """

        super().__init__("%(levelname)s: %(message)s", "%H:%M:%S")

        if not prefix:
            prefix = ""
        if not colors or not colorama:
            colors = {}

        def _colorize(level, text):
            """Wrap 'text' into the color codes of log level 'level'."""

            if level not in colors:
                return text
            return str(colors[level]) + text + str(colorama.Style.RESET_ALL)

        self._fmts = {}
        for lvl, pfx in _PREFIXES:
            if not prefix:
                pfx = pfx.title()
            self._fmts[lvl] = _colorize(lvl, prefix + pfx) + ": %(message)s"

        self._fmts[DEBUG] = "[" + _colorize(DEBUG, "%(asctime)s") + "] [%(module)s,%(lineno)d] " \
                            "%(message)s"
        self._fmts[INFO] = self._fmts[ERRINFO] = "%(message)s"

    def format(self, record):
        """Pick the format string by the record's level and format the record."""

        self._style._fmt = self._fmts.get(record.levelno, "%(message)s")
        return super().format(record)

class _LevelFilter(logging.Filter):
    """Let through only the records of the listed levels."""

    def __init__(self, levels):
        """The constructor."""

        super().__init__()
        self._levels = set(levels)

    def filter(self, record):
        """Return 'True' for records with one of the accepted levels."""
        return record.levelno in self._levels

def setup_logger(prefix=None, loglevel=None, colored=None, info_stream=sys.stdout,
                 error_stream=sys.stderr):
    """
    Setup and return the root logger.
      * prefix - usually the program name, used for "WARNING", "ERROR", "NOTICE" and "CRITICAL"
                 level messages.
      * loglevel - the log level. By default it is derived from the '-q' and '-d' command line
                   options.
      * colored - whether the output should be colored. By default the output is colored if both
                  streams are TTYs or if the '--force-color' command line option is used.
      * info_stream - where "INFO" level messages go, 'sys.stdout' by default.
      * error_stream - where all the other messages go, 'sys.stderr' by default.
    """

    if prefix:
        prefix = f"{prefix}: "

    if not loglevel:
        if "-q" in sys.argv:
            loglevel = WARNING
        elif "-d" in sys.argv:
            loglevel = DEBUG
        else:
            loglevel = INFO

    if not colorama:
        colored = False
    elif colored is None:
        if "--force-color" in sys.argv:
            colored = True
        else:
            colored = info_stream.isatty() and error_stream.isatty()

    logger = logging.getLogger()
    logger.colored = colored
    logger.setLevel(loglevel)

    colors = {}
    if colored:
        colors[DEBUG] = colorama.Fore.GREEN
        colors[WARNING] = colorama.Fore.YELLOW + colorama.Style.BRIGHT
        colors[NOTICE] = colorama.Fore.CYAN + colorama.Style.BRIGHT
        colors[ERROR] = colors[CRITICAL] = colorama.Fore.RED + colorama.Style.BRIGHT

    formatter = _LgpcFormatter(prefix=prefix, colors=colors)

    logger.handlers = []

    handler = logging.StreamHandler(error_stream)
    handler.setFormatter(formatter)
    handler.addFilter(_LevelFilter([DEBUG, WARNING, NOTICE, ERROR, ERRINFO, CRITICAL]))
    logger.addHandler(handler)

    handler = logging.StreamHandler(info_stream)
    handler.setFormatter(formatter)
    handler.addFilter(_LevelFilter([INFO]))
    logger.addHandler(handler)

    logger.notice = types.MethodType(_notice, logger)
    logger.error_out = types.MethodType(_error_out, logger)

    return logger
