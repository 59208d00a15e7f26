# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# Author: Artem Bityutskiy <artem.bityutskiy@linux.intel.com>

"""
This module contains helpers related to parsing command-line arguments.
"""

import types
import argparse

try:
    import argcomplete
except ImportError:
    # We can live without argcomplete, we only lose tab completions.
    argcomplete = None

from lgpclibs.helperlibs import DamerauLevenshtein, Trivial
from lgpclibs.helperlibs.Exceptions import Error, ErrorBadFormat

def add_input_options(parser):
    """
    Add the options every 'lgpc' sub-command accepts to the 'parser' argument parser object: the
    positional input file path and the '--json' option.
    """

    text = """Path to the input file describing the quiver with relations (the '.lg' format)."""
    arg = parser.add_argument("infile", metavar="INFILE", help=text)
    if argcomplete:
        arg.completer = argcomplete.completers.FilesCompleter()

    text = """Print the report in the machine-readable JSON format instead of the human-readable
              text."""
    parser.add_argument("--json", action="store_true", help=text)

def _add_parser(subparsers, *args, **kwargs):
    """
    Override the 'add_parser()' method of the 'subparsers' object (the action object returned by
    'add_subparsers()'), in order to squeeze newlines and extra white-spaces out of the
    "description" keyword argument. The descriptions are written as indented triple-quoted strings
    in the tool module, and the raw white-space would otherwise leak into generated man pages.
    """

    if "description" in kwargs:
        kwargs["description"] = " ".join(kwargs["description"].split())
    return subparsers.__orig_add_parser(*args, **kwargs) # pylint: disable=protected-access

class ArgsParser(argparse.ArgumentParser):
    """
    This class re-defines the 'error()' method of the 'argparse.ArgumentParser' class in order to
    make it always print a hint about the '-h' option and suggest the closest sub-command name on
    a typo. It also adds the standard '-h', '-q', '-d' and '--version' options.
    """

    def __init__(self, *args, **kwargs):
        """
        All tools using this module support the '-q' and '-d' options. The 'ver' keyword argument,
        if provided, is the version string printed by the '--version' option.
        """

        version = kwargs.pop("ver", None)

        kwargs["add_help"] = False
        super().__init__(*args, **kwargs)

        text = "Show this help message and exit."
        self.add_argument("-h", dest="help", action="help", help=text)
        text = "Be quiet."
        self.add_argument("-q", dest="quiet", action="store_true", help=text)
        text = "Print debugging information."
        self.add_argument("-d", dest="debug", action="store_true", help=text)
        if version:
            text = "Print version and exit."
            self.add_argument("--version", action="version", help=text, version=version)

    def parse_args(self, *args, **kwargs): # pylint: disable=signature-differs
        """Verify that '-d' and '-q' are not used at the same time."""

        args = super().parse_args(*args, **kwargs)

        if getattr(args, "quiet", False) and getattr(args, "debug", False):
            raise Error("-q and -d cannot be used together")

        return args

    def add_subparsers(self, *args, **kwargs):
        """
        Create and return the subparsers action object with a customized 'add_parser()' method.
        Refer to '_add_parser()' for details.
        """

        subparsers = super().add_subparsers(*args, **kwargs)
        setattr(subparsers, "__orig_add_parser", subparsers.add_parser)
        subparsers.add_parser = types.MethodType(_add_parser, subparsers)

        return subparsers

    def error(self, message):
        """Print the error message and exit with status 2."""

        if "invalid choice: " not in message:
            message += "\nUse -h for help."
        else:
            offending, opts = message.split(" (choose from ")
            offending = offending.split("invalid choice: ")[1].strip("'")
            opts = [opt.strip(")'") for opt in Trivial.split_csv_line(opts)]
            suggestion = DamerauLevenshtein.closest_match(offending, opts)
            if suggestion:
                message = f"bad argument '{offending}', use '{self.prog} -h'.\n\nThe most " \
                          f"similar argument is\n        {suggestion}"

        super().error(message)

def parse_natural(value, name):
    """
    Turn string 'value' into a non-negative integer and return it. The 'name' argument is used in
    the error message.
    """

    if not Trivial.is_int(value) or int(value) < 0:
        raise ErrorBadFormat(f"bad {name} '{value}', should be a non-negative integer")
    return int(value)
